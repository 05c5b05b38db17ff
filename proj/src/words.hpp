#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace sierpdist {

// A vertex of S(G,t): a length-t word of base-vertex ids, most significant
// letter first.
using Word = std::vector<int>;

// First position (1-based) at which two equal-length words differ.
// j == t+1 means the words are equal.
struct PrefixSplit {
  int j = 1;
  Word shared_prefix;
};

Word make_extreme(int x, int t);
bool is_constant(std::span<const int> letters);
bool is_extreme(const Word& w);

PrefixSplit split_common_prefix(const Word& w, const Word& w2);

// Text syntax "u1,u2,...,ut" with decimal ids.
Word parse_word(std::string_view text, int n, int t);
std::string format_word(std::span<const int> w);

void validate_word(const Word& w, int n, int t);

}  // namespace sierpdist
