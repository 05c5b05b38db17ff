#include "words.hpp"

#include <charconv>

namespace sierpdist {

Word make_extreme(int x, int t) {
  if (t < 1) fail(Errc::validation, "word length must be at least 1");
  return Word(static_cast<std::size_t>(t), x);
}

bool is_constant(std::span<const int> letters) {
  for (int c : letters)
    if (c != letters.front()) return false;
  return true;
}

bool is_extreme(const Word& w) { return !w.empty() && is_constant(w); }

PrefixSplit split_common_prefix(const Word& w, const Word& w2) {
  if (w.size() != w2.size()) fail(Errc::validation, "words must have equal length");
  PrefixSplit s;
  std::size_t i = 0;
  while (i < w.size() && w[i] == w2[i]) ++i;
  s.j = static_cast<int>(i) + 1;
  s.shared_prefix.assign(w.begin(), w.begin() + i);
  return s;
}

Word parse_word(std::string_view text, int n, int t) {
  Word w;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      fail(Errc::parse, "malformed word letter \"" + std::string(token) + "\"");
    w.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  validate_word(w, n, t);
  return w;
}

std::string format_word(std::span<const int> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

void validate_word(const Word& w, int n, int t) {
  if (static_cast<int>(w.size()) != t)
    fail(Errc::validation, "expected a word of length " + std::to_string(t) + ", got " +
                               std::to_string(w.size()));
  for (int c : w)
    if (c < 0 || c >= n)
      fail(Errc::validation,
           "word letter " + std::to_string(c) + " out of range [0, " + std::to_string(n) + ")");
}

}  // namespace sierpdist
