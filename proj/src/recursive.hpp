#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "base_graph.hpp"
#include "oracle.hpp"
#include "words.hpp"

namespace sierpdist {

// Levels above this overflow 64-bit distances even for d_G = 2.
inline constexpr int kMaxLevel = 62;

enum class Method {
  extreme_extreme,
  algorithm_1,
  complete_closed_form,
  algorithm_2,
  bipartite,
  conditional,
  tree,
  lemma_1_reduction,
  oracle_fallback,
};

const char* method_name(Method m);

// Distance value plus provenance: which formula produced it, and the
// intermediate candidates when the triangle-free recursion ran.
struct QueryResult {
  std::int64_t distance = 0;
  Method method = Method::lemma_1_reduction;
  std::optional<std::int64_t> theta;
  std::optional<std::int64_t> theta_prime;  // absent when phi' is empty
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> lambda_prime;
};

// d_{S(G,t)}(x^t, y^t) = (2^t - 1) d_G(x, y).
std::int64_t extreme_extreme_dist(const BaseGraph& g, int x, int y, int t);

// d_{S(G,t)}(x^t, w) by the extreme-vertex recursion: strip leading letters
// equal to x, then minimize over the neighbours of the first differing
// letter that lie on shortest paths from x. Memoized on (vertex, position)
// within one query, so a query costs O(|V| t) sub-calls.
std::int64_t extreme_to_word(const BaseGraph& g, int x, const Word& w);
std::int64_t extreme_to_suffix(const BaseGraph& g, int x, std::span<const int> w);

// Complete-base closed form: sum of 2^(t-i) over positions i with w_i != x.
std::int64_t complete_extreme_to_word(int n, int x, const Word& w);

// min(theta, theta') recursion for triangle-free bases.
QueryResult triangle_free_dist(const BaseGraph& g, const Word& w, const Word& w2);
// theta-only form, valid unconditionally on bipartite bases.
QueryResult bipartite_dist(const BaseGraph& g, const Word& w, const Word& w2);
// theta-only form under the no-cycle premiss on the first differing letter
// of w; callers may instead assert the path-structure premiss themselves.
QueryResult conditional_dist(const BaseGraph& g, const Word& w, const Word& w2,
                             bool assert_premiss_b = false);

struct QueryOptions {
  bool allow_oracle_fallback = false;
  bool assert_premiss_b = false;
  std::uint64_t oracle_budget = kDefaultVertexBudget;
};

// Routes to the strongest applicable method; see README for the order.
QueryResult best_dist(const BaseGraph& g, const Word& w, const Word& w2,
                      const QueryOptions& opts = {});

// Dense tables of d_{S(G,k)}(v^k, w) for every v, every word w of length k,
// k = 1..t. Batch form of the extreme-to-word recursion over mixed-radix
// word indices; backs the exhaustive verification sweeps.
class ExtremeDistTable {
 public:
  ExtremeDistTable(const BaseGraph& g, int t, std::uint64_t max_entries = 80'000'000);

  int level() const { return t_; }
  std::int64_t words(int k) const { return pow_[k]; }

  std::int64_t dist(int v, int k, std::int64_t word_index) const {
    return levels_[k - 1][static_cast<std::size_t>(v) * pow_[k] + word_index];
  }
  // Contiguous row over all word indices of length k for extreme vertex v.
  std::span<const std::int64_t> row(int v, int k) const {
    return {levels_[k - 1].data() + static_cast<std::size_t>(v) * pow_[k],
            static_cast<std::size_t>(pow_[k])};
  }

 private:
  int n_;
  int t_;
  std::vector<std::int64_t> pow_;                 // pow_[k] = n^k
  std::vector<std::vector<std::int64_t>> levels_;  // levels_[k-1]: n * n^k values
};

}  // namespace sierpdist
