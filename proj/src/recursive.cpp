#include "recursive.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace sierpdist {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

std::int64_t pow2(int k) { return static_cast<std::int64_t>(1) << k; }

std::int64_t narrow(__int128 v) {
  if (v < 0 || v > std::numeric_limits<std::int64_t>::max())
    fail(Errc::validation, "distance exceeds the 64-bit range");
  return static_cast<std::int64_t>(v);
}

void require_base(const BaseGraph& g) {
  if (g.order() < 2) fail(Errc::validation, "base graph must have at least 2 vertices");
  if (!is_connected(g)) fail(Errc::validation, "base graph must be connected");
}

void check_level(int t) {
  if (t < 1 || t > kMaxLevel)
    fail(Errc::validation, "level must be in [1, " + std::to_string(kMaxLevel) + "]");
}

// Memoized extreme-vertex recursion bound to one suffix word. eval(v) is
// d_{S(G,L)}(v^L, word) for the whole bound word; the memo is shared across
// eval calls so minimizing over several start vertices stays linear.
class SuffixEval {
 public:
  SuffixEval(const BaseGraph& g, std::span<const int> word)
      : g_(g),
        w_(word),
        len_(static_cast<int>(word.size())),
        memo_(static_cast<std::size_t>(g.order()) * (len_ + 1), -1) {}

  std::int64_t eval(int v) { return re(v, 0); }

 private:
  std::int64_t re(int v, int s) {
    auto& slot = memo_[static_cast<std::size_t>(v) * (len_ + 1) + s];
    if (slot >= 0) return slot;
    int i = s;
    while (i < len_ - 1 && w_[i] == v) ++i;
    std::int64_t res;
    if (i == len_ - 1) {
      res = dist(g_, v, w_[len_ - 1]);
    } else {
      const PathMeta& m = g_.star_meta(v, w_[i]);
      std::int64_t best = kInf;
      for (int u : m.nu) best = std::min(best, re(u, i + 1));
      int remaining = len_ - i;
      res = narrow(static_cast<__int128>(best) +
                   (static_cast<__int128>(pow2(remaining)) - 1) * m.d -
                   (pow2(remaining - 1) - 1));
    }
    slot = res;
    return res;
  }

  const BaseGraph& g_;
  std::span<const int> w_;
  int len_;
  std::vector<std::int64_t> memo_;
};

void validate_pair_query(const BaseGraph& g, const Word& w, const Word& w2) {
  if (w.size() != w2.size()) fail(Errc::validation, "words must have equal length");
  check_level(static_cast<int>(w.size()));
  validate_word(w, g.order(), static_cast<int>(w.size()));
  validate_word(w2, g.order(), static_cast<int>(w2.size()));
  require_base(g);
}

struct ThetaParams {
  bool use_phi_prime = false;
  Method tag = Method::bipartite;
};

// Shared skeleton of the pairwise formulas: split the common prefix, reduce
// trivial tails, then evaluate theta (and theta' when requested) over the
// phi / phi' neighbour pairs of the first differing letters.
QueryResult theta_form(const BaseGraph& g, const Word& w, const Word& w2, ThetaParams p) {
  const int t = static_cast<int>(w.size());
  PrefixSplit sp = split_common_prefix(w, w2);
  QueryResult r;
  if (sp.j == t + 1) return r;  // equal words
  if (sp.j == t) {
    r.distance = dist(g, w[t - 1], w2[t - 1]);
    return r;
  }
  const int j = sp.j;
  const int x = w[j - 1], y = w2[j - 1];
  const PathMeta& meta = g.double_star_meta(x, y);
  const int k = t - j;  // suffix length
  std::span<const int> sx(w.data() + j, static_cast<std::size_t>(k));
  std::span<const int> sy(w2.data() + j, static_cast<std::size_t>(k));
  SuffixEval ex(g, sx), ey(g, sy);

  std::int64_t lam = kInf;
  for (const auto& [u, v] : meta.phi)
    lam = std::min(lam, narrow(static_cast<__int128>(ex.eval(u)) + ey.eval(v)));
  const __int128 stretch = (static_cast<__int128>(pow2(k + 1)) - 1) * meta.d;
  std::int64_t theta = narrow(lam + stretch - 2 * (pow2(k) - 1));

  r.method = p.tag;
  r.lambda = lam;
  r.theta = theta;
  r.distance = theta;
  if (p.use_phi_prime && !meta.phi_prime.empty()) {
    std::int64_t lamp = kInf;
    for (const auto& [u, v] : meta.phi_prime)
      lamp = std::min(lamp, narrow(static_cast<__int128>(ex.eval(u)) + ey.eval(v)));
    std::int64_t theta_prime = narrow(lamp + stretch + 1);
    r.lambda_prime = lamp;
    r.theta_prime = theta_prime;
    r.distance = std::min(theta, theta_prime);
  }
  return r;
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::extreme_extreme: return "extreme-extreme";
    case Method::algorithm_1: return "algorithm-1";
    case Method::complete_closed_form: return "complete-closed-form";
    case Method::algorithm_2: return "algorithm-2";
    case Method::bipartite: return "bipartite";
    case Method::conditional: return "conditional";
    case Method::tree: return "tree";
    case Method::lemma_1_reduction: return "lemma-1-reduction";
    case Method::oracle_fallback: return "oracle-fallback";
  }
  return "unknown";
}

std::int64_t extreme_extreme_dist(const BaseGraph& g, int x, int y, int t) {
  check_level(t);
  g.check_vertex(x);
  g.check_vertex(y);
  require_base(g);
  return narrow((static_cast<__int128>(pow2(t)) - 1) * dist(g, x, y));
}

std::int64_t extreme_to_suffix(const BaseGraph& g, int x, std::span<const int> w) {
  check_level(static_cast<int>(w.size()));
  g.check_vertex(x);
  for (int c : w) g.check_vertex(c);
  require_base(g);
  return SuffixEval(g, w).eval(x);
}

std::int64_t extreme_to_word(const BaseGraph& g, int x, const Word& w) {
  return extreme_to_suffix(g, x, w);
}

std::int64_t complete_extreme_to_word(int n, int x, const Word& w) {
  if (n < 2) fail(Errc::validation, "complete base must have at least 2 vertices");
  const int t = static_cast<int>(w.size());
  check_level(t);
  if (x < 0 || x >= n) fail(Errc::validation, "vertex id out of range");
  validate_word(w, n, t);
  std::int64_t total = 0;
  for (int i = 0; i < t; ++i)
    if (w[i] != x) total += pow2(t - 1 - i);
  return total;
}

QueryResult triangle_free_dist(const BaseGraph& g, const Word& w, const Word& w2) {
  validate_pair_query(g, w, w2);
  if (!is_triangle_free(g)) fail(Errc::applicability, "base graph contains a triangle");
  return theta_form(g, w, w2, {.use_phi_prime = true, .tag = Method::algorithm_2});
}

QueryResult bipartite_dist(const BaseGraph& g, const Word& w, const Word& w2) {
  validate_pair_query(g, w, w2);
  if (!is_bipartite(g)) fail(Errc::applicability, "base graph is not bipartite");
  return theta_form(g, w, w2, {.use_phi_prime = false, .tag = Method::bipartite});
}

QueryResult conditional_dist(const BaseGraph& g, const Word& w, const Word& w2,
                             bool assert_premiss_b) {
  validate_pair_query(g, w, w2);
  PrefixSplit sp = split_common_prefix(w, w2);
  if (sp.j < static_cast<int>(w.size()) && !assert_premiss_b) {
    int x = w[sp.j - 1];
    if (!lies_on_no_cycle(g, x))
      fail(Errc::applicability, "vertex " + std::to_string(x) +
                                    " lies on a cycle and the path premiss was not asserted");
  }
  return theta_form(g, w, w2, {.use_phi_prime = false, .tag = Method::conditional});
}

QueryResult best_dist(const BaseGraph& g, const Word& w, const Word& w2,
                      const QueryOptions& opts) {
  if (w.size() != w2.size()) fail(Errc::validation, "words must have equal length");
  const int t = static_cast<int>(w.size());
  check_level(t);
  validate_word(w, g.order(), t);
  validate_word(w2, g.order(), t);
  if (!is_connected(g)) fail(Errc::validation, "base graph must be connected");

  QueryResult r;
  if (g.order() == 1) return r;  // the only word is 0^t
  PrefixSplit sp = split_common_prefix(w, w2);
  if (sp.j == t + 1) return r;
  if (sp.j == t) {
    r.distance = dist(g, w[t - 1], w2[t - 1]);
    return r;
  }
  const int j = sp.j;
  const int reduced = t - j + 1;
  std::span<const int> wr(w.data() + (j - 1), static_cast<std::size_t>(reduced));
  std::span<const int> wr2(w2.data() + (j - 1), static_cast<std::size_t>(reduced));
  const bool c1 = is_constant(wr), c2 = is_constant(wr2);
  if (c1 && c2) {
    r.distance = narrow((static_cast<__int128>(pow2(reduced)) - 1) * dist(g, wr[0], wr2[0]));
    r.method = Method::extreme_extreme;
    return r;
  }
  if (c1 || c2) {
    const int xv = c1 ? wr[0] : wr2[0];
    std::span<const int> other = c1 ? wr2 : wr;
    if (is_complete(g)) {
      r.distance = complete_extreme_to_word(g.order(), xv, Word(other.begin(), other.end()));
      r.method = Method::complete_closed_form;
    } else {
      r.distance = extreme_to_suffix(g, xv, other);
      r.method = Method::algorithm_1;
    }
    return r;
  }
  if (is_tree(g)) return theta_form(g, w, w2, {.use_phi_prime = false, .tag = Method::tree});
  if (is_bipartite(g))
    return theta_form(g, w, w2, {.use_phi_prime = false, .tag = Method::bipartite});
  if (is_triangle_free(g))
    return theta_form(g, w, w2, {.use_phi_prime = true, .tag = Method::algorithm_2});
  if (lies_on_no_cycle(g, w[j - 1]))
    return theta_form(g, w, w2, {.use_phi_prime = false, .tag = Method::conditional});
  if (lies_on_no_cycle(g, w2[j - 1]))
    return theta_form(g, w2, w, {.use_phi_prime = false, .tag = Method::conditional});
  if (opts.assert_premiss_b)
    return theta_form(g, w, w2, {.use_phi_prime = false, .tag = Method::conditional});
  if (opts.allow_oracle_fallback) {
    ExplicitSierpinski s(g, reduced, opts.oracle_budget);
    r.distance = s.dist(Word(wr.begin(), wr.end()), Word(wr2.begin(), wr2.end()));
    r.method = Method::oracle_fallback;
    return r;
  }
  fail(Errc::applicability,
       "no exact method applies to this base graph; enable the oracle fallback");
}

ExtremeDistTable::ExtremeDistTable(const BaseGraph& g, int t, std::uint64_t max_entries)
    : n_(g.order()), t_(t) {
  check_level(t);
  require_base(g);
  pow_.assign(t + 1, 1);
  std::uint64_t total = 0;
  for (int k = 1; k <= t; ++k) {
    if (static_cast<std::uint64_t>(pow_[k - 1]) > max_entries / static_cast<std::uint64_t>(n_))
      fail(Errc::budget, "extreme-distance table budget exceeded");
    pow_[k] = pow_[k - 1] * n_;
    total += static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(pow_[k]);
    if (total > max_entries) fail(Errc::budget, "extreme-distance table budget exceeded");
  }

  levels_.resize(t);
  levels_[0].resize(static_cast<std::size_t>(n_) * n_);
  for (int v = 0; v < n_; ++v) {
    const auto& row = g.bfs_row(v);
    for (int z = 0; z < n_; ++z) {
      if (row[z] < 0) fail(Errc::unreachable, "base graph must be connected");
      levels_[0][static_cast<std::size_t>(v) * n_ + z] = row[z];
    }
  }
  for (int k = 2; k <= t; ++k) {
    const auto& prev = levels_[k - 2];
    auto& cur = levels_[k - 1];
    cur.resize(static_cast<std::size_t>(n_) * pow_[k]);
    const std::int64_t sz = pow_[k - 1];
    for (int v = 0; v < n_; ++v) {
      for (int z = 0; z < n_; ++z) {
        std::int64_t* dst = cur.data() + static_cast<std::size_t>(v) * pow_[k] + z * sz;
        if (z == v) {
          // common leading letter: one level down, same start vertex
          std::memcpy(dst, prev.data() + static_cast<std::size_t>(v) * sz,
                      static_cast<std::size_t>(sz) * sizeof(std::int64_t));
          continue;
        }
        const PathMeta& m = g.star_meta(v, z);
        const std::int64_t c = (pow2(k) - 1) * m.d - (pow2(k - 1) - 1);
        const std::int64_t* first = prev.data() + static_cast<std::size_t>(m.nu[0]) * sz;
        for (std::int64_t s = 0; s < sz; ++s) dst[s] = first[s];
        for (std::size_t ui = 1; ui < m.nu.size(); ++ui) {
          const std::int64_t* pu = prev.data() + static_cast<std::size_t>(m.nu[ui]) * sz;
          for (std::int64_t s = 0; s < sz; ++s) dst[s] = std::min(dst[s], pu[s]);
        }
        for (std::int64_t s = 0; s < sz; ++s) dst[s] += c;
      }
    }
  }
}

}  // namespace sierpdist
