#include "trees.hpp"

#include <algorithm>
#include <limits>

#include "recursive.hpp"

namespace sierpdist {

namespace {

std::int64_t pow2(int k) { return static_cast<std::int64_t>(1) << k; }

std::int64_t narrow(__int128 v) {
  if (v < 0 || v > std::numeric_limits<std::int64_t>::max())
    fail(Errc::validation, "distance exceeds the 64-bit range");
  return static_cast<std::int64_t>(v);
}

void check_level(int t) {
  if (t < 1 || t > kMaxLevel)
    fail(Errc::validation, "level must be in [1, " + std::to_string(kMaxLevel) + "]");
}

}  // namespace

TreeBase::TreeBase(const BaseGraph& g) : g_(g) {
  if (g.order() < 2) fail(Errc::validation, "tree base must have at least 2 vertices");
  if (!is_tree(g)) fail(Errc::validation, "base graph is not a tree");
  ecc_.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const auto& row = g.bfs_row(v);
    ecc_[v] = *std::max_element(row.begin(), row.end());
  }
  diameter_ = *std::max_element(ecc_.begin(), ecc_.end());
  radius_ = *std::min_element(ecc_.begin(), ecc_.end());
}

int TreeBase::eccentricity(int u) const {
  g_.check_vertex(u);
  return ecc_[u];
}

void TreeBase::check_order3() const {
  if (g_.order() < 3)
    fail(Errc::applicability, "closed forms require a tree of order at least 3");
}

std::int64_t TreeBase::dist(const Word& w, const Word& w2) const {
  if (w.size() != w2.size()) fail(Errc::validation, "words must have equal length");
  const int t = static_cast<int>(w.size());
  check_level(t);
  validate_word(w, g_.order(), t);
  validate_word(w2, g_.order(), t);
  PrefixSplit sp = split_common_prefix(w, w2);
  if (sp.j == t + 1) return 0;
  if (sp.j == t) return sierpdist::dist(g_, w[t - 1], w2[t - 1]);
  const int j = sp.j;
  const int k = t - j;
  const PathMeta& meta = g_.double_star_meta(w[j - 1], w2[j - 1]);
  const auto& [xn, yn] = meta.phi.front();  // unique path: singleton
  std::span<const int> sx(w.data() + j, static_cast<std::size_t>(k));
  std::span<const int> sy(w2.data() + j, static_cast<std::size_t>(k));
  const __int128 stretch = (static_cast<__int128>(pow2(k + 1)) - 1) * meta.d;
  return narrow(static_cast<__int128>(extreme_to_suffix(g_, xn, sx)) +
                extreme_to_suffix(g_, yn, sy) + stretch - 2 * (pow2(k) - 1));
}

std::int64_t TreeBase::extreme_eccentricity(int u, int t) const {
  check_order3();
  check_level(t);
  g_.check_vertex(u);
  // (2^t - 1) ecc(u) + (2^t - t - 1)(D - 2)
  const __int128 a = (static_cast<__int128>(pow2(t)) - 1) * ecc_[u];
  const __int128 b = (static_cast<__int128>(pow2(t)) - t - 1) * (diameter_ - 2);
  return narrow(a + b);
}

std::int64_t TreeBase::sierpinski_diameter(int t) const {
  check_order3();
  check_level(t);
  // (3*2^t - 2t - 3) D - 4 (2^t - t - 1)
  const __int128 coeff = 3 * static_cast<__int128>(pow2(t)) - 2 * t - 3;
  return narrow(coeff * diameter_ - 4 * (static_cast<__int128>(pow2(t)) - t - 1));
}

std::int64_t TreeBase::sierpinski_radius(int t) const {
  check_order3();
  check_level(t);
  const __int128 coeff = 3 * static_cast<__int128>(pow2(t)) - 2 * t - 3;
  __int128 numerator;
  if (diameter_ % 2 == 0)
    numerator = coeff * diameter_ - 4 * (static_cast<__int128>(pow2(t)) - t - 1);
  else
    numerator = coeff * diameter_ - 4 * static_cast<__int128>(pow2(t)) + 4 * t + 5;
  if (numerator % 2 != 0) fail(Errc::validation, "radius numerator is not even");
  return narrow(numerator / 2);
}

namespace {

// S(K2,t) is the path on 2^t vertices.
bool is_order2_tree(const BaseGraph& g) { return g.order() == 2 && g.edge_count() == 1; }

}  // namespace

MetricResult sierpinski_diameter(const BaseGraph& g, int t, std::uint64_t budget) {
  check_level(t);
  if (is_order2_tree(g)) return {pow2(t) - 1, true};
  if (is_tree(g)) return {TreeBase(g).sierpinski_diameter(t), true};
  ExplicitSierpinski s(g, t, budget);
  return {s.diameter(), false};
}

MetricResult sierpinski_radius(const BaseGraph& g, int t, std::uint64_t budget) {
  check_level(t);
  if (is_order2_tree(g)) return {pow2(t - 1), true};
  if (is_tree(g)) return {TreeBase(g).sierpinski_radius(t), true};
  ExplicitSierpinski s(g, t, budget);
  return {s.radius(), false};
}

MetricResult sierpinski_extreme_ecc(const BaseGraph& g, int u, int t, std::uint64_t budget) {
  check_level(t);
  g.check_vertex(u);
  if (is_order2_tree(g)) return {pow2(t) - 1, true};
  if (is_tree(g)) return {TreeBase(g).extreme_eccentricity(u, t), true};
  ExplicitSierpinski s(g, t, budget);
  return {s.eccentricity(make_extreme(u, t)), false};
}

}  // namespace sierpdist
