#pragma once

#include <cstdint>
#include <vector>

#include "base_graph.hpp"
#include "oracle.hpp"
#include "words.hpp"

namespace sierpdist {

// Tree base with cached per-vertex eccentricities. The closed forms for
// eccentricity, diameter and radius of S(T,t) require order >= 3; order-2
// trees are the path special case handled by the dispatchers below.
class TreeBase {
 public:
  explicit TreeBase(const BaseGraph& g);

  const BaseGraph& graph() const { return g_; }
  int order() const { return g_.order(); }
  int eccentricity(int u) const;
  int tree_diameter() const { return diameter_; }
  int tree_radius() const { return radius_; }

  // Unique-path distance in S(T,t): both phi sets are singletons, so the
  // pairwise recursion loses its minimization.
  std::int64_t dist(const Word& w, const Word& w2) const;

  std::int64_t extreme_eccentricity(int u, int t) const;
  std::int64_t sierpinski_diameter(int t) const;
  std::int64_t sierpinski_radius(int t) const;

 private:
  const BaseGraph& g_;
  std::vector<int> ecc_;
  int diameter_ = 0;
  int radius_ = 0;

  void check_order3() const;
};

struct MetricResult {
  std::int64_t value = 0;
  bool closed_form = false;  // tree closed form vs. oracle scan
};

// Closed forms on tree bases (including the order-2 path case), oracle
// all-source scans otherwise.
MetricResult sierpinski_diameter(const BaseGraph& g, int t,
                                 std::uint64_t budget = kDefaultVertexBudget);
MetricResult sierpinski_radius(const BaseGraph& g, int t,
                               std::uint64_t budget = kDefaultVertexBudget);
MetricResult sierpinski_extreme_ecc(const BaseGraph& g, int u, int t,
                                    std::uint64_t budget = kDefaultVertexBudget);

}  // namespace sierpdist
