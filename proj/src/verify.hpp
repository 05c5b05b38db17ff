#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "base_graph.hpp"
#include "oracle.hpp"

namespace sierpdist {

// Result of one exhaustive oracle-equivalence sweep at a fixed level.
// Eccentricity extrema fall out of the all-source scan for free and are
// reported so callers can check the tree closed forms without re-scanning.
struct VerifyReport {
  int level = 0;
  std::int64_t comparisons = 0;
  std::int64_t mismatches = 0;
  std::int64_t oracle_diameter = 0;
  std::int64_t oracle_radius = 0;
  std::vector<std::int64_t> extreme_ecc;  // oracle eccentricity of v^t per base vertex
  std::vector<std::string> notes;         // first few mismatch descriptions
};

// Compares every applicable recursive method against BFS on the explicit
// graph, over all vertex pairs in the method's scope:
//   - extreme-to-word tables from every extreme vertex (all bases),
//   - the extreme-extreme and complete-base closed forms where they apply,
//   - within-copy base-distance reductions (last-letter pairs),
//   - theta-form predictions for tree / bipartite / triangle-free bases and
//     for sources whose differing letter lies on no cycle,
// plus per-query spot checks of the public entry points on sampled pairs.
VerifyReport verify_level(const BaseGraph& g, const ExplicitSierpinski& s,
                          unsigned threads = 0);
VerifyReport verify_level(const BaseGraph& g, int t, std::uint64_t budget = kDefaultVertexBudget,
                          unsigned threads = 0);

}  // namespace sierpdist
