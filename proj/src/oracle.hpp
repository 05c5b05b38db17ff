#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "base_graph.hpp"
#include "words.hpp"

namespace sierpdist {

inline constexpr std::uint64_t kDefaultVertexBudget = 2'000'000;

// Explicitly materialized S(G,t) over dense mixed-radix word indices
// (index = sum u_i * n^(t-i), u_1 most significant). Built recursively:
// n shifted copies of level t-1 plus one linking edge per base edge.
//
// Ground truth for every recursive formula; all queries are plain BFS.
class ExplicitSierpinski {
 public:
  ExplicitSierpinski(const BaseGraph& g, int t,
                     std::uint64_t max_vertices = kDefaultVertexBudget);

  int base_order() const { return n_; }
  int level() const { return t_; }
  std::int64_t order() const { return order_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(nbr_.size()) / 2; }

  std::int64_t word_to_index(const Word& w) const;
  Word index_to_word(std::int64_t idx) const;
  std::int64_t extreme_index(int x) const;

  std::span<const std::int32_t> neighbors(std::int64_t idx) const;
  std::int64_t degree(std::int64_t idx) const;

  std::int64_t dist(const Word& w, const Word& w2) const;
  std::int64_t dist_index(std::int64_t a, std::int64_t b) const;

  // Full BFS row from src; distances fit in int32 (order is budget-capped).
  std::vector<std::int32_t> bfs_from(std::int64_t src) const;
  // Fills a caller-owned row; avoids reallocation in all-source scans.
  void bfs_fill(std::int64_t src, std::vector<std::int32_t>& row) const;
  std::vector<std::int32_t> bfs_parents(std::int64_t src) const;

  // One BFS shortest path, endpoints inclusive.
  std::vector<Word> shortest_path(const Word& w, const Word& w2) const;

  std::int64_t eccentricity(const Word& w) const;
  std::int64_t diameter() const;
  std::int64_t radius() const;

  // Deterministic DOT output: nodes in index order labelled with the word
  // text, one line per undirected edge with endpoints sorted.
  void export_dot(std::ostream& os) const;

 private:
  int n_;
  int t_;
  std::int64_t order_;
  std::vector<std::int64_t> off_;
  std::vector<std::int32_t> nbr_;

  mutable std::mutex mu_;
  mutable std::optional<std::pair<std::int64_t, std::int64_t>> diam_rad_;

  void check_index(std::int64_t idx) const;
  std::pair<std::int64_t, std::int64_t> scan_diameter_radius() const;
};

// True iff u and v are adjacent in S(G,t), decided structurally from the
// edge description (no materialized graph needed).
bool words_adjacent(const BaseGraph& g, const Word& u, const Word& v);

// Collapses a path in S(G,t) to its sequence of distinct-consecutive first
// letters. Validates that the input really is a path.
std::vector<int> g_path(const BaseGraph& g, const std::vector<Word>& path);

}  // namespace sierpdist
