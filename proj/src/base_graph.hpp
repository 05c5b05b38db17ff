#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sierpdist {

// Node-expansion cap for the exact-length simple-path search behind phi'.
inline constexpr std::uint64_t kDefaultPathSearchBudget = 10'000'000;

// Shortest-path metadata for an ordered vertex pair (x, y).
struct PathMeta {
  int d = 0;                                   // d_G(x, y)
  std::vector<int> nu;                         // neighbours of y on shortest x-y paths
  std::vector<std::pair<int, int>> phi;        // (x', y') neighbour pairs over shortest paths
  std::vector<std::pair<int, int>> phi_prime;  // same over simple paths of length d+1
};

// Immutable simple undirected graph on vertex ids 0..n-1.
//
// All queries are const and safe to call from multiple threads; BFS rows,
// pair metadata and the bridge set are cached behind a mutex on first use.
class BaseGraph {
 public:
  BaseGraph(int n, const std::vector<std::pair<int, int>>& edges);

  BaseGraph(const BaseGraph& other);
  BaseGraph& operator=(const BaseGraph&) = delete;

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int x, int y) const;
  std::vector<std::pair<int, int>> edges() const;

  // BFS distances from src; -1 marks unreachable vertices. Cached.
  const std::vector<int>& bfs_row(int src) const;

  const PathMeta& star_meta(int x, int y) const;         // d + nu
  const PathMeta& double_star_meta(int x, int y) const;  // d + phi + phi'

  bool edge_is_bridge(int x, int y) const;

  void check_vertex(int v) const;

 private:
  int n_;
  int edge_count_;
  std::vector<std::vector<int>> adj_;

  mutable std::mutex mu_;
  mutable std::vector<std::optional<std::vector<int>>> bfs_cache_;
  mutable std::map<std::pair<int, int>, PathMeta> star_cache_;
  mutable std::map<std::pair<int, int>, PathMeta> dstar_cache_;
  mutable std::optional<std::set<std::pair<int, int>>> bridges_;

  std::vector<int> run_bfs(int src) const;
  const std::set<std::pair<int, int>>& bridge_set() const;
};

// Edge-list format: first non-comment line "n m", then m lines "u v".
// Lines starting with '#' and blank lines are ignored.
BaseGraph load_graph(std::string_view text);
BaseGraph load_graph_file(const std::string& path);

int dist(const BaseGraph& g, int x, int y);
PathMeta dist_star(const BaseGraph& g, int x, int y);
PathMeta dist_double_star(const BaseGraph& g, int x, int y,
                          std::uint64_t search_budget = kDefaultPathSearchBudget);

bool is_connected(const BaseGraph& g);
bool is_tree(const BaseGraph& g);
bool is_bipartite(const BaseGraph& g);
bool is_triangle_free(const BaseGraph& g);
bool is_complete(const BaseGraph& g);

// True iff every edge incident to x is a bridge.
bool lies_on_no_cycle(const BaseGraph& g, int x);

}  // namespace sierpdist
