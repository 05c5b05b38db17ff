#pragma once

// Test-only oracles, kept independent of the library's query paths: path
// enumeration by plain DFS and all-pairs distances by Floyd-Warshall.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "base_graph.hpp"

namespace brute {

inline std::vector<std::vector<int>> all_simple_paths(const sierpdist::BaseGraph& g, int x, int y,
                                                      int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{x};
  std::vector<char> used(g.order(), 0);
  used[x] = 1;
  auto dfs = [&](auto&& self, int u) -> void {
    if (u == y) {
      out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) - 1 >= max_len) return;
    for (int v : g.neighbors(u)) {
      if (used[v]) continue;
      used[v] = 1;
      path.push_back(v);
      self(self, v);
      path.pop_back();
      used[v] = 0;
    }
  };
  dfs(dfs, x);
  return out;
}

inline std::vector<std::vector<int>> floyd_warshall(const sierpdist::BaseGraph& g) {
  const int n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (int u : g.neighbors(v)) d[v][u] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// nu / phi / phi' derived purely from enumerated paths.
struct PairSets {
  int d = -1;
  std::set<int> nu;
  std::set<std::pair<int, int>> phi;
  std::set<std::pair<int, int>> phi_prime;
};

inline PairSets pair_sets(const sierpdist::BaseGraph& g, int x, int y) {
  PairSets out;
  auto fw = floyd_warshall(g);
  out.d = fw[x][y];
  auto paths = all_simple_paths(g, x, y, out.d + 1);
  for (const auto& p : paths) {
    int len = static_cast<int>(p.size()) - 1;
    if (len == out.d) {
      out.nu.insert(p[len - 1]);
      out.phi.emplace(p[1], p[len - 1]);
    } else if (len == out.d + 1) {
      out.phi_prime.emplace(p[1], p[len - 1]);
    }
  }
  return out;
}

// x lies on a cycle iff two of its neighbours stay connected in G - x.
inline bool on_cycle(const sierpdist::BaseGraph& g, int x) {
  const auto& nbrs = g.neighbors(x);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      // BFS from nbrs[i] avoiding x
      std::vector<char> seen(g.order(), 0);
      std::vector<int> stack{nbrs[i]};
      seen[nbrs[i]] = 1;
      seen[x] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u))
          if (!seen[v]) {
            seen[v] = 1;
            stack.push_back(v);
          }
      }
      if (seen[nbrs[j]]) return true;
    }
  return false;
}

}  // namespace brute
