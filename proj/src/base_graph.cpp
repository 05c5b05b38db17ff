#include "base_graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace sierpdist {

namespace {

std::string edge_str(int x, int y) {
  return "{" + std::to_string(x) + "," + std::to_string(y) + "}";
}

}  // namespace

BaseGraph::BaseGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 1) fail(Errc::validation, "graph must have at least one vertex");
  adj_.resize(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::validation, "vertex id " + std::to_string(u < 0 || u >= n ? u : v) +
                                 " out of range [0, " + std::to_string(n) + ")");
    if (u == v) fail(Errc::validation, "self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) fail(Errc::validation, "duplicate edge " + edge_str(key.first, key.second));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  edge_count_ = static_cast<int>(edges.size());
  bfs_cache_.resize(n_);
}

BaseGraph::BaseGraph(const BaseGraph& other)
    : n_(other.n_), edge_count_(other.edge_count_), adj_(other.adj_) {
  bfs_cache_.resize(n_);
}

void BaseGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(Errc::validation,
         "vertex id " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
}

const std::vector<int>& BaseGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool BaseGraph::has_edge(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  const auto& nbrs = adj_[x];
  return std::binary_search(nbrs.begin(), nbrs.end(), y);
}

std::vector<std::pair<int, int>> BaseGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> BaseGraph::run_bfs(int src) const {
  std::vector<int> d(n_, -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj_[u])
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push(v);
      }
  }
  return d;
}

const std::vector<int>& BaseGraph::bfs_row(int src) const {
  check_vertex(src);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = bfs_cache_[src];
  if (!slot) slot = run_bfs(src);
  return *slot;
}

int dist(const BaseGraph& g, int x, int y) {
  g.check_vertex(y);
  int d = g.bfs_row(x)[y];
  if (d < 0)
    fail(Errc::unreachable,
         "vertices " + std::to_string(x) + " and " + std::to_string(y) + " are unreachable");
  return d;
}

const PathMeta& BaseGraph::star_meta(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) fail(Errc::validation, "nu(x,y) is undefined for x == y");
  const auto& row = bfs_row(x);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = star_cache_.find({x, y});
  if (it != star_cache_.end()) return it->second;
  if (row[y] < 0)
    fail(Errc::unreachable,
         "vertices " + std::to_string(x) + " and " + std::to_string(y) + " are unreachable");
  PathMeta m;
  m.d = row[y];
  for (int v : adj_[y])
    if (row[v] == m.d - 1) m.nu.push_back(v);
  return star_cache_.emplace(std::make_pair(x, y), std::move(m)).first->second;
}

PathMeta dist_star(const BaseGraph& g, int x, int y) { return g.star_meta(x, y); }

namespace {

// Enumerates simple x-y paths of length exactly d+1 and collects their
// (first step, last step) pairs. Exact-length search is only ever run on the
// base graph, never on S(G,t); the expansion cap keeps pathological inputs
// from spinning.
std::vector<std::pair<int, int>> collect_phi_prime(const BaseGraph& g, int x, int y, int d,
                                                   std::uint64_t budget) {
  const int target_len = d + 1;
  const auto& row_y = g.bfs_row(y);
  std::set<std::pair<int, int>> found;
  std::vector<char> on_path(g.order(), 0);
  std::vector<int> path{x};
  std::uint64_t expansions = 0;

  auto dfs = [&](auto&& self, int u, int used) -> void {
    if (++expansions > budget)
      fail(Errc::budget, "phi-prime path enumeration exceeded node budget");
    if (u == y) {
      if (used == target_len) found.emplace(path[1], path[used - 1]);
      return;
    }
    int remaining = target_len - used;
    if (remaining <= 0) return;
    for (int v : g.neighbors(u)) {
      if (on_path[v] || row_y[v] > remaining - 1) continue;
      on_path[v] = 1;
      path.push_back(v);
      self(self, v, used + 1);
      path.pop_back();
      on_path[v] = 0;
    }
  };

  on_path[x] = 1;
  dfs(dfs, x, 0);
  return {found.begin(), found.end()};
}

PathMeta compute_double_star(const BaseGraph& g, int x, int y, std::uint64_t budget) {
  PathMeta m;
  m.d = dist(g, x, y);
  if (m.d == 1) {
    m.phi.emplace_back(y, x);
  } else {
    for (int a : g.neighbors(x)) {
      const auto& row_a = g.bfs_row(a);
      for (int b : g.neighbors(y))
        if (row_a[b] == m.d - 2) m.phi.emplace_back(a, b);
    }
  }
  m.phi_prime = collect_phi_prime(g, x, y, m.d, budget);
  return m;
}

}  // namespace

const PathMeta& BaseGraph::double_star_meta(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) fail(Errc::validation, "phi(x,y) is undefined for x == y");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dstar_cache_.find({x, y});
    if (it != dstar_cache_.end()) return it->second;
  }
  PathMeta m = compute_double_star(*this, x, y, kDefaultPathSearchBudget);
  std::lock_guard<std::mutex> lock(mu_);
  return dstar_cache_.emplace(std::make_pair(x, y), std::move(m)).first->second;
}

PathMeta dist_double_star(const BaseGraph& g, int x, int y, std::uint64_t search_budget) {
  if (search_budget == kDefaultPathSearchBudget) return g.double_star_meta(x, y);
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) fail(Errc::validation, "phi(x,y) is undefined for x == y");
  return compute_double_star(g, x, y, search_budget);
}

const std::set<std::pair<int, int>>& BaseGraph::bridge_set() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (bridges_) return *bridges_;

  // Iterative lowlink DFS over every component.
  std::set<std::pair<int, int>> bridges;
  std::vector<int> disc(n_, -1), low(n_, 0), parent(n_, -1), it_pos(n_, 0);
  int timer = 0;
  for (int root = 0; root < n_; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int u = stack.back();
      if (it_pos[u] < static_cast<int>(adj_[u].size())) {
        int v = adj_[u][it_pos[u]++];
        if (disc[v] < 0) {
          parent[v] = u;
          disc[v] = low[v] = timer++;
          stack.push_back(v);
        } else if (v != parent[u]) {
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back();
          low[p] = std::min(low[p], low[u]);
          if (low[u] > disc[p]) bridges.insert(std::minmax(p, u));
        }
      }
    }
  }
  bridges_ = std::move(bridges);
  return *bridges_;
}

bool BaseGraph::edge_is_bridge(int x, int y) const {
  if (!has_edge(x, y)) fail(Errc::validation, "no edge " + edge_str(x, y));
  return bridge_set().count(std::minmax(x, y)) > 0;
}

bool lies_on_no_cycle(const BaseGraph& g, int x) {
  g.check_vertex(x);
  for (int v : g.neighbors(x))
    if (!g.edge_is_bridge(x, v)) return false;
  return true;
}

bool is_connected(const BaseGraph& g) {
  const auto& row = g.bfs_row(0);
  return std::find(row.begin(), row.end(), -1) == row.end();
}

bool is_tree(const BaseGraph& g) { return g.edge_count() == g.order() - 1 && is_connected(g); }

bool is_bipartite(const BaseGraph& g) {
  std::vector<int> color(g.order(), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = color[u] ^ 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const BaseGraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      // sorted adjacency intersection
      const auto& a = g.neighbors(u);
      const auto& b = g.neighbors(v);
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
          ++i;
        else
          ++j;
      }
    }
  }
  return true;
}

bool is_complete(const BaseGraph& g) {
  long long n = g.order();
  return static_cast<long long>(g.edge_count()) == n * (n - 1) / 2;
}

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BaseGraph load_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  auto next_data_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!blank_or_comment(line)) return true;
    }
    return false;
  };

  if (!next_data_line()) fail(Errc::parse, "empty edge-list document");
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n >> m) || (ls >> extra))
      fail(Errc::parse, "line " + std::to_string(lineno) + ": expected header \"n m\"");
    if (n < 1) fail(Errc::validation, "vertex count must be at least 1");
    if (m < 0) fail(Errc::validation, "edge count must be non-negative");
  }
  for (int i = 0; i < m; ++i) {
    if (!next_data_line())
      fail(Errc::parse, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    std::istringstream ls(line);
    int u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      fail(Errc::parse, "line " + std::to_string(lineno) + ": expected edge \"u v\"");
    edges.emplace_back(u, v);
  }
  if (next_data_line())
    fail(Errc::parse, "line " + std::to_string(lineno) + ": unexpected content after " +
                          std::to_string(m) + " edges");
  return BaseGraph(n, edges);
}

BaseGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse, "cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

}  // namespace sierpdist
