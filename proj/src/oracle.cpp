#include "oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace sierpdist {

namespace {

std::int64_t pow_checked(int n, int t, std::uint64_t limit) {
  std::int64_t v = 1;
  for (int i = 0; i < t; ++i) {
    if (static_cast<std::uint64_t>(v) > limit / static_cast<std::uint64_t>(n))
      fail(Errc::budget, "vertex budget exceeded: " + std::to_string(n) + "^" +
                             std::to_string(t) + " > " + std::to_string(limit));
    v *= n;
  }
  return v;
}

}  // namespace

ExplicitSierpinski::ExplicitSierpinski(const BaseGraph& g, int t, std::uint64_t max_vertices)
    : n_(g.order()), t_(t) {
  if (t < 1) fail(Errc::validation, "level must be at least 1");
  if (n_ < 2) fail(Errc::validation, "base graph must have at least 2 vertices");
  if (!is_connected(g)) fail(Errc::validation, "base graph must be connected");
  std::uint64_t limit =
      std::min<std::uint64_t>(max_vertices, std::numeric_limits<std::int32_t>::max());
  order_ = pow_checked(n_, t, limit);

  const auto base_edges = g.edges();
  std::vector<std::pair<std::int64_t, std::int64_t>> es;
  es.reserve(static_cast<std::size_t>(base_edges.size()) * (order_ - 1) / std::max(1, n_ - 1) + 1);
  for (const auto& [a, b] : base_edges) es.emplace_back(a, b);
  std::int64_t size = n_;  // order of the level built so far
  for (int lvl = 2; lvl <= t; ++lvl) {
    std::size_t prev_count = es.size();
    // n shifted copies of the previous level
    for (int x = 1; x < n_; ++x) {
      std::int64_t off = static_cast<std::int64_t>(x) * size;
      for (std::size_t i = 0; i < prev_count; ++i)
        es.emplace_back(es[i].first + off, es[i].second + off);
    }
    // linking edge x y^(lvl-1) -- y x^(lvl-1) per base edge {x,y}
    std::int64_t rep = (size - 1) / (n_ - 1);  // index of y^(lvl-1) is y * rep
    for (const auto& [x, y] : base_edges)
      es.emplace_back(static_cast<std::int64_t>(x) * size + y * rep,
                      static_cast<std::int64_t>(y) * size + x * rep);
    size *= n_;
  }

  // CSR
  off_.assign(order_ + 1, 0);
  for (const auto& [a, b] : es) {
    ++off_[a + 1];
    ++off_[b + 1];
  }
  for (std::int64_t i = 0; i < order_; ++i) off_[i + 1] += off_[i];
  nbr_.resize(es.size() * 2);
  std::vector<std::int64_t> cursor(off_.begin(), off_.end() - 1);
  for (const auto& [a, b] : es) {
    nbr_[cursor[a]++] = static_cast<std::int32_t>(b);
    nbr_[cursor[b]++] = static_cast<std::int32_t>(a);
  }
  for (std::int64_t i = 0; i < order_; ++i)
    std::sort(nbr_.begin() + off_[i], nbr_.begin() + off_[i + 1]);
}

void ExplicitSierpinski::check_index(std::int64_t idx) const {
  if (idx < 0 || idx >= order_)
    fail(Errc::validation, "vertex index " + std::to_string(idx) + " out of range");
}

std::int64_t ExplicitSierpinski::word_to_index(const Word& w) const {
  validate_word(w, n_, t_);
  std::int64_t idx = 0;
  for (int c : w) idx = idx * n_ + c;
  return idx;
}

Word ExplicitSierpinski::index_to_word(std::int64_t idx) const {
  check_index(idx);
  Word w(static_cast<std::size_t>(t_));
  for (int i = t_ - 1; i >= 0; --i) {
    w[i] = static_cast<int>(idx % n_);
    idx /= n_;
  }
  return w;
}

std::int64_t ExplicitSierpinski::extreme_index(int x) const {
  if (x < 0 || x >= n_) fail(Errc::validation, "vertex id out of range");
  return static_cast<std::int64_t>(x) * ((order_ - 1) / (n_ - 1));
}

std::span<const std::int32_t> ExplicitSierpinski::neighbors(std::int64_t idx) const {
  check_index(idx);
  return {nbr_.data() + off_[idx], nbr_.data() + off_[idx + 1]};
}

std::int64_t ExplicitSierpinski::degree(std::int64_t idx) const {
  check_index(idx);
  return off_[idx + 1] - off_[idx];
}

void ExplicitSierpinski::bfs_fill(std::int64_t src, std::vector<std::int32_t>& row) const {
  check_index(src);
  row.assign(order_, -1);
  std::vector<std::int32_t> queue(order_);
  std::int64_t head = 0, tail = 0;
  row[src] = 0;
  queue[tail++] = static_cast<std::int32_t>(src);
  while (head < tail) {
    std::int32_t u = queue[head++];
    std::int32_t du = row[u];
    for (std::int64_t k = off_[u]; k < off_[u + 1]; ++k) {
      std::int32_t v = nbr_[k];
      if (row[v] < 0) {
        row[v] = du + 1;
        queue[tail++] = v;
      }
    }
  }
}

std::vector<std::int32_t> ExplicitSierpinski::bfs_from(std::int64_t src) const {
  std::vector<std::int32_t> row;
  bfs_fill(src, row);
  return row;
}

std::vector<std::int32_t> ExplicitSierpinski::bfs_parents(std::int64_t src) const {
  check_index(src);
  std::vector<std::int32_t> parent(order_, -1);
  std::vector<std::int32_t> queue(order_);
  std::int64_t head = 0, tail = 0;
  parent[src] = static_cast<std::int32_t>(src);
  queue[tail++] = static_cast<std::int32_t>(src);
  while (head < tail) {
    std::int32_t u = queue[head++];
    for (std::int64_t k = off_[u]; k < off_[u + 1]; ++k) {
      std::int32_t v = nbr_[k];
      if (parent[v] < 0) {
        parent[v] = u;
        queue[tail++] = v;
      }
    }
  }
  return parent;
}

std::int64_t ExplicitSierpinski::dist_index(std::int64_t a, std::int64_t b) const {
  check_index(a);
  check_index(b);
  if (a == b) return 0;
  // early-exit BFS
  std::vector<std::int32_t> row(order_, -1);
  std::vector<std::int32_t> queue(order_);
  std::int64_t head = 0, tail = 0;
  row[a] = 0;
  queue[tail++] = static_cast<std::int32_t>(a);
  while (head < tail) {
    std::int32_t u = queue[head++];
    std::int32_t du = row[u];
    for (std::int64_t k = off_[u]; k < off_[u + 1]; ++k) {
      std::int32_t v = nbr_[k];
      if (row[v] < 0) {
        if (v == b) return du + 1;
        row[v] = du + 1;
        queue[tail++] = v;
      }
    }
  }
  fail(Errc::unreachable, "no path between the given vertices");
}

std::int64_t ExplicitSierpinski::dist(const Word& w, const Word& w2) const {
  return dist_index(word_to_index(w), word_to_index(w2));
}

std::vector<Word> ExplicitSierpinski::shortest_path(const Word& w, const Word& w2) const {
  std::int64_t a = word_to_index(w), b = word_to_index(w2);
  auto parent = bfs_parents(a);
  if (parent[b] < 0) fail(Errc::unreachable, "no path between the given vertices");
  std::vector<Word> path;
  for (std::int64_t v = b;; v = parent[v]) {
    path.push_back(index_to_word(v));
    if (v == a) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::int64_t ExplicitSierpinski::eccentricity(const Word& w) const {
  auto row = bfs_from(word_to_index(w));
  std::int32_t best = 0;
  for (std::int32_t d : row) {
    if (d < 0) fail(Errc::unreachable, "graph is not connected");
    best = std::max(best, d);
  }
  return best;
}

std::pair<std::int64_t, std::int64_t> ExplicitSierpinski::scan_diameter_radius() const {
  unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::int64_t> next{0};
  std::vector<std::int64_t> max_ecc(nthreads, 0);
  std::vector<std::int64_t> min_ecc(nthreads, std::numeric_limits<std::int64_t>::max());
  auto worker = [&](unsigned id) {
    std::vector<std::int32_t> row;
    for (;;) {
      std::int64_t src = next.fetch_add(1);
      if (src >= order_) break;
      bfs_fill(src, row);
      std::int32_t ecc = 0;
      for (std::int32_t d : row) ecc = std::max(ecc, d);
      max_ecc[id] = std::max<std::int64_t>(max_ecc[id], ecc);
      min_ecc[id] = std::min<std::int64_t>(min_ecc[id], ecc);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker, i);
  worker(0);
  for (auto& th : pool) th.join();
  std::int64_t diam = 0, rad = std::numeric_limits<std::int64_t>::max();
  for (unsigned i = 0; i < nthreads; ++i) {
    diam = std::max(diam, max_ecc[i]);
    rad = std::min(rad, min_ecc[i]);
  }
  return {diam, rad};
}

std::int64_t ExplicitSierpinski::diameter() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!diam_rad_) diam_rad_ = scan_diameter_radius();
  return diam_rad_->first;
}

std::int64_t ExplicitSierpinski::radius() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!diam_rad_) diam_rad_ = scan_diameter_radius();
  return diam_rad_->second;
}

void ExplicitSierpinski::export_dot(std::ostream& os) const {
  os << "graph sierpinski {\n";
  for (std::int64_t i = 0; i < order_; ++i)
    os << "  " << i << " [label=\"" << format_word(index_to_word(i)) << "\"];\n";
  for (std::int64_t i = 0; i < order_; ++i)
    for (std::int64_t k = off_[i]; k < off_[i + 1]; ++k)
      if (i < nbr_[k]) os << "  " << i << " -- " << nbr_[k] << ";\n";
  os << "}\n";
}

bool words_adjacent(const BaseGraph& g, const Word& u, const Word& v) {
  if (u.size() != v.size() || u.empty()) return false;
  std::size_t i = 0;
  while (i < u.size() && u[i] == v[i]) ++i;
  if (i == u.size()) return false;  // equal words
  int a = u[i], b = v[i];
  if (!g.has_edge(a, b)) return false;
  for (std::size_t k = i + 1; k < u.size(); ++k)
    if (u[k] != b || v[k] != a) return false;
  return true;
}

std::vector<int> g_path(const BaseGraph& g, const std::vector<Word>& path) {
  if (path.empty()) fail(Errc::validation, "empty path");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!words_adjacent(g, path[i], path[i + 1]))
      fail(Errc::validation, "input is not a path: step " + std::to_string(i) +
                                 " joins non-adjacent words");
  std::set<Word> distinct(path.begin(), path.end());
  if (distinct.size() != path.size()) fail(Errc::validation, "input is not a path: repeated vertex");
  std::vector<int> letters;
  for (const Word& w : path)
    if (letters.empty() || letters.back() != w.front()) letters.push_back(w.front());
  return letters;
}

}  // namespace sierpdist
