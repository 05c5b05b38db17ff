#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <unordered_map>

#include "recursive.hpp"
#include "trees.hpp"

namespace sierpdist {

namespace {

constexpr int kMaxNotes = 8;
constexpr std::int64_t kSamplePairs = 500;

std::int64_t pow2(int k) { return static_cast<std::int64_t>(1) << k; }

struct PairInfo {
  int d = 0;
  std::vector<std::pair<int, int>> phi;
  std::vector<std::pair<int, int>> phi_prime;
};

struct Shared {
  const BaseGraph& g;
  const ExplicitSierpinski& s;
  const ExtremeDistTable& table;
  const std::vector<PairInfo>& pm;
  const std::vector<std::int64_t>& extreme_idx;
  const std::vector<std::int64_t>& npow;
  const std::vector<char>& no_cycle;
  const std::unordered_map<std::int64_t, std::vector<std::int64_t>>& samples;
  const std::optional<TreeBase>& tree_base;
  bool tree, bip, tf, complete;
  int n, t;
  std::int64_t order;
};

struct Tally {
  std::int64_t comparisons = 0;
  std::int64_t mismatches = 0;
  std::int64_t max_ecc = 0;
  std::int64_t min_ecc = std::numeric_limits<std::int64_t>::max();
};

class Sweep {
 public:
  Sweep(const Shared& sh, VerifyReport& rep) : sh_(sh), rep_(rep) {}

  void run(unsigned nthreads) {
    std::vector<Tally> tallies(nthreads);
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(&Sweep::worker, this, std::ref(tallies[i]));
    worker(tallies[0]);
    for (auto& th : pool) th.join();
    for (const auto& tl : tallies) {
      rep_.comparisons += tl.comparisons;
      rep_.mismatches += tl.mismatches;
      rep_.oracle_diameter = std::max(rep_.oracle_diameter, tl.max_ecc);
      rep_.oracle_radius = std::min(rep_.oracle_radius, tl.min_ecc);
    }
  }

 private:
  void note(Tally& tl, std::int64_t src, std::int64_t tgt, const char* method,
            std::int64_t predicted, std::int64_t actual) {
    ++tl.mismatches;
    std::lock_guard<std::mutex> lock(note_mu_);
    if (static_cast<int>(rep_.notes.size()) < kMaxNotes)
      rep_.notes.push_back(std::string(method) + " t=" + std::to_string(sh_.t) + " " +
                           format_word(sh_.s.index_to_word(src)) + " vs " +
                           format_word(sh_.s.index_to_word(tgt)) + ": predicted " +
                           std::to_string(predicted) + ", oracle " + std::to_string(actual));
  }

  void check(Tally& tl, std::int64_t src, std::int64_t tgt, const char* method,
             std::int64_t predicted, std::int64_t actual) {
    ++tl.comparisons;
    if (predicted != actual) note(tl, src, tgt, method, predicted, actual);
  }

  void worker(Tally& tl) {
    std::vector<std::int32_t> row;
    constexpr std::int64_t kChunk = 16;
    for (;;) {
      std::int64_t begin = next_.fetch_add(kChunk);
      if (begin >= sh_.order) break;
      std::int64_t end = std::min(begin + kChunk, sh_.order);
      for (std::int64_t src = begin; src < end; ++src) process_source(tl, src, row);
    }
  }

  void process_source(Tally& tl, std::int64_t src, std::vector<std::int32_t>& row) {
    sh_.s.bfs_fill(src, row);
    std::int64_t ecc = 0;
    for (std::int32_t d : row) ecc = std::max<std::int64_t>(ecc, d);
    tl.max_ecc = std::max(tl.max_ecc, ecc);
    tl.min_ecc = std::min(tl.min_ecc, ecc);

    const int n = sh_.n, t = sh_.t;
    // extreme source: whole extreme-to-word table row, plus the closed forms
    for (int v = 0; v < n; ++v) {
      if (sh_.extreme_idx[v] != src) continue;
      rep_.extreme_ecc[v] = ecc;  // distinct slot per source, no race
      auto trow = sh_.table.row(v, t);
      for (std::int64_t tgt = 0; tgt < sh_.order; ++tgt)
        if (tgt != src) check(tl, src, tgt, "algorithm-1", trow[tgt], row[tgt]);
      for (int u = 0; u < n; ++u)
        if (u != v)
          check(tl, src, sh_.extreme_idx[u], "extreme-extreme",
                (pow2(t) - 1) * sh_.pm[v * n + u].d, row[sh_.extreme_idx[u]]);
      if (sh_.complete) {
        for (std::int64_t tgt = 0; tgt < sh_.order; ++tgt) {
          if (tgt == src) continue;
          std::int64_t sum = 0, rest = tgt;
          for (int i = t - 1; i >= 0; --i) {
            if (static_cast<int>(rest % n) != v) sum += pow2(t - 1 - i);
            rest /= n;
          }
          check(tl, src, tgt, "complete-closed-form", sum, row[tgt]);
        }
      }
    }

    // block sweep by first differing position
    std::vector<std::pair<std::int64_t, const std::int64_t*>> terms, terms_p;
    for (int j = 1; j <= t; ++j) {
      const std::int64_t blocksz = sh_.npow[t - j];
      const int x = static_cast<int>((src / blocksz) % n);
      const std::int64_t prefix_base = src - src % (blocksz * n);
      const std::int64_t sx = src % blocksz;
      for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        const std::int64_t bstart = prefix_base + y * blocksz;
        const PairInfo& meta = sh_.pm[x * n + y];
        if (j == t) {
          if (bstart > src) check(tl, src, bstart, "lemma-1", meta.d, row[bstart]);
          continue;
        }
        const bool do_sym = sh_.tree || sh_.bip || sh_.tf;
        const bool do_cond = sh_.no_cycle[x];
        if (!do_sym && !do_cond) continue;
        const int k = t - j;
        const std::int64_t c_theta = (pow2(k + 1) - 1) * meta.d - 2 * (pow2(k) - 1);
        const std::int64_t c_theta_p = (pow2(k + 1) - 1) * meta.d + 1;
        terms.clear();
        for (const auto& [u, v] : meta.phi)
          terms.emplace_back(sh_.table.dist(u, k, sx), sh_.table.row(v, k).data());
        terms_p.clear();
        if (sh_.tf)
          for (const auto& [u, v] : meta.phi_prime)
            terms_p.emplace_back(sh_.table.dist(u, k, sx), sh_.table.row(v, k).data());
        for (std::int64_t off = 0; off < blocksz; ++off) {
          const std::int64_t tgt = bstart + off;
          const bool sym_here = do_sym && tgt > src;
          if (!sym_here && !do_cond) continue;
          std::int64_t lam = std::numeric_limits<std::int64_t>::max();
          for (const auto& [base, prow] : terms) lam = std::min(lam, base + prow[off]);
          const std::int64_t theta = lam + c_theta;
          if (sym_here) {
            if (sh_.tree) check(tl, src, tgt, "tree", theta, row[tgt]);
            if (sh_.bip) check(tl, src, tgt, "bipartite", theta, row[tgt]);
            if (sh_.tf) {
              std::int64_t pred = theta;
              if (!terms_p.empty()) {
                std::int64_t lam_p = std::numeric_limits<std::int64_t>::max();
                for (const auto& [base, prow] : terms_p)
                  lam_p = std::min(lam_p, base + prow[off]);
                pred = std::min(theta, lam_p + c_theta_p);
              }
              check(tl, src, tgt, "algorithm-2", pred, row[tgt]);
            }
          }
          if (do_cond) check(tl, src, tgt, "conditional", theta, row[tgt]);
        }
      }
    }

    // per-query spot checks on sampled pairs
    auto it = sh_.samples.find(src);
    if (it == sh_.samples.end()) return;
    const Word w = sh_.s.index_to_word(src);
    for (std::int64_t tgt : it->second) {
      const Word w2 = sh_.s.index_to_word(tgt);
      const std::int64_t oracle_d = row[tgt];
      try {
        check(tl, src, tgt, "best-dist", best_dist(sh_.g, w, w2).distance, oracle_d);
      } catch (const Error& e) {
        if (e.code() != Errc::applicability) throw;
      }
      if (sh_.tf)
        check(tl, src, tgt, "algorithm-2/query", triangle_free_dist(sh_.g, w, w2).distance,
              oracle_d);
      if (sh_.bip)
        check(tl, src, tgt, "bipartite/query", bipartite_dist(sh_.g, w, w2).distance, oracle_d);
      if (sh_.tree) {
        check(tl, src, tgt, "tree/query", sh_.tree_base->dist(w, w2), oracle_d);
        check(tl, src, tgt, "conditional/query", conditional_dist(sh_.g, w, w2).distance,
              oracle_d);
      }
    }
  }

  const Shared& sh_;
  VerifyReport& rep_;
  std::atomic<std::int64_t> next_{0};
  std::mutex note_mu_;
};

}  // namespace

VerifyReport verify_level(const BaseGraph& g, const ExplicitSierpinski& s, unsigned threads) {
  const int n = g.order();
  const int t = s.level();
  VerifyReport rep;
  rep.level = t;
  rep.extreme_ecc.assign(n, -1);
  rep.oracle_radius = std::numeric_limits<std::int64_t>::max();

  ExtremeDistTable table(g, t);

  std::vector<PairInfo> pm(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const PathMeta& m = g.double_star_meta(x, y);
      pm[x * n + y] = {m.d, m.phi, m.phi_prime};
    }

  std::vector<std::int64_t> extreme_idx(n), npow(t + 1, 1);
  for (int v = 0; v < n; ++v) extreme_idx[v] = s.extreme_index(v);
  for (int k = 1; k <= t; ++k) npow[k] = npow[k - 1] * n;

  std::vector<char> no_cycle(n);
  for (int v = 0; v < n; ++v) no_cycle[v] = lies_on_no_cycle(g, v) ? 1 : 0;

  const bool tree = is_tree(g);
  std::optional<TreeBase> tree_base;
  if (tree) tree_base.emplace(g);

  // deterministic per-query samples
  std::unordered_map<std::int64_t, std::vector<std::int64_t>> samples;
  {
    std::mt19937_64 rng(0x5d15 + static_cast<std::uint64_t>(n) * 1000003 +
                        static_cast<std::uint64_t>(g.edge_count()) * 101 + t);
    std::uniform_int_distribution<std::int64_t> pick(0, s.order() - 1);
    std::int64_t want = std::min<std::int64_t>(kSamplePairs, s.order() * (s.order() - 1) / 2);
    for (std::int64_t made = 0, attempts = 0; made < want && attempts < want * 20; ++attempts) {
      std::int64_t a = pick(rng), b = pick(rng);
      if (a == b) continue;
      samples[a].push_back(b);
      ++made;
    }
  }

  Shared sh{g,    s,  table, pm, extreme_idx, npow,          no_cycle,
            samples, tree_base, tree,         is_bipartite(g), is_triangle_free(g),
            is_complete(g), n, t, s.order()};

  unsigned nthreads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  Sweep sweep(sh, rep);
  sweep.run(nthreads);
  return rep;
}

VerifyReport verify_level(const BaseGraph& g, int t, std::uint64_t budget, unsigned threads) {
  ExplicitSierpinski s(g, t, budget);
  return verify_level(g, s, threads);
}

}  // namespace sierpdist
