#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "brute.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace sierpdist;

namespace {

// order = n^t, edges = m (n^t - 1) / (n - 1)
void check_structure(const BaseGraph& g, const ExplicitSierpinski& s) {
  const int n = g.order();
  const int t = s.level();
  std::int64_t order = 1;
  for (int i = 0; i < t; ++i) order *= n;
  CHECK(s.order() == order);
  CHECK(s.edge_count() == static_cast<std::int64_t>(g.edge_count()) * (order - 1) / (n - 1));
  for (int v = 0; v < n; ++v) CHECK(s.degree(s.extreme_index(v)) == g.degree(v));
  if (t >= 2) {
    std::int64_t rep = (order - 1) / (n - 1) / n * 1;  // index multiplier of y^(t-1)
    rep = (order / n - 1) / (n - 1);
    for (const auto& [x, y] : g.edges()) {
      std::int64_t xy = static_cast<std::int64_t>(x) * (order / n) + y * rep;
      std::int64_t yx = static_cast<std::int64_t>(y) * (order / n) + x * rep;
      CHECK(s.degree(xy) == g.degree(y) + 1);
      CHECK(s.degree(yx) == g.degree(x) + 1);
    }
  }
}

}  // namespace

TEST_CASE("level 1 is the base graph") {
  BaseGraph c4 = corpus::make_cycle(4);
  ExplicitSierpinski s(c4, 1);
  CHECK(s.order() == 4);
  CHECK(s.edge_count() == 4);
  for (int v = 0; v < 4; ++v) {
    auto nbrs = s.neighbors(v);
    std::vector<int> got(nbrs.begin(), nbrs.end());
    CHECK(got == c4.neighbors(v));
  }
}

TEST_CASE("S(K2,t) is the path on 2^t vertices") {
  BaseGraph k2 = corpus::make_complete(2);
  for (int t = 1; t <= 6; ++t) {
    ExplicitSierpinski s(k2, t);
    std::int64_t order = std::int64_t(1) << t;
    CHECK(s.order() == order);
    CHECK(s.edge_count() == order - 1);
    CHECK(s.diameter() == order - 1);
    int deg1 = 0, deg2 = 0;
    for (std::int64_t v = 0; v < order; ++v) {
      if (s.degree(v) == 1) ++deg1;
      if (s.degree(v) == 2) ++deg2;
    }
    CHECK(deg1 == 2);
    CHECK(deg2 == order - 2);
  }
}

TEST_CASE("structural invariants across small bases") {
  std::mt19937_64 rng(31);
  std::vector<BaseGraph> bases;
  bases.push_back(corpus::make_cycle(4));
  bases.push_back(corpus::make_cycle(5));
  bases.push_back(corpus::make_complete(3));
  bases.push_back(corpus::make_diamond());
  bases.push_back(corpus::make_c5pp());
  bases.push_back(corpus::make_star(3));
  bases.push_back(corpus::random_tree(6, rng));
  for (const BaseGraph& g : bases)
    for (int t = 1; t <= 3; ++t) check_structure(g, ExplicitSierpinski(g, t));
}

TEST_CASE("construction guards") {
  BaseGraph c4 = corpus::make_cycle(4);
  CHECK_THROWS_AS(ExplicitSierpinski(c4, 3, 10), Error);  // 64 > 10
  try {
    ExplicitSierpinski s(c4, 11);  // 4^11 over the default budget
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget);
  }
  BaseGraph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(ExplicitSierpinski(split, 2), Error);
  BaseGraph k1(1, {});
  CHECK_THROWS_AS(ExplicitSierpinski(k1, 2), Error);
  CHECK_THROWS_AS(ExplicitSierpinski(c4, 0), Error);
}

TEST_CASE("golden distances") {
  // diamond, external labels 1..4 = ids 0..3: d(121, 344) = 10
  BaseGraph dia = corpus::make_diamond();
  ExplicitSierpinski s3(dia, 3);
  CHECK(s3.order() == 64);
  CHECK(s3.dist({0, 1, 0}, {2, 3, 3}) == 10);
  CHECK(s3.dist({0, 1, 0}, {0, 1, 0}) == 0);

  // C4 with labels a,b,c,d = 0,1,2,3: d(dab, bdc) = 13
  BaseGraph c4 = corpus::make_cycle(4);
  ExplicitSierpinski c43(c4, 3);
  CHECK(c43.dist({3, 0, 1}, {1, 3, 2}) == 13);
}

TEST_CASE("word/index round trip") {
  BaseGraph c5pp = corpus::make_c5pp();
  ExplicitSierpinski s(c5pp, 2);
  for (std::int64_t i = 0; i < s.order(); ++i) CHECK(s.word_to_index(s.index_to_word(i)) == i);
  CHECK(s.extreme_index(0) == 0);
  CHECK(s.index_to_word(s.extreme_index(4)) == Word{4, 4});
  CHECK_THROWS_AS(s.word_to_index({0, 9}), Error);
  CHECK_THROWS_AS(s.word_to_index({0}), Error);
}

TEST_CASE("shortest_path") {
  BaseGraph c5pp = corpus::make_c5pp();
  ExplicitSierpinski s(c5pp, 2);
  CHECK(s.shortest_path({0, 5}, {0, 5}).size() == 1);
  auto two = s.shortest_path({0, 0}, {0, 1});
  CHECK(two.size() == 2);
  // external labels: 16 -> 47 has a shortest path of length 9
  auto p = s.shortest_path({0, 5}, {3, 6});
  CHECK(p.size() == 10);
  CHECK(p.front() == Word{0, 5});
  CHECK(p.back() == Word{3, 6});
  for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(words_adjacent(c5pp, p[i], p[i + 1]));
}

TEST_CASE("g_path") {
  BaseGraph c5pp = corpus::make_c5pp();
  ExplicitSierpinski s(c5pp, 2);
  // external labels: the 16 -> 47 path crosses copies 1,2,3,4
  CHECK(g_path(c5pp, s.shortest_path({0, 5}, {3, 6})) == std::vector<int>{0, 1, 2, 3});

  BaseGraph dia = corpus::make_diamond();
  ExplicitSierpinski d3(dia, 3);
  // external labels: 121 -> 344 visits copies 1,2,4,3
  CHECK(g_path(dia, d3.shortest_path({0, 1, 0}, {2, 3, 3})) == std::vector<int>{0, 1, 3, 2});

  // a path inside one copy collapses to a single letter
  CHECK(g_path(dia, d3.shortest_path({0, 1, 0}, {0, 3, 3})) == std::vector<int>{0});

  CHECK_THROWS_AS(g_path(dia, {{0, 1, 0}, {2, 3, 3}}), Error);  // not adjacent
  CHECK_THROWS_AS(g_path(dia, {}), Error);
}

TEST_CASE("words_adjacent matches the explicit edges") {
  std::mt19937_64 rng(37);
  BaseGraph g = corpus::make_c5pp();
  ExplicitSierpinski s(g, 2);
  for (std::int64_t a = 0; a < s.order(); ++a) {
    Word wa = s.index_to_word(a);
    for (std::int64_t b = 0; b < s.order(); ++b) {
      Word wb = s.index_to_word(b);
      auto nbrs = s.neighbors(a);
      bool edge = std::binary_search(nbrs.begin(), nbrs.end(), static_cast<std::int32_t>(b));
      CHECK(words_adjacent(g, wa, wb) == edge);
    }
  }
}

TEST_CASE("common-prefix reduction across consecutive levels") {
  std::mt19937_64 rng(41);
  std::vector<BaseGraph> bases;
  bases.push_back(corpus::make_cycle(4));
  bases.push_back(corpus::make_diamond());
  bases.push_back(corpus::random_connected(5, 3, rng));
  for (const BaseGraph& g : bases) {
    const int n = g.order();
    for (int t = 2; t <= 3; ++t) {
      ExplicitSierpinski big(g, t);
      ExplicitSierpinski small(g, t - 1);
      for (int iter = 0; iter < 50; ++iter) {
        int x = static_cast<int>(rng() % n);
        std::int64_t a = static_cast<std::int64_t>(rng() % small.order());
        std::int64_t b = static_cast<std::int64_t>(rng() % small.order());
        std::int64_t off = static_cast<std::int64_t>(x) * small.order();
        CHECK(big.dist_index(off + a, off + b) == small.dist_index(a, b));
      }
    }
  }
}

TEST_CASE("G-paths of shortest paths are paths in G") {
  std::mt19937_64 rng(43);
  std::vector<BaseGraph> bases;
  bases.push_back(corpus::make_diamond());
  bases.push_back(corpus::make_c5pp());
  bases.push_back(corpus::make_complete(4));
  for (const BaseGraph& g : bases) {
    ExplicitSierpinski s(g, 2);
    for (int iter = 0; iter < 60; ++iter) {
      std::int64_t a = static_cast<std::int64_t>(rng() % s.order());
      std::int64_t b = static_cast<std::int64_t>(rng() % s.order());
      auto letters = g_path(g, s.shortest_path(s.index_to_word(a), s.index_to_word(b)));
      for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        CHECK(g.has_edge(letters[i], letters[i + 1]));
      std::set<int> distinct(letters.begin(), letters.end());
      CHECK(distinct.size() == letters.size());
    }
  }
}

TEST_CASE("shortest paths from extreme vertices have triangle-free G-paths") {
  std::mt19937_64 rng(47);
  std::vector<BaseGraph> bases;
  bases.push_back(corpus::make_diamond());
  bases.push_back(corpus::make_complete(4));
  bases.push_back(corpus::make_paw());
  for (const BaseGraph& g : bases) {
    for (int t = 2; t <= 3; ++t) {
      ExplicitSierpinski s(g, t);
      for (int v = 0; v < g.order(); ++v) {
        Word src = make_extreme(v, t);
        for (int iter = 0; iter < 30; ++iter) {
          std::int64_t b = static_cast<std::int64_t>(rng() % s.order());
          auto letters = g_path(g, s.shortest_path(src, s.index_to_word(b)));
          for (std::size_t i = 0; i + 2 < letters.size(); ++i)
            CHECK_FALSE(g.has_edge(letters[i], letters[i + 2]));
        }
      }
    }
  }
}

TEST_CASE("eccentricity, diameter, radius") {
  BaseGraph p3 = corpus::make_path(3);
  ExplicitSierpinski s(p3, 2);
  CHECK(s.diameter() == 6);
  CHECK(s.radius() == 3);
  CHECK(s.eccentricity({1, 1}) == 3);
  CHECK(s.eccentricity({0, 0}) == 6);

  BaseGraph dia = corpus::make_diamond();
  ExplicitSierpinski d1(dia, 1);
  CHECK(d1.diameter() == 2);  // level 1 equals the base graph

  // brute check against per-source BFS maxima
  ExplicitSierpinski d2(dia, 2);
  std::int64_t diam = 0, rad = 1 << 30;
  for (std::int64_t v = 0; v < d2.order(); ++v) {
    auto row = d2.bfs_from(v);
    std::int64_t ecc = *std::max_element(row.begin(), row.end());
    diam = std::max(diam, ecc);
    rad = std::min(rad, ecc);
  }
  CHECK(d2.diameter() == diam);
  CHECK(d2.radius() == rad);
}

TEST_CASE("DOT export is deterministic and well-formed") {
  BaseGraph dia = corpus::make_diamond();
  ExplicitSierpinski s(dia, 1);
  std::ostringstream a, b;
  s.export_dot(a);
  s.export_dot(b);
  CHECK(a.str() == b.str());
  std::string text = a.str();
  CHECK(text.find("graph sierpinski {") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 4 + 5 + 1);  // header, nodes, edges, brace
  CHECK(text.find("0 [label=\"0\"];") != std::string::npos);
  CHECK(text.find("  1 -- 2;") != std::string::npos);
}
