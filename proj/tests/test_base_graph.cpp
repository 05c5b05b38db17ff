#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "base_graph.hpp"
#include "brute.hpp"
#include "corpus.hpp"

using namespace sierpdist;

namespace {

bool has_code(const Error& e, Errc c) { return e.code() == c; }

}  // namespace

TEST_CASE("load_graph parses a well-formed edge list") {
  BaseGraph g = load_graph("4 4\n0 1\n1 2\n2 3\n3 0");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.neighbors(0) == std::vector<int>{1, 3});
  CHECK(g.neighbors(2) == std::vector<int>{1, 3});
}

TEST_CASE("load_graph skips comments and blank lines") {
  BaseGraph g = load_graph("# a cycle\n\n4 4\n0 1\n# middle\n1 2\n2 3\n\n3 0\n");
  CHECK(g.edge_count() == 4);
}

TEST_CASE("load_graph rejects malformed input") {
  CHECK_THROWS_WITH_AS(load_graph("2 1\n0 0"), "self-loop at vertex 0", Error);
  CHECK_THROWS_AS(load_graph("3 2\n0 1\n0 1"), Error);
  CHECK_THROWS_AS(load_graph("3 2\n0 1\n1 0"), Error);  // duplicate in reverse
  CHECK_THROWS_AS(load_graph("5 2\n0 1\n1 5"), Error);  // id out of range
  CHECK_THROWS_AS(load_graph("3 2\n0 1"), Error);       // missing edge line
  CHECK_THROWS_AS(load_graph("3 1\n0 1\n1 2"), Error);  // trailing edge line
  CHECK_THROWS_AS(load_graph("3\n0 1"), Error);         // bad header
  CHECK_THROWS_AS(load_graph("3 1\n0 x"), Error);       // bad token
  CHECK_THROWS_AS(load_graph(""), Error);
  try {
    load_graph("5 1\n0 7");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(has_code(e, Errc::validation));
  }
}

TEST_CASE("load_graph_file reads fixtures") {
  BaseGraph g = load_graph_file(corpus::fixture("c4.el"));
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 4);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/file.el"), Error);
}

TEST_CASE("dist") {
  BaseGraph c4 = corpus::make_cycle(4);
  CHECK(dist(c4, 0, 2) == 2);
  CHECK(dist(c4, 1, 1) == 0);
  BaseGraph p4 = corpus::make_path(4);
  CHECK(dist(p4, 0, 3) == 3);

  BaseGraph split(4, {{0, 1}, {2, 3}});
  try {
    dist(split, 0, 3);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(has_code(e, Errc::unreachable));
  }
}

TEST_CASE("dist_star") {
  BaseGraph c4 = corpus::make_cycle(4);
  PathMeta m = dist_star(c4, 0, 2);
  CHECK(m.d == 2);
  CHECK(m.nu == std::vector<int>{1, 3});

  BaseGraph p4 = corpus::make_path(4);
  m = dist_star(p4, 0, 3);
  CHECK(m.d == 3);
  CHECK(m.nu == std::vector<int>{2});

  BaseGraph k3 = corpus::make_complete(3);
  m = dist_star(k3, 0, 1);
  CHECK(m.d == 1);
  CHECK(m.nu == std::vector<int>{0});

  CHECK_THROWS_AS(dist_star(c4, 1, 1), Error);
}

TEST_CASE("dist_double_star frozen examples") {
  // labels a,b,c,d = 0,1,2,3
  BaseGraph c4 = corpus::make_cycle(4);
  PathMeta m = dist_double_star(c4, 3, 1);
  CHECK(m.d == 2);
  CHECK(m.phi == std::vector<std::pair<int, int>>{{0, 0}, {2, 2}});
  CHECK(m.phi_prime.empty());

  BaseGraph c5 = corpus::make_cycle(5);
  m = dist_double_star(c5, 0, 2);
  CHECK(m.d == 2);
  CHECK(m.phi == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK(m.phi_prime == std::vector<std::pair<int, int>>{{4, 3}});

  // adjacent pair: the path is the edge itself
  m = dist_double_star(c4, 0, 1);
  CHECK(m.d == 1);
  CHECK(m.phi == std::vector<std::pair<int, int>>{{1, 0}});
}

TEST_CASE("dist_double_star respects the search budget") {
  BaseGraph k5 = corpus::make_complete(5);
  CHECK_THROWS_AS(dist_double_star(k5, 0, 1, 2), Error);
  try {
    dist_double_star(k5, 0, 1, 2);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(has_code(e, Errc::budget));
  }
}

TEST_CASE("nu/phi/phi' agree with brute-force path enumeration") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    int n = 4 + static_cast<int>(rng() % 4);
    BaseGraph g = corpus::random_connected(n, static_cast<int>(rng() % 4), rng);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        auto expected = brute::pair_sets(g, x, y);
        PathMeta star = dist_star(g, x, y);
        PathMeta both = dist_double_star(g, x, y);
        CHECK(star.d == expected.d);
        CHECK(std::set<int>(star.nu.begin(), star.nu.end()) == expected.nu);
        CHECK(std::set<std::pair<int, int>>(both.phi.begin(), both.phi.end()) == expected.phi);
        CHECK(std::set<std::pair<int, int>>(both.phi_prime.begin(), both.phi_prime.end()) ==
              expected.phi_prime);
      }
  }
}

TEST_CASE("phi' is empty on trees") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);
    BaseGraph t = corpus::random_tree(n, rng);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) CHECK(dist_double_star(t, x, y).phi_prime.empty());
  }
}

TEST_CASE("dist symmetry and triangle inequality") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 4 + static_cast<int>(rng() % 5);
    BaseGraph g = corpus::random_connected(n, static_cast<int>(rng() % 5), rng);
    auto fw = brute::floyd_warshall(g);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        CHECK(dist(g, x, y) == fw[x][y]);
        CHECK(dist(g, x, y) == dist(g, y, x));
        for (int z = 0; z < n; ++z) CHECK(dist(g, x, y) <= dist(g, x, z) + dist(g, z, y));
      }
  }
}

TEST_CASE("predicates") {
  BaseGraph c4 = corpus::make_cycle(4);
  CHECK(is_bipartite(c4));
  CHECK(is_triangle_free(c4));
  CHECK_FALSE(is_tree(c4));
  CHECK(is_connected(c4));

  BaseGraph k3 = corpus::make_complete(3);
  CHECK_FALSE(is_triangle_free(k3));
  CHECK_FALSE(is_bipartite(k3));
  CHECK(is_complete(k3));

  BaseGraph p4 = corpus::make_path(4);
  CHECK(is_tree(p4));
  CHECK(is_bipartite(p4));

  BaseGraph c5 = corpus::make_cycle(5);
  CHECK(is_triangle_free(c5));
  CHECK_FALSE(is_bipartite(c5));

  BaseGraph split(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(split));
  CHECK_FALSE(is_tree(split));
}

TEST_CASE("lies_on_no_cycle") {
  BaseGraph c5pp = corpus::make_c5pp();
  CHECK(lies_on_no_cycle(c5pp, 5));
  CHECK(lies_on_no_cycle(c5pp, 6));
  CHECK_FALSE(lies_on_no_cycle(c5pp, 0));

  BaseGraph c4 = corpus::make_cycle(4);
  for (int x = 0; x < 4; ++x) CHECK_FALSE(lies_on_no_cycle(c4, x));

  BaseGraph p4 = corpus::make_path(4);
  for (int x = 0; x < 4; ++x) CHECK(lies_on_no_cycle(p4, x));
}

TEST_CASE("lies_on_no_cycle agrees with brute-force cycle search") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);
    BaseGraph g = corpus::random_connected(n, static_cast<int>(rng() % 5), rng);
    for (int x = 0; x < n; ++x) CHECK(lies_on_no_cycle(g, x) == !brute::on_cycle(g, x));
  }
}

TEST_CASE("vertex range checks") {
  BaseGraph c4 = corpus::make_cycle(4);
  CHECK_THROWS_AS(dist(c4, 0, 4), Error);
  CHECK_THROWS_AS(c4.neighbors(-1), Error);
}
