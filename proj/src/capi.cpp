#include "sierpdist/sierpdist.h"

#include <fstream>
#include <new>
#include <string>

#include "base_graph.hpp"
#include "oracle.hpp"
#include "recursive.hpp"
#include "trees.hpp"
#include "verify.hpp"
#include "words.hpp"

struct sd_graph {
  sierpdist::BaseGraph g;
};

struct sd_sierpinski {
  sierpdist::ExplicitSierpinski s;
};

namespace {

thread_local std::string tl_error;

sd_status set_error(sd_status code, const std::string& msg) {
  tl_error = msg;
  return code;
}

sd_status map_errc(sierpdist::Errc c) {
  using sierpdist::Errc;
  switch (c) {
    case Errc::parse: return SD_ERR_PARSE;
    case Errc::validation: return SD_ERR_VALIDATION;
    case Errc::applicability: return SD_ERR_APPLICABILITY;
    case Errc::budget: return SD_ERR_BUDGET;
    case Errc::unreachable: return SD_ERR_UNREACHABLE;
  }
  return SD_ERR_INTERNAL;
}

// Every entry point funnels through here so exceptions never cross the ABI.
template <typename Fn>
sd_status guarded(Fn&& fn) {
  try {
    fn();
    return SD_OK;
  } catch (const sierpdist::Error& e) {
    return set_error(map_errc(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SD_ERR_BUDGET, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SD_ERR_INTERNAL, e.what());
  }
}

sd_status require(bool ok, const char* what) {
  return ok ? SD_OK : set_error(SD_ERR_ARGUMENT, what);
}

sierpdist::Word to_word(const int32_t* letters, int32_t t) {
  sierpdist::Word w(static_cast<std::size_t>(t));
  for (int32_t i = 0; i < t; ++i) w[i] = letters[i];
  return w;
}

sd_method to_c_method(sierpdist::Method m) {
  using sierpdist::Method;
  switch (m) {
    case Method::extreme_extreme: return SD_METHOD_EXTREME_EXTREME;
    case Method::algorithm_1: return SD_METHOD_ALGORITHM_1;
    case Method::complete_closed_form: return SD_METHOD_COMPLETE_CLOSED_FORM;
    case Method::algorithm_2: return SD_METHOD_ALGORITHM_2;
    case Method::bipartite: return SD_METHOD_BIPARTITE;
    case Method::conditional: return SD_METHOD_CONDITIONAL;
    case Method::tree: return SD_METHOD_TREE;
    case Method::lemma_1_reduction: return SD_METHOD_LEMMA_1_REDUCTION;
    case Method::oracle_fallback: return SD_METHOD_ORACLE_FALLBACK;
  }
  return SD_METHOD_LEMMA_1_REDUCTION;
}

}  // namespace

extern "C" {

const char* sd_status_name(sd_status s) {
  switch (s) {
    case SD_OK: return "ok";
    case SD_ERR_ARGUMENT: return "argument";
    case SD_ERR_PARSE: return "parse";
    case SD_ERR_VALIDATION: return "validation";
    case SD_ERR_APPLICABILITY: return "applicability";
    case SD_ERR_BUDGET: return "budget";
    case SD_ERR_UNREACHABLE: return "unreachable";
    case SD_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sd_method_name(sd_method m) {
  switch (m) {
    case SD_METHOD_EXTREME_EXTREME: return "extreme-extreme";
    case SD_METHOD_ALGORITHM_1: return "algorithm-1";
    case SD_METHOD_COMPLETE_CLOSED_FORM: return "complete-closed-form";
    case SD_METHOD_ALGORITHM_2: return "algorithm-2";
    case SD_METHOD_BIPARTITE: return "bipartite";
    case SD_METHOD_CONDITIONAL: return "conditional";
    case SD_METHOD_TREE: return "tree";
    case SD_METHOD_LEMMA_1_REDUCTION: return "lemma-1-reduction";
    case SD_METHOD_ORACLE_FALLBACK: return "oracle-fallback";
  }
  return "unknown";
}

const char* sd_last_error(void) { return tl_error.c_str(); }

uint64_t sd_default_budget(void) { return sierpdist::kDefaultVertexBudget; }

sd_status sd_graph_load_text(const char* text, sd_graph** out) {
  if (sd_status s = require(text && out, "null argument")) return s;
  return guarded([&] { *out = new sd_graph{sierpdist::load_graph(text)}; });
}

sd_status sd_graph_load_file(const char* path, sd_graph** out) {
  if (sd_status s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new sd_graph{sierpdist::load_graph_file(path)}; });
}

void sd_graph_free(sd_graph* g) { delete g; }

int32_t sd_graph_order(const sd_graph* g) { return g ? g->g.order() : -1; }

int64_t sd_graph_edge_count(const sd_graph* g) { return g ? g->g.edge_count() : -1; }

sd_status sd_graph_dist(const sd_graph* g, int32_t x, int32_t y, int64_t* out) {
  if (sd_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = sierpdist::dist(g->g, x, y); });
}

#define SD_PREDICATE(name, expr)                      \
  int name {                                          \
    if (!g) return -1;                                \
    try {                                             \
      return (expr) ? 1 : 0;                          \
    } catch (...) {                                   \
      return -1;                                      \
    }                                                 \
  }

SD_PREDICATE(sd_graph_is_connected(const sd_graph* g), sierpdist::is_connected(g->g))
SD_PREDICATE(sd_graph_is_tree(const sd_graph* g), sierpdist::is_tree(g->g))
SD_PREDICATE(sd_graph_is_bipartite(const sd_graph* g), sierpdist::is_bipartite(g->g))
SD_PREDICATE(sd_graph_is_triangle_free(const sd_graph* g), sierpdist::is_triangle_free(g->g))
SD_PREDICATE(sd_graph_lies_on_no_cycle(const sd_graph* g, int32_t x),
             sierpdist::lies_on_no_cycle(g->g, x))

#undef SD_PREDICATE

sd_status sd_parse_word(const char* text, int32_t n, int32_t t, int32_t* letters_out) {
  if (sd_status s = require(text && letters_out && t > 0, "null or invalid argument")) return s;
  return guarded([&] {
    sierpdist::Word w = sierpdist::parse_word(text, n, t);
    for (int32_t i = 0; i < t; ++i) letters_out[i] = w[i];
  });
}

sd_status sd_dist(const sd_graph* g, int32_t t, const int32_t* w, const int32_t* w2,
                  const sd_query_opts* opts, sd_query_result* out) {
  if (sd_status s = require(g && w && w2 && out && t > 0, "null or invalid argument")) return s;
  return guarded([&] {
    sierpdist::QueryOptions qo;
    if (opts) {
      qo.allow_oracle_fallback = opts->allow_oracle_fallback != 0;
      qo.assert_premiss_b = opts->assert_premiss_b != 0;
      if (opts->oracle_budget) qo.oracle_budget = opts->oracle_budget;
    }
    sierpdist::QueryResult r = sierpdist::best_dist(g->g, to_word(w, t), to_word(w2, t), qo);
    out->distance = r.distance;
    out->method = to_c_method(r.method);
    out->has_theta = r.theta.has_value() ? 1 : 0;
    out->has_theta_prime = r.theta_prime.has_value() ? 1 : 0;
    out->theta = r.theta.value_or(0);
    out->theta_prime = r.theta_prime.value_or(0);
  });
}

sd_status sd_extreme_extreme_dist(const sd_graph* g, int32_t x, int32_t y, int32_t t,
                                  int64_t* out) {
  if (sd_status s = require(g && out, "null argument")) return s;
  return guarded([&] { *out = sierpdist::extreme_extreme_dist(g->g, x, y, t); });
}

sd_status sd_extreme_to_word(const sd_graph* g, int32_t x, const int32_t* w, int32_t t,
                             int64_t* out) {
  if (sd_status s = require(g && w && out && t > 0, "null or invalid argument")) return s;
  return guarded([&] { *out = sierpdist::extreme_to_word(g->g, x, to_word(w, t)); });
}

sd_status sd_diameter(const sd_graph* g, int32_t t, uint64_t budget, int64_t* out,
                      int* closed_form) {
  if (sd_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    auto r = sierpdist::sierpinski_diameter(g->g, t, budget ? budget : sd_default_budget());
    *out = r.value;
    if (closed_form) *closed_form = r.closed_form ? 1 : 0;
  });
}

sd_status sd_radius(const sd_graph* g, int32_t t, uint64_t budget, int64_t* out,
                    int* closed_form) {
  if (sd_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    auto r = sierpdist::sierpinski_radius(g->g, t, budget ? budget : sd_default_budget());
    *out = r.value;
    if (closed_form) *closed_form = r.closed_form ? 1 : 0;
  });
}

sd_status sd_extreme_ecc(const sd_graph* g, int32_t u, int32_t t, uint64_t budget, int64_t* out,
                         int* closed_form) {
  if (sd_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    auto r = sierpdist::sierpinski_extreme_ecc(g->g, u, t, budget ? budget : sd_default_budget());
    *out = r.value;
    if (closed_form) *closed_form = r.closed_form ? 1 : 0;
  });
}

sd_status sd_oracle_build(const sd_graph* g, int32_t t, uint64_t budget, sd_sierpinski** out) {
  if (sd_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = new sd_sierpinski{
        sierpdist::ExplicitSierpinski(g->g, t, budget ? budget : sd_default_budget())};
  });
}

void sd_oracle_free(sd_sierpinski* s) { delete s; }

int64_t sd_oracle_order(const sd_sierpinski* s) { return s ? s->s.order() : -1; }

int64_t sd_oracle_edge_count(const sd_sierpinski* s) { return s ? s->s.edge_count() : -1; }

sd_status sd_oracle_dist(const sd_sierpinski* s, const int32_t* w, const int32_t* w2,
                         int64_t* out) {
  if (sd_status st = require(s && w && w2 && out, "null argument")) return st;
  return guarded(
      [&] { *out = s->s.dist(to_word(w, s->s.level()), to_word(w2, s->s.level())); });
}

sd_status sd_oracle_eccentricity(const sd_sierpinski* s, const int32_t* w, int64_t* out) {
  if (sd_status st = require(s && w && out, "null argument")) return st;
  return guarded([&] { *out = s->s.eccentricity(to_word(w, s->s.level())); });
}

sd_status sd_oracle_diameter(const sd_sierpinski* s, int64_t* out) {
  if (sd_status st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = s->s.diameter(); });
}

sd_status sd_oracle_radius(const sd_sierpinski* s, int64_t* out) {
  if (sd_status st = require(s && out, "null argument")) return st;
  return guarded([&] { *out = s->s.radius(); });
}

sd_status sd_oracle_export_dot(const sd_sierpinski* s, const char* path) {
  if (sd_status st = require(s && path, "null argument")) return st;
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out) sierpdist::fail(sierpdist::Errc::parse, std::string("cannot open output file: ") + path);
    s->s.export_dot(out);
    if (!out.good()) sierpdist::fail(sierpdist::Errc::parse, "write failure");
  });
}

sd_status sd_verify_level(const sd_graph* g, int32_t t, uint64_t budget,
                          sd_verify_report* out) {
  if (sd_status st = require(g && out, "null argument")) return st;
  return guarded([&] {
    sierpdist::VerifyReport r =
        sierpdist::verify_level(g->g, t, budget ? budget : sd_default_budget());
    out->pairs = r.comparisons;
    out->mismatches = r.mismatches;
  });
}

}  // extern "C"
