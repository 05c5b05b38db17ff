/*
 * sierpdist: exact distances, eccentricities, diameter and radius in
 * generalized Sierpinski graphs S(G,t).
 *
 * All functions return SD_OK on success. On failure the out-parameters are
 * left untouched and sd_last_error() returns a thread-local description of
 * what went wrong. Handles are opaque; free them with the matching *_free.
 *
 * Words (vertices of S(G,t)) are arrays of t base-vertex ids, most
 * significant letter first.
 */
#ifndef SIERPDIST_H
#define SIERPDIST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sd_graph sd_graph;           /* immutable base graph G */
typedef struct sd_sierpinski sd_sierpinski; /* materialized S(G,t) */

typedef enum sd_status {
  SD_OK = 0,
  SD_ERR_ARGUMENT = 1,      /* null pointer or malformed argument */
  SD_ERR_PARSE = 2,         /* malformed input text */
  SD_ERR_VALIDATION = 3,    /* structurally invalid input */
  SD_ERR_APPLICABILITY = 4, /* method does not apply to this base graph */
  SD_ERR_BUDGET = 5,        /* vertex or search budget exceeded */
  SD_ERR_UNREACHABLE = 6,   /* vertex pair in different components */
  SD_ERR_INTERNAL = 7
} sd_status;

typedef enum sd_method {
  SD_METHOD_EXTREME_EXTREME = 0,
  SD_METHOD_ALGORITHM_1 = 1,
  SD_METHOD_COMPLETE_CLOSED_FORM = 2,
  SD_METHOD_ALGORITHM_2 = 3,
  SD_METHOD_BIPARTITE = 4,
  SD_METHOD_CONDITIONAL = 5,
  SD_METHOD_TREE = 6,
  SD_METHOD_LEMMA_1_REDUCTION = 7,
  SD_METHOD_ORACLE_FALLBACK = 8
} sd_method;

const char* sd_status_name(sd_status s);
const char* sd_method_name(sd_method m);

/* Message for the most recent failing call on this thread. */
const char* sd_last_error(void);

/* Default vertex budget for materializing S(G,t): 2000000. */
uint64_t sd_default_budget(void);

/* ---- base graph ------------------------------------------------------- */

/* Edge-list format: header line "n m", then m lines "u v" with 0-based ids;
 * '#' comment lines and blank lines are ignored. */
sd_status sd_graph_load_text(const char* text, sd_graph** out);
sd_status sd_graph_load_file(const char* path, sd_graph** out);
void sd_graph_free(sd_graph* g);

int32_t sd_graph_order(const sd_graph* g);
int64_t sd_graph_edge_count(const sd_graph* g);
sd_status sd_graph_dist(const sd_graph* g, int32_t x, int32_t y, int64_t* out);

/* Predicates return 1, 0, or -1 on invalid arguments. */
int sd_graph_is_connected(const sd_graph* g);
int sd_graph_is_tree(const sd_graph* g);
int sd_graph_is_bipartite(const sd_graph* g);
int sd_graph_is_triangle_free(const sd_graph* g);
int sd_graph_lies_on_no_cycle(const sd_graph* g, int32_t x);

/* Parses "u1,u2,...,ut" into letters_out (capacity t). */
sd_status sd_parse_word(const char* text, int32_t n, int32_t t, int32_t* letters_out);

/* ---- distances in S(G,t) without materializing it --------------------- */

typedef struct sd_query_opts {
  int allow_oracle_fallback; /* build S(G,t') when no formula applies */
  int assert_premiss_b;      /* caller vouches for the path-structure premiss */
  uint64_t oracle_budget;    /* 0 means sd_default_budget() */
} sd_query_opts;

typedef struct sd_query_result {
  int64_t distance;
  sd_method method;
  int has_theta; /* the triangle-free recursion reports its candidates */
  int has_theta_prime;
  int64_t theta;
  int64_t theta_prime;
} sd_query_result;

/* Distance between two length-t words, routed to the strongest applicable
 * method. opts may be NULL (no fallback, default budget). */
sd_status sd_dist(const sd_graph* g, int32_t t, const int32_t* w, const int32_t* w2,
                  const sd_query_opts* opts, sd_query_result* out);

sd_status sd_extreme_extreme_dist(const sd_graph* g, int32_t x, int32_t y, int32_t t,
                                  int64_t* out);
sd_status sd_extreme_to_word(const sd_graph* g, int32_t x, const int32_t* w, int32_t t,
                             int64_t* out);

/* Diameter / radius / extreme-vertex eccentricity of S(G,t): closed form on
 * tree bases (closed_form set to 1), oracle scan otherwise (budget-guarded,
 * closed_form set to 0). closed_form may be NULL. */
sd_status sd_diameter(const sd_graph* g, int32_t t, uint64_t budget, int64_t* out,
                      int* closed_form);
sd_status sd_radius(const sd_graph* g, int32_t t, uint64_t budget, int64_t* out,
                    int* closed_form);
sd_status sd_extreme_ecc(const sd_graph* g, int32_t u, int32_t t, uint64_t budget, int64_t* out,
                         int* closed_form);

/* ---- explicit oracle --------------------------------------------------- */

sd_status sd_oracle_build(const sd_graph* g, int32_t t, uint64_t budget, sd_sierpinski** out);
void sd_oracle_free(sd_sierpinski* s);

int64_t sd_oracle_order(const sd_sierpinski* s);
int64_t sd_oracle_edge_count(const sd_sierpinski* s);
sd_status sd_oracle_dist(const sd_sierpinski* s, const int32_t* w, const int32_t* w2,
                         int64_t* out);
sd_status sd_oracle_eccentricity(const sd_sierpinski* s, const int32_t* w, int64_t* out);
sd_status sd_oracle_diameter(const sd_sierpinski* s, int64_t* out);
sd_status sd_oracle_radius(const sd_sierpinski* s, int64_t* out);

/* Deterministic DOT output (byte-stable for identical inputs). */
sd_status sd_oracle_export_dot(const sd_sierpinski* s, const char* path);

/* ---- verification sweep ------------------------------------------------ */

typedef struct sd_verify_report {
  int64_t pairs; /* method-vs-oracle comparisons performed */
  int64_t mismatches;
} sd_verify_report;

/* Exhaustively compares every applicable recursive method against BFS on
 * the materialized S(G,t). */
sd_status sd_verify_level(const sd_graph* g, int32_t t, uint64_t budget,
                          sd_verify_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SIERPDIST_H */
