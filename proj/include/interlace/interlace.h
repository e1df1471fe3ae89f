// Copyright 2026 The Interlace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INTERLACE_INTERLACE_H_
#define INTERLACE_INTERLACE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ITL_API __declspec(dllexport)
#else
#define ITL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum itl_status {
  ITL_OK = 0,
  ITL_ERR_INVALID_ARGUMENT = 1,
  ITL_ERR_PARSE = 2,
  ITL_ERR_GUARD = 3,
  ITL_ERR_INVALID_DECOMPOSITION = 4,
  ITL_ERR_IO = 5,
  ITL_ERR_INTERNAL = 6
} itl_status;

typedef struct itl_graph itl_graph;
typedef struct itl_td itl_td;
typedef struct itl_nice_td itl_nice_td;
typedef struct itl_assignment itl_assignment;
typedef struct itl_circuit itl_circuit;

typedef struct itl_options {
  size_t threads;
  size_t bag_limit;
  int full_enumeration;
} itl_options;

typedef struct itl_stats {
  size_t nodes;
  size_t max_bag;
  size_t parts_max;
  size_t parts_total;
  size_t join_pairs;
} itl_stats;

/* Message of the last failed call on this thread; "" if none. */
ITL_API const char* itl_last_error(void);
ITL_API const char* itl_version(void);
/* Frees any string returned through a char** out parameter. */
ITL_API void itl_string_free(char* s);
ITL_API itl_options itl_options_default(void);

/* Graphs. Vertex ids at this boundary are the 1-based labels used by .gr files. */
ITL_API itl_status itl_graph_parse_gr(const char* text, itl_graph** out);
ITL_API itl_status itl_graph_read_gr(const char* path, itl_graph** out);
/* pairs holds pair_count (a, b) label pairs; a == b adds a self loop. */
ITL_API itl_status itl_graph_from_edges(size_t n, const uint32_t* pairs, size_t pair_count, itl_graph** out);
ITL_API size_t itl_graph_vertex_count(const itl_graph* g);
ITL_API size_t itl_graph_edge_count(const itl_graph* g);
ITL_API size_t itl_graph_loop_count(const itl_graph* g);
/* Parser warnings (duplicate edges, edge-count mismatch). */
ITL_API size_t itl_graph_warning_count(const itl_graph* g);
ITL_API const char* itl_graph_warning(const itl_graph* g, size_t i);
ITL_API itl_status itl_graph_write_gr(const itl_graph* g, char** out);
ITL_API void itl_graph_free(itl_graph* g);

/* Seeded generators. family: "path", "cycle", "tree", "random" (edge
 * probability p), "ktree" (partial k-tree, edge keep probability p) or
 * "pathpower" (k-th power of a path). loops adds self loops with that
 * probability. td may be NULL; when given it receives the decomposition the
 * graph was built along, or a heuristic one. */
ITL_API itl_status itl_generate(const char* family, size_t n, size_t k, double p, double loops, uint64_t seed,
                                itl_graph** g, itl_td** td);

/* Tree decompositions. */
ITL_API itl_status itl_td_parse(const char* text, const itl_graph* g, itl_td** out);
ITL_API itl_status itl_td_read(const char* path, const itl_graph* g, itl_td** out);
ITL_API itl_status itl_td_heuristic(const itl_graph* g, itl_td** out);
/* *ok is 1 for a valid decomposition; otherwise *message names the violated condition. */
ITL_API itl_status itl_td_validate(const itl_graph* g, const itl_td* td, int* ok, char** message);
ITL_API size_t itl_td_width(const itl_td* td);
ITL_API itl_status itl_td_write(const itl_graph* g, const itl_td* td, char** out);
ITL_API void itl_td_free(itl_td* td);

ITL_API itl_status itl_nice_from_td(const itl_graph* g, const itl_td* td, itl_nice_td** out);
ITL_API size_t itl_nice_node_count(const itl_nice_td* ntd);
ITL_API size_t itl_nice_max_bag(const itl_nice_td* ntd);
ITL_API itl_status itl_nice_write(const itl_graph* g, const itl_nice_td* ntd, char** out);
/* Writes the vertex labels in forget order into labels (vertex-count entries). */
ITL_API itl_status itl_vertex_order(const itl_graph* g, const itl_nice_td* ntd, uint32_t* labels);
ITL_API void itl_nice_free(itl_nice_td* ntd);

/* Assignments. Values are rationals written "p/q" or as integers. */
ITL_API itl_status itl_assignment_new(const itl_graph* g, const char* x, const char* y, const char* u, const char* v,
                                      itl_assignment** out);
ITL_API itl_status itl_assignment_set_x(itl_assignment* a, uint32_t label, const char* value);
ITL_API itl_status itl_assignment_set_y(itl_assignment* a, uint32_t label, const char* value);
ITL_API void itl_assignment_free(itl_assignment* a);

/* Evaluation. options and stats may be NULL. Values come back as "p/q" or an integer. */
ITL_API itl_status itl_evaluate(const itl_graph* g, const itl_nice_td* ntd, const itl_assignment* a,
                                const itl_options* options, char** value, itl_stats* stats);
/* Same value via a symbolic v; only the v^0 coefficient is returned. */
ITL_API itl_status itl_evaluate_v0_symbolic(const itl_graph* g, const itl_nice_td* ntd, const itl_assignment* a,
                                            const itl_options* options, char** value);
ITL_API itl_status itl_evaluate_modular(const itl_graph* g, const itl_nice_td* ntd, const itl_assignment* a,
                                        uint64_t prime, const itl_options* options, uint64_t* value,
                                        itl_stats* stats);
/* Monomials of quasi-degree <= d as a JSON array. */
ITL_API itl_status itl_truncate(const itl_graph* g, const itl_nice_td* ntd, size_t d, const itl_options* options,
                                char** json, itl_stats* stats);
/* form: "two_var" (x and y used) or "vertex_nullity" (y used). */
ITL_API itl_status itl_specialize(const itl_graph* g, const itl_nice_td* ntd, const char* form, const char* x,
                                  const char* y, const itl_options* options, char** value);

/* Arithmetic circuits. */
ITL_API itl_status itl_circuit_build(const itl_graph* g, const itl_nice_td* ntd, const itl_options* options,
                                     itl_circuit** out, itl_stats* stats);
ITL_API itl_status itl_circuit_parse(const char* text, itl_circuit** out);
/* ADD and MUL gates. */
ITL_API size_t itl_circuit_gate_count(const itl_circuit* c);
/* All gates including inputs. */
ITL_API size_t itl_circuit_size(const itl_circuit* c);
ITL_API itl_status itl_circuit_write(const itl_circuit* c, char** out);
ITL_API itl_status itl_circuit_eval(const itl_circuit* c, const itl_graph* g, const itl_assignment* a, char** value);
ITL_API void itl_circuit_free(itl_circuit* c);

/* Brute force over all (A, B); limited to small graphs. */
ITL_API itl_status itl_oracle_evaluate(const itl_graph* g, const itl_assignment* a, char** value);
ITL_API itl_status itl_oracle_coefficients(const itl_graph* g, size_t d, char** json);

#ifdef __cplusplus
}
#endif

#endif  // INTERLACE_INTERLACE_H_
