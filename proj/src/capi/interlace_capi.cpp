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

#include "interlace/interlace.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>

#include "core/circuit.hpp"
#include "core/error.hpp"
#include "core/evaluator.hpp"
#include "core/generators.hpp"
#include "core/io.hpp"
#include "core/oracle.hpp"
#include "core/tdecomp.hpp"

struct itl_graph {
  interlace::Graph graph;
  std::vector<std::string> warnings;
};

struct itl_td {
  interlace::TreeDecomposition td;
};

struct itl_nice_td {
  interlace::NiceTreeDecomposition ntd;
};

struct itl_assignment {
  interlace::Assignment asg;
  const itl_graph* graph = nullptr;
};

struct itl_circuit {
  interlace::Circuit circuit;
};

namespace {

using namespace interlace;

thread_local std::string last_error;

itl_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return ITL_ERR_INVALID_ARGUMENT;
    case ErrorKind::kParse:
      return ITL_ERR_PARSE;
    case ErrorKind::kGuard:
      return ITL_ERR_GUARD;
    case ErrorKind::kInvalidDecomposition:
      return ITL_ERR_INVALID_DECOMPOSITION;
    case ErrorKind::kIo:
      return ITL_ERR_IO;
    case ErrorKind::kInternal:
      break;
  }
  return ITL_ERR_INTERNAL;
}

template <typename F>
itl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ITL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ITL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ITL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorKind::kInvalidArgument, std::string(what) + " must not be null");
}

char* dup_string(std::string_view s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

EvalOptions options_of(const itl_options* o) {
  EvalOptions opt;
  if (o) {
    opt.threads = o->threads == 0 ? 1 : o->threads;
    opt.bag_limit = o->bag_limit;
    opt.full_enumeration = o->full_enumeration != 0;
  }
  return opt;
}

void export_stats(const EvalStats& s, itl_stats* out) {
  if (!out) return;
  out->nodes = s.nodes;
  out->max_bag = s.max_bag;
  out->parts_max = s.parts_max;
  out->parts_total = s.parts_total;
  out->join_pairs = s.join_pairs;
}

Vertex vertex_of(const Graph& g, std::uint32_t label) {
  if (label >= 1 && label <= g.size() && g.label(label - 1) == label) return label - 1;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.label(v) == label) return v;
  }
  fail(ErrorKind::kInvalidArgument, "unknown vertex " + std::to_string(label));
}

void check_assignment(const itl_graph* g, const itl_assignment* a) {
  require(a, "assignment");
  if (a->asg.x.size() != g->graph.size()) fail(ErrorKind::kInvalidArgument, "assignment belongs to another graph");
}

}  // namespace

extern "C" {

const char* itl_last_error(void) { return last_error.c_str(); }

const char* itl_version(void) { return "1.0.0"; }

void itl_string_free(char* s) { std::free(s); }

itl_options itl_options_default(void) { return itl_options{1, kDefaultBagLimit, 0}; }

itl_status itl_graph_parse_gr(const char* text, itl_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto file = parse_gr(text);
    *out = new itl_graph{std::move(file.graph), std::move(file.warnings)};
  });
}

itl_status itl_graph_read_gr(const char* path, itl_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto file = read_gr(path);
    *out = new itl_graph{std::move(file.graph), std::move(file.warnings)};
  });
}

itl_status itl_graph_from_edges(size_t n, const uint32_t* pairs, size_t pair_count, itl_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (pair_count) require(pairs, "pairs");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (size_t i = 0; i < pair_count; ++i) {
      const auto a = pairs[2 * i];
      const auto b = pairs[2 * i + 1];
      if (a < 1 || a > n || b < 1 || b > n) fail(ErrorKind::kInvalidArgument, "edge endpoint out of range");
      edges.emplace_back(a - 1, b - 1);
    }
    *out = new itl_graph{Graph::from_edges(n, edges), {}};
  });
}

size_t itl_graph_vertex_count(const itl_graph* g) { return g ? g->graph.size() : 0; }
size_t itl_graph_edge_count(const itl_graph* g) { return g ? g->graph.edge_count() : 0; }
size_t itl_graph_loop_count(const itl_graph* g) { return g ? g->graph.loop_count() : 0; }
size_t itl_graph_warning_count(const itl_graph* g) { return g ? g->warnings.size() : 0; }

const char* itl_graph_warning(const itl_graph* g, size_t i) {
  if (!g || i >= g->warnings.size()) return nullptr;
  return g->warnings[i].c_str();
}

itl_status itl_graph_write_gr(const itl_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(write_gr(g->graph));
  });
}

void itl_graph_free(itl_graph* g) { delete g; }

itl_status itl_generate(const char* family, size_t n, size_t k, double p, double loops, uint64_t seed, itl_graph** g,
                        itl_td** td) {
  return guarded([&] {
    require(family, "family");
    require(g, "graph out");
    if (p < 0 || p > 1 || loops < 0 || loops > 1) fail(ErrorKind::kInvalidArgument, "probabilities must lie in [0, 1]");
    Rng rng(seed);
    const std::string_view f = family;
    GraphWithTd out;
    bool have_td = false;
    if (f == "path") {
      out = path_with_td(n);
      have_td = true;
    } else if (f == "cycle") {
      out.graph = cycle_graph(n);
    } else if (f == "tree") {
      out.graph = random_tree(n, rng);
    } else if (f == "random") {
      out.graph = random_graph(n, p, rng);
    } else if (f == "ktree") {
      if (k == 0) fail(ErrorKind::kInvalidArgument, "ktree needs k >= 1");
      out = random_partial_ktree(n, k, p, rng);
      have_td = true;
    } else if (f == "pathpower") {
      if (k == 0) fail(ErrorKind::kInvalidArgument, "pathpower needs k >= 1");
      out = path_power_with_td(n, k);
      have_td = true;
    } else {
      fail(ErrorKind::kInvalidArgument, "unknown graph family '" + std::string(f) + "'");
    }
    if (loops > 0) add_random_loops(out.graph, loops, rng);
    if (td && !have_td) out.td = heuristic_td(out.graph);
    auto* graph = new itl_graph{std::move(out.graph), {}};
    if (td) *td = new itl_td{std::move(out.td)};
    *g = graph;
  });
}

itl_status itl_td_parse(const char* text, const itl_graph* g, itl_td** out) {
  return guarded([&] {
    require(text, "text");
    require(g, "graph");
    require(out, "out");
    *out = new itl_td{parse_td(text, g->graph)};
  });
}

itl_status itl_td_read(const char* path, const itl_graph* g, itl_td** out) {
  return guarded([&] {
    require(path, "path");
    require(g, "graph");
    require(out, "out");
    *out = new itl_td{read_td(path, g->graph)};
  });
}

itl_status itl_td_heuristic(const itl_graph* g, itl_td** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new itl_td{heuristic_td(g->graph)};
  });
}

itl_status itl_td_validate(const itl_graph* g, const itl_td* td, int* ok, char** message) {
  return guarded([&] {
    require(g, "graph");
    require(td, "decomposition");
    require(ok, "ok");
    const auto report = validate(g->graph, td->td);
    *ok = report.ok() ? 1 : 0;
    if (message) *message = dup_string(report.ok() ? "ok" : report.message);
  });
}

size_t itl_td_width(const itl_td* td) { return td ? td->td.width() : 0; }

itl_status itl_td_write(const itl_graph* g, const itl_td* td, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(td, "decomposition");
    require(out, "out");
    *out = dup_string(write_td(g->graph, td->td));
  });
}

void itl_td_free(itl_td* td) { delete td; }

itl_status itl_nice_from_td(const itl_graph* g, const itl_td* td, itl_nice_td** out) {
  return guarded([&] {
    require(g, "graph");
    require(td, "decomposition");
    require(out, "out");
    *out = new itl_nice_td{make_nice(g->graph, td->td)};
  });
}

size_t itl_nice_node_count(const itl_nice_td* ntd) { return ntd ? ntd->ntd.size() : 0; }
size_t itl_nice_max_bag(const itl_nice_td* ntd) { return ntd ? ntd->ntd.max_bag() : 0; }

itl_status itl_nice_write(const itl_graph* g, const itl_nice_td* ntd, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    require(out, "out");
    *out = dup_string(write_nice(g->graph, ntd->ntd));
  });
}

itl_status itl_vertex_order(const itl_graph* g, const itl_nice_td* ntd, uint32_t* labels) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    if (g->graph.size()) require(labels, "labels");
    const auto order = vertex_order(ntd->ntd, g->graph.size());
    const auto& seq = order.in_order();
    for (size_t i = 0; i < seq.size(); ++i) labels[i] = static_cast<uint32_t>(g->graph.label(seq[i]));
  });
}

void itl_nice_free(itl_nice_td* ntd) { delete ntd; }

itl_status itl_assignment_new(const itl_graph* g, const char* x, const char* y, const char* u, const char* v,
                              itl_assignment** out) {
  return guarded([&] {
    require(g, "graph");
    require(x, "x");
    require(y, "y");
    require(u, "u");
    require(v, "v");
    require(out, "out");
    *out = new itl_assignment{
        Assignment::uniform(g->graph.size(), parse_rational(x), parse_rational(y), parse_rational(u),
                            parse_rational(v)),
        g};
  });
}

itl_status itl_assignment_set_x(itl_assignment* a, uint32_t label, const char* value) {
  return guarded([&] {
    require(a, "assignment");
    require(value, "value");
    a->asg.x[vertex_of(a->graph->graph, label)] = parse_rational(value);
  });
}

itl_status itl_assignment_set_y(itl_assignment* a, uint32_t label, const char* value) {
  return guarded([&] {
    require(a, "assignment");
    require(value, "value");
    a->asg.y[vertex_of(a->graph->graph, label)] = parse_rational(value);
  });
}

void itl_assignment_free(itl_assignment* a) { delete a; }

itl_status itl_evaluate(const itl_graph* g, const itl_nice_td* ntd, const itl_assignment* a,
                        const itl_options* options, char** value, itl_stats* stats) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    require(value, "value");
    check_assignment(g, a);
    EvalStats s;
    const auto q = evaluate(g->graph, ntd->ntd, a->asg, options_of(options), &s);
    *value = dup_string(format_rational(q));
    export_stats(s, stats);
  });
}

itl_status itl_evaluate_v0_symbolic(const itl_graph* g, const itl_nice_td* ntd, const itl_assignment* a,
                                    const itl_options* options, char** value) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    require(value, "value");
    check_assignment(g, a);
    *value = dup_string(format_rational(evaluate_v0_symbolic(g->graph, ntd->ntd, a->asg, options_of(options))));
  });
}

itl_status itl_evaluate_modular(const itl_graph* g, const itl_nice_td* ntd, const itl_assignment* a,
                                uint64_t prime, const itl_options* options, uint64_t* value, itl_stats* stats) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    require(value, "value");
    check_assignment(g, a);
    EvalStats s;
    *value = evaluate_modular(g->graph, ntd->ntd, a->asg, prime, options_of(options), &s);
    export_stats(s, stats);
  });
}

itl_status itl_truncate(const itl_graph* g, const itl_nice_td* ntd, size_t d, const itl_options* options,
                        char** json, itl_stats* stats) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    require(json, "json");
    EvalStats s;
    const auto poly = truncate(g->graph, ntd->ntd, d, options_of(options), &s);
    *json = dup_string(poly.to_json(g->graph));
    export_stats(s, stats);
  });
}

itl_status itl_specialize(const itl_graph* g, const itl_nice_td* ntd, const char* form, const char* x,
                          const char* y, const itl_options* options, char** value) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    require(form, "form");
    require(y, "y");
    require(value, "value");
    const std::string_view f = form;
    Substitution sub;
    mpq_class xq = 0;
    if (f == "two_var") {
      require(x, "x");
      sub = Substitution::kTwoVariable;
      xq = parse_rational(x);
    } else if (f == "vertex_nullity") {
      sub = Substitution::kVertexNullity;
    } else {
      fail(ErrorKind::kInvalidArgument, "unknown form '" + std::string(f) + "'");
    }
    const auto q = specialize(g->graph, ntd->ntd, sub, xq, parse_rational(y), options_of(options));
    *value = dup_string(format_rational(q));
  });
}

itl_status itl_circuit_build(const itl_graph* g, const itl_nice_td* ntd, const itl_options* options,
                             itl_circuit** out, itl_stats* stats) {
  return guarded([&] {
    require(g, "graph");
    require(ntd, "decomposition");
    require(out, "out");
    EvalStats s;
    auto c = build_circuit(g->graph, ntd->ntd, options_of(options), &s);
    *out = new itl_circuit{std::move(c)};
    export_stats(s, stats);
  });
}

itl_status itl_circuit_parse(const char* text, itl_circuit** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new itl_circuit{Circuit::parse(text)};
  });
}

size_t itl_circuit_gate_count(const itl_circuit* c) { return c ? c->circuit.operation_count() : 0; }
size_t itl_circuit_size(const itl_circuit* c) { return c ? c->circuit.gates().size() : 0; }

itl_status itl_circuit_write(const itl_circuit* c, char** out) {
  return guarded([&] {
    require(c, "circuit");
    require(out, "out");
    *out = dup_string(c->circuit.to_text());
  });
}

itl_status itl_circuit_eval(const itl_circuit* c, const itl_graph* g, const itl_assignment* a, char** value) {
  return guarded([&] {
    require(c, "circuit");
    require(g, "graph");
    require(value, "value");
    check_assignment(g, a);
    *value = dup_string(format_rational(eval_circuit(c->circuit, g->graph, a->asg)));
  });
}

void itl_circuit_free(itl_circuit* c) { delete c; }

itl_status itl_oracle_evaluate(const itl_graph* g, const itl_assignment* a, char** value) {
  return guarded([&] {
    require(g, "graph");
    require(value, "value");
    check_assignment(g, a);
    *value = dup_string(format_rational(oracle_evaluate(g->graph, a->asg)));
  });
}

itl_status itl_oracle_coefficients(const itl_graph* g, size_t d, char** json) {
  return guarded([&] {
    require(g, "graph");
    require(json, "json");
    *json = dup_string(oracle_coefficients(g->graph, d).to_json(g->graph));
  });
}

}  // extern "C"
