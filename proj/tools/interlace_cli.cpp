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

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "interlace/interlace.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr std::size_t kBagWarnThreshold = 5;

struct Deleter {
  void operator()(itl_graph* p) const { itl_graph_free(p); }
  void operator()(itl_td* p) const { itl_td_free(p); }
  void operator()(itl_nice_td* p) const { itl_nice_free(p); }
  void operator()(itl_assignment* p) const { itl_assignment_free(p); }
  void operator()(itl_circuit* p) const { itl_circuit_free(p); }
};
template <typename T>
using Owned = std::unique_ptr<T, Deleter>;

// Carries a failed status up to main, which maps it to an exit code.
struct Failure {
  itl_status status;
  std::string message;
};

void check(itl_status s) {
  if (s != ITL_OK) throw Failure{s, itl_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  itl_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{ITL_ERR_IO, "cannot write " + path};
  out << text;
  if (!out) throw Failure{ITL_ERR_IO, "cannot write " + path};
}

struct EngineFlags {
  std::size_t threads = 1;
  std::size_t bag_limit = 0;
  bool full_enumeration = false;
  bool stats = false;

  void attach(CLI::App* app) {
    app->add_option("--threads", threads, "worker threads for join nodes")->check(CLI::PositiveNumber);
    app->add_option("--bag-limit", bag_limit, "refuse decompositions with larger bags");
    app->add_flag("--full-enumeration", full_enumeration, "iterate every scenario pair at join nodes");
    app->add_flag("--stats", stats, "print table statistics to stderr");
  }

  itl_options options() const {
    auto o = itl_options_default();
    o.threads = threads;
    if (bag_limit) o.bag_limit = bag_limit;
    o.full_enumeration = full_enumeration ? 1 : 0;
    return o;
  }

  void report(const itl_stats& s) const {
    if (!stats) return;
    std::cerr << "nodes " << s.nodes << " max_bag " << s.max_bag << " parts_max " << s.parts_max << " parts_total "
              << s.parts_total << " join_pairs " << s.join_pairs << '\n';
  }
};

struct Problem {
  Owned<itl_graph> graph;
  Owned<itl_td> td;
  Owned<itl_nice_td> nice;
};

Owned<itl_graph> load_graph(const std::string& path) {
  itl_graph* g = nullptr;
  check(itl_graph_read_gr(path.c_str(), &g));
  Owned<itl_graph> out(g);
  for (std::size_t i = 0; i < itl_graph_warning_count(g); ++i) {
    std::cerr << "warning: " << path << ": " << itl_graph_warning(g, i) << '\n';
  }
  return out;
}

Owned<itl_td> load_td(const itl_graph* g, const std::string& path) {
  itl_td* td = nullptr;
  if (path.empty()) {
    check(itl_td_heuristic(g, &td));
  } else {
    check(itl_td_read(path.c_str(), g, &td));
  }
  return Owned<itl_td>(td);
}

Problem load_problem(const std::string& graph_path, const std::string& td_path) {
  Problem p;
  p.graph = load_graph(graph_path);
  p.td = load_td(p.graph.get(), td_path);
  itl_nice_td* ntd = nullptr;
  check(itl_nice_from_td(p.graph.get(), p.td.get(), &ntd));
  p.nice.reset(ntd);
  const auto bag = itl_nice_max_bag(ntd);
  if (bag > kBagWarnThreshold) {
    std::cerr << "warning: largest bag has " << bag << " vertices; tables grow as 2^(3k^2), expect long run times\n";
  }
  return p;
}

enum class Column { kX, kY, kBoth };

// Lines "vertex value" (or "vertex x y" for kBoth); '#' starts a comment.
void apply_vertex_file(itl_assignment* a, const std::string& path, Column column) {
  std::ifstream in(path);
  if (!in) throw Failure{ITL_ERR_IO, "cannot read " + path};
  const std::size_t want = column == Column::kBoth ? 3 : 2;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto where = path + ": line " + std::to_string(line_no) + ": ";
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> cols;
    for (std::string w; words >> w;) cols.push_back(w);
    if (cols.empty()) continue;
    if (cols.size() != want) {
      throw Failure{ITL_ERR_PARSE, where + (want == 3 ? "expected 'vertex x y'" : "expected 'vertex value'")};
    }
    std::uint32_t label = 0;
    try {
      std::size_t used = 0;
      label = static_cast<std::uint32_t>(std::stoul(cols[0], &used));
      if (used != cols[0].size()) throw std::invalid_argument(cols[0]);
    } catch (const std::exception&) {
      throw Failure{ITL_ERR_PARSE, where + "bad vertex '" + cols[0] + "'"};
    }
    auto set = [&](itl_status s) {
      if (s != ITL_OK) throw Failure{s == ITL_ERR_INVALID_ARGUMENT ? ITL_ERR_PARSE : s, where + itl_last_error()};
    };
    if (column != Column::kY) set(itl_assignment_set_x(a, label, cols[1].c_str()));
    if (column == Column::kY) set(itl_assignment_set_y(a, label, cols[1].c_str()));
    if (column == Column::kBoth) set(itl_assignment_set_y(a, label, cols[2].c_str()));
  }
}

struct AssignmentFlags {
  std::string x = "1";
  std::string y = "1";
  std::string u = "1";
  std::string v = "1";
  std::string x_file;
  std::string y_file;
  std::string per_vertex;

  void attach(CLI::App* app) {
    app->add_option("--x,--x-default", x, "value of every x_a not set by --x-file");
    app->add_option("--y,--y-default", y, "value of every y_a not set by --y-file");
    app->add_option("--u", u, "value of u");
    app->add_option("--v", v, "value of v");
    app->add_option("--x-file", x_file, "per-vertex x values, lines 'vertex value'");
    app->add_option("--y-file", y_file, "per-vertex y values, lines 'vertex value'");
    app->add_option("--per-vertex", per_vertex, "per-vertex x and y values, lines 'vertex x y'");
  }

  Owned<itl_assignment> build(const itl_graph* g) const {
    itl_assignment* a = nullptr;
    const auto s = itl_assignment_new(g, x.c_str(), y.c_str(), u.c_str(), v.c_str(), &a);
    if (s == ITL_ERR_INVALID_ARGUMENT) throw Failure{ITL_ERR_PARSE, itl_last_error()};
    check(s);
    Owned<itl_assignment> out(a);
    if (!per_vertex.empty()) apply_vertex_file(a, per_vertex, Column::kBoth);
    if (!x_file.empty()) apply_vertex_file(a, x_file, Column::kX);
    if (!y_file.empty()) apply_vertex_file(a, y_file, Column::kY);
    return out;
  }
};

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(item, &used);
      if (used != item.size() || value < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(value));
    } catch (const std::exception&) {
      throw Failure{ITL_ERR_PARSE, "bad list entry '" + item + "'"};
    }
  }
  if (out.empty()) throw Failure{ITL_ERR_PARSE, "empty list"};
  return out;
}

std::string random_rational(std::mt19937_64& rng, bool allow_zero) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  int p = num(rng);
  while (!allow_zero && p == 0) p = num(rng);
  return std::to_string(p) + "/" + std::to_string(den(rng));
}

Owned<itl_assignment> random_assignment(const itl_graph* g, std::mt19937_64& rng, bool v_zero) {
  itl_assignment* a = nullptr;
  const auto u = random_rational(rng, true);
  const auto v = v_zero ? std::string("0") : random_rational(rng, false);
  check(itl_assignment_new(g, "1", "1", u.c_str(), v.c_str(), &a));
  Owned<itl_assignment> out(a);
  for (std::uint32_t label = 1; label <= itl_graph_vertex_count(g); ++label) {
    check(itl_assignment_set_x(a, label, random_rational(rng, true).c_str()));
    check(itl_assignment_set_y(a, label, random_rational(rng, true).c_str()));
  }
  return out;
}

int exit_code(itl_status s) {
  switch (s) {
    case ITL_OK:
      return kExitOk;
    case ITL_ERR_PARSE:
      return kExitParse;
    default:
      return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interlace polynomial evaluation over tree decompositions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", itl_version());

  std::string graph_path;
  std::string td_path;
  std::string out_path;
  EngineFlags engine;
  AssignmentFlags values;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate C(G) at a rational point");
  std::uint64_t modulus = 0;
  bool symbolic_v0 = false;
  eval->add_option("-g,--graph", graph_path, "graph in .gr format")->required();
  eval->add_option("-t,--td", td_path, "tree decomposition in .td format (default: min-fill heuristic)");
  eval->add_option("--modular", modulus, "evaluate modulo this prime instead of exactly");
  eval->add_flag("--symbolic-v0", symbolic_v0, "carry v symbolically and print the v^0 coefficient");
  values.attach(eval);
  engine.attach(eval);

  // truncate
  auto* trunc = app.add_subcommand("truncate", "monomials of quasi-degree at most d");
  std::size_t degree = 0;
  trunc->add_option("-g,--graph", graph_path, "graph in .gr format")->required();
  trunc->add_option("-t,--td", td_path, "tree decomposition in .td format");
  trunc->add_option("-d,--degree", degree, "quasi-degree cap")->required();
  trunc->add_option("-o,--output", out_path, "JSON output file (default: stdout)");
  engine.attach(trunc);

  // specialize
  auto* spec = app.add_subcommand("specialize", "evaluate a named substitution");
  std::string form = "two_var";
  std::string at;
  spec->add_option("-g,--graph", graph_path, "graph in .gr format")->required();
  spec->add_option("-t,--td", td_path, "tree decomposition in .td format");
  spec->add_option("--form", form, "two_var or vertex_nullity")->check(CLI::IsMember({"two_var", "vertex_nullity"}));
  spec->add_option("--at", at, "point, e.g. x=2,y=3/2")->required();
  engine.attach(spec);

  // td
  auto* td = app.add_subcommand("td", "tree decomposition tools");
  td->require_subcommand(1);
  auto* td_validate = td->add_subcommand("validate", "check a decomposition against a graph");
  td_validate->add_option("-g,--graph", graph_path)->required();
  td_validate->add_option("-t,--td", td_path)->required();
  auto* td_heuristic = td->add_subcommand("heuristic", "min-fill decomposition in .td format");
  td_heuristic->add_option("-g,--graph", graph_path)->required();
  td_heuristic->add_option("-o,--output", out_path);
  auto* td_nice = td->add_subcommand("nice", "nice decomposition, one node per line");
  td_nice->add_option("-g,--graph", graph_path)->required();
  td_nice->add_option("-t,--td", td_path);
  td_nice->add_option("-o,--output", out_path);
  auto* td_order = td->add_subcommand("order", "vertex labels in forget order");
  td_order->add_option("-g,--graph", graph_path)->required();
  td_order->add_option("-t,--td", td_path);

  // circuit
  auto* circuit = app.add_subcommand("circuit", "arithmetic circuits");
  circuit->require_subcommand(1);
  auto* circuit_emit = circuit->add_subcommand("emit", "compile C(G) to a circuit");
  circuit_emit->add_option("-g,--graph", graph_path)->required();
  circuit_emit->add_option("-t,--td", td_path);
  circuit_emit->add_option("-o,--output", out_path);
  engine.attach(circuit_emit);
  auto* circuit_eval = circuit->add_subcommand("eval", "evaluate a circuit file");
  std::string circuit_path;
  circuit_eval->add_option("-c,--circuit", circuit_path, "circuit text file")->required();
  circuit_eval->add_option("-g,--graph", graph_path, "graph whose vertex labels name the variables")->required();
  values.attach(circuit_eval);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force reference");
  oracle->require_subcommand(1);
  auto* oracle_eval = oracle->add_subcommand("eval", "evaluate by enumerating all (A, B)");
  oracle_eval->add_option("-g,--graph", graph_path)->required();
  values.attach(oracle_eval);
  auto* oracle_coeffs = oracle->add_subcommand("coeffs", "monomials of quasi-degree at most d");
  oracle_coeffs->add_option("-g,--graph", graph_path)->required();
  oracle_coeffs->add_option("-d,--degree", degree)->required();
  oracle_coeffs->add_option("-o,--output", out_path);
  auto* oracle_compare = oracle->add_subcommand("compare", "tree-decomposition DP against brute force");
  std::size_t compare_count = 50;
  std::size_t compare_max_n = 7;
  std::uint64_t seed = 1;
  oracle_compare->add_option("--count", compare_count, "number of random graphs");
  oracle_compare->add_option("--max-n", compare_max_n, "largest vertex count")->check(CLI::Range(1, 10));
  oracle_compare->add_option("--seed", seed);

  // gen
  auto* gen = app.add_subcommand("gen", "seeded graph generators");
  std::string kind;
  std::size_t gen_n = 0;
  std::size_t gen_k = 0;
  double gen_p = 0.3;
  double gen_loops = 0;
  std::string td_out;
  gen->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "tree", "random", "ktree", "pathpower"}));
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--k", gen_k, "width for ktree and pathpower");
  gen->add_option("--p", gen_p, "edge probability (random) or keep probability (ktree)");
  gen->add_option("--seed", seed);
  gen->add_option("--loops", gen_loops, "self-loop probability per vertex");
  gen->add_option("-o,--output", out_path, ".gr output (default: stdout)");
  gen->add_option("--td-out", td_out, "also write the matching decomposition");

  // bench
  auto* bench = app.add_subcommand("bench", "timing runs, CSV n,ms,parts_max,gates");
  std::size_t bench_k = 1;
  std::string n_list = "1000,10000,100000";
  std::string domain = "modular";
  bool no_circuit = false;
  std::string bench_kind = "path";
  bench->add_option("--kind", bench_kind, "path (k-th path power) or ktree")->check(CLI::IsMember({"path", "ktree"}));
  bench->add_option("--k", bench_k, "decomposition width")->check(CLI::PositiveNumber);
  bench->add_option("--n-list", n_list, "comma-separated vertex counts");
  bench->add_option("--seed", seed);
  bench->add_option("--domain", domain, "modular or rational")->check(CLI::IsMember({"modular", "rational"}));
  bench->add_flag("--no-circuit", no_circuit, "skip circuit construction (gates column left empty)");
  engine.attach(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*eval) {
      auto p = load_problem(graph_path, td_path);
      auto a = values.build(p.graph.get());
      const auto opt = engine.options();
      itl_stats stats{};
      if (modulus) {
        std::uint64_t value = 0;
        check(itl_evaluate_modular(p.graph.get(), p.nice.get(), a.get(), modulus, &opt, &value, &stats));
        std::cout << value << '\n';
      } else if (symbolic_v0) {
        char* value = nullptr;
        check(itl_evaluate_v0_symbolic(p.graph.get(), p.nice.get(), a.get(), &opt, &value));
        std::cout << take(value) << '\n';
      } else {
        char* value = nullptr;
        check(itl_evaluate(p.graph.get(), p.nice.get(), a.get(), &opt, &value, &stats));
        std::cout << take(value) << '\n';
      }
      engine.report(stats);
    } else if (*trunc) {
      auto p = load_problem(graph_path, td_path);
      const auto opt = engine.options();
      itl_stats stats{};
      char* json = nullptr;
      check(itl_truncate(p.graph.get(), p.nice.get(), degree, &opt, &json, &stats));
      emit(take(json), out_path);
      engine.report(stats);
    } else if (*spec) {
      auto p = load_problem(graph_path, td_path);
      std::string x = "0";
      std::string y;
      std::stringstream in(at);
      std::string item;
      while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Failure{ITL_ERR_PARSE, "--at expects name=value pairs"};
        const auto name = item.substr(0, eq);
        if (name == "x") {
          x = item.substr(eq + 1);
        } else if (name == "y") {
          y = item.substr(eq + 1);
        } else {
          throw Failure{ITL_ERR_PARSE, "--at: unknown variable '" + name + "'"};
        }
      }
      if (y.empty()) throw Failure{ITL_ERR_PARSE, "--at needs y=..."};
      const auto opt = engine.options();
      char* value = nullptr;
      const auto s = itl_specialize(p.graph.get(), p.nice.get(), form.c_str(), x.c_str(), y.c_str(), &opt, &value);
      if (s == ITL_ERR_INVALID_ARGUMENT) throw Failure{ITL_ERR_PARSE, itl_last_error()};
      check(s);
      std::cout << take(value) << '\n';
    } else if (*td_validate) {
      auto g = load_graph(graph_path);
      auto t = load_td(g.get(), td_path);
      int ok = 0;
      char* message = nullptr;
      check(itl_td_validate(g.get(), t.get(), &ok, &message));
      const auto text = take(message);
      if (!ok) {
        std::cout << "invalid: " << text << '\n';
        return kExitFailure;
      }
      std::cout << "ok width " << itl_td_width(t.get()) << '\n';
    } else if (*td_heuristic) {
      auto g = load_graph(graph_path);
      auto t = load_td(g.get(), "");
      char* text = nullptr;
      check(itl_td_write(g.get(), t.get(), &text));
      emit(take(text), out_path);
    } else if (*td_nice) {
      auto p = load_problem(graph_path, td_path);
      char* text = nullptr;
      check(itl_nice_write(p.graph.get(), p.nice.get(), &text));
      emit(take(text), out_path);
    } else if (*td_order) {
      auto p = load_problem(graph_path, td_path);
      std::vector<std::uint32_t> labels(itl_graph_vertex_count(p.graph.get()));
      check(itl_vertex_order(p.graph.get(), p.nice.get(), labels.data()));
      for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? " " : "") << labels[i];
      std::cout << '\n';
    } else if (*circuit_emit) {
      auto p = load_problem(graph_path, td_path);
      const auto opt = engine.options();
      itl_stats stats{};
      itl_circuit* c = nullptr;
      check(itl_circuit_build(p.graph.get(), p.nice.get(), &opt, &c, &stats));
      Owned<itl_circuit> hold(c);
      char* text = nullptr;
      check(itl_circuit_write(c, &text));
      emit(take(text), out_path);
      if (engine.stats) std::cerr << "gates " << itl_circuit_gate_count(c) << " inputs "
                                  << itl_circuit_size(c) - itl_circuit_gate_count(c) << '\n';
      engine.report(stats);
    } else if (*circuit_eval) {
      std::ifstream in(circuit_path, std::ios::binary);
      if (!in) throw Failure{ITL_ERR_IO, "cannot read " + circuit_path};
      std::stringstream buf;
      buf << in.rdbuf();
      itl_circuit* c = nullptr;
      check(itl_circuit_parse(buf.str().c_str(), &c));
      Owned<itl_circuit> hold(c);
      auto g = load_graph(graph_path);
      auto a = values.build(g.get());
      char* value = nullptr;
      check(itl_circuit_eval(c, g.get(), a.get(), &value));
      std::cout << take(value) << '\n';
    } else if (*oracle_eval) {
      auto g = load_graph(graph_path);
      auto a = values.build(g.get());
      char* value = nullptr;
      check(itl_oracle_evaluate(g.get(), a.get(), &value));
      std::cout << take(value) << '\n';
    } else if (*oracle_coeffs) {
      auto g = load_graph(graph_path);
      char* json = nullptr;
      check(itl_oracle_coefficients(g.get(), degree, &json));
      emit(take(json), out_path);
    } else if (*oracle_compare) {
      std::mt19937_64 rng(seed);
      std::size_t agree = 0;
      for (std::size_t i = 0; i < compare_count; ++i) {
        const std::size_t n = 1 + rng() % compare_max_n;
        itl_graph* gp = nullptr;
        itl_td* tp = nullptr;
        check(itl_generate("random", n, 0, 0.5, 0.3, rng(), &gp, &tp));
        Owned<itl_graph> g(gp);
        Owned<itl_td> t(tp);
        itl_nice_td* np = nullptr;
        check(itl_nice_from_td(gp, tp, &np));
        Owned<itl_nice_td> nice(np);
        auto a = random_assignment(gp, rng, i % 5 == 4);
        char* fast = nullptr;
        char* slow = nullptr;
        check(itl_evaluate(gp, np, a.get(), nullptr, &fast, nullptr));
        check(itl_oracle_evaluate(gp, a.get(), &slow));
        const auto f = take(fast);
        const auto s = take(slow);
        if (f == s) {
          ++agree;
        } else {
          char* gr = nullptr;
          check(itl_graph_write_gr(gp, &gr));
          std::cerr << "mismatch on graph " << i << ": dp " << f << " oracle " << s << '\n' << take(gr);
        }
      }
      std::cout << (agree == compare_count ? "OK " : "FAIL ") << agree << '/' << compare_count << '\n';
      if (agree != compare_count) return kExitFailure;
    } else if (*gen) {
      itl_graph* g = nullptr;
      itl_td* t = nullptr;
      check(itl_generate(kind.c_str(), gen_n, gen_k, gen_p, gen_loops, seed, &g, td_out.empty() ? nullptr : &t));
      Owned<itl_graph> graph(g);
      Owned<itl_td> tdh(t);
      char* text = nullptr;
      check(itl_graph_write_gr(g, &text));
      emit(take(text), out_path);
      if (t) {
        check(itl_td_write(g, t, &text));
        emit(take(text), td_out);
      }
    } else if (*bench) {
      const auto ns = parse_size_list(n_list);
      const auto opt = engine.options();
      std::cout << "n,ms,parts_max,gates\n";
      for (const auto n : ns) {
        itl_graph* g = nullptr;
        itl_td* t = nullptr;
        if (bench_kind == "path") {
          check(itl_generate(bench_k == 1 ? "path" : "pathpower", n, bench_k, 0, 0, seed, &g, &t));
        } else {
          check(itl_generate("ktree", n, bench_k, 0.7, 0.2, seed, &g, &t));
        }
        Owned<itl_graph> graph(g);
        Owned<itl_td> tdh(t);
        itl_nice_td* np = nullptr;
        check(itl_nice_from_td(g, t, &np));
        Owned<itl_nice_td> nice(np);
        itl_assignment* ap = nullptr;
        check(itl_assignment_new(g, "2", "3", "5", "7", &ap));
        Owned<itl_assignment> a(ap);
        itl_stats stats{};
        const auto start = std::chrono::steady_clock::now();
        if (domain == "modular") {
          std::uint64_t value = 0;
          check(itl_evaluate_modular(g, np, ap, 2305843009213693951ULL, &opt, &value, &stats));
        } else {
          char* value = nullptr;
          check(itl_evaluate(g, np, ap, &opt, &value, &stats));
          take(value);
        }
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        std::string gates;
        if (!no_circuit) {
          itl_circuit* c = nullptr;
          check(itl_circuit_build(g, np, &opt, &c, nullptr));
          gates = std::to_string(itl_circuit_gate_count(c));
          itl_circuit_free(c);
        }
        std::cout << n << ',' << ms.count() << ',' << stats.parts_max << ',' << gates << '\n';
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return exit_code(f.status);
  }
  return kExitOk;
}
