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

#include "core/generators.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace interlace {

namespace {

bool coin(double p, Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

}  // namespace

Graph path_graph(std::size_t n) { return path_with_td(n).graph; }

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Graph random_tree(std::size_t n, Rng& rng) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  return g;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(p, rng)) g.add_edge(a, b);
    }
  }
  return g;
}

void add_random_loops(Graph& g, double p, Rng& rng) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (coin(p, rng)) g.add_edge(v, v);
  }
}

GraphWithTd path_with_td(std::size_t n) { return path_power_with_td(n, 1); }

GraphWithTd path_power_with_td(std::size_t n, std::size_t k) {
  if (k == 0) fail(ErrorKind::kInvalidArgument, "path power needs k >= 1");
  GraphWithTd out{Graph(n), {}};
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n && b <= a + k; ++b) out.graph.add_edge(a, b);
  }
  if (n <= k + 1) {
    std::vector<Vertex> bag(n);
    for (Vertex v = 0; v < n; ++v) bag[v] = v;
    out.td.bags.push_back(std::move(bag));
    return out;
  }
  for (std::size_t i = 0; i + k < n; ++i) {
    std::vector<Vertex> bag;
    for (std::size_t j = i; j <= i + k; ++j) bag.push_back(static_cast<Vertex>(j));
    out.td.bags.push_back(std::move(bag));
    if (i > 0) out.td.edges.emplace_back(i - 1, i);
  }
  return out;
}

GraphWithTd random_partial_ktree(std::size_t n, std::size_t k, double keep, Rng& rng) {
  GraphWithTd out{Graph(n), {}};
  if (n == 0) {
    out.td.bags.emplace_back();
    return out;
  }
  const std::size_t base = std::min(n, k + 1);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> first(base);
  for (Vertex v = 0; v < base; ++v) {
    first[v] = v;
    for (Vertex w = v + 1; w < base; ++w) edges.emplace_back(v, w);
  }
  out.td.bags.push_back(first);
  for (Vertex v = static_cast<Vertex>(base); v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick_bag(0, out.td.bags.size() - 1);
    const auto host = pick_bag(rng);
    auto clique = out.td.bags[host];
    if (clique.size() > k) {
      std::uniform_int_distribution<std::size_t> pick_drop(0, clique.size() - 1);
      clique.erase(clique.begin() + static_cast<std::ptrdiff_t>(pick_drop(rng)));
    }
    for (auto w : clique) edges.emplace_back(w, v);
    clique.push_back(v);
    out.td.bags.push_back(std::move(clique));
    out.td.edges.emplace_back(host, out.td.bags.size() - 1);
  }
  for (const auto& [a, b] : edges) {
    if (coin(keep, rng)) out.graph.add_edge(a, b);
  }
  return out;
}

}  // namespace interlace
