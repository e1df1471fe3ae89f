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

#include "core/graph.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace interlace {

Graph::Graph(std::size_t n) : neighbors_(n), loops_(n, 0), labels_(n) {
  std::iota(labels_.begin(), labels_.end(), std::int64_t{1});
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= size()) fail(ErrorKind::kInvalidArgument, "unknown vertex id " + std::to_string(v));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : neighbors_) twice += nb.size();
  return twice / 2;
}

std::size_t Graph::loop_count() const {
  return static_cast<std::size_t>(std::count(loops_.begin(), loops_.end(), 1));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return has_loop(a);
  const auto& nb = neighbors_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
  if (labels.size() != size()) fail(ErrorKind::kInvalidArgument, "label count does not match vertex count");
  labels_ = std::move(labels);
}

bool Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) {
    const bool fresh = loops_[a] == 0;
    loops_[a] = 1;
    return fresh;
  }
  auto& na = neighbors_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = neighbors_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  return true;
}

Graph Graph::induced(std::span<const Vertex> a) const {
  std::vector<Vertex> vs(a.begin(), a.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (auto v : vs) check_vertex(v);
  std::vector<std::int64_t> index(size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<std::int64_t>(i);

  Graph out(vs.size());
  std::vector<std::int64_t> labels(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex v = vs[i];
    labels[i] = labels_[v];
    out.loops_[i] = loops_[v];
    for (auto w : neighbors_[v]) {
      if (index[w] >= 0) out.neighbors_[i].push_back(static_cast<Vertex>(index[w]));
    }
  }
  out.labels_ = std::move(labels);
  return out;
}

Graph Graph::toggle_loops(std::span<const Vertex> a) const {
  for (auto v : a) check_vertex(v);
  Graph out = *this;
  for (auto v : a) out.loops_[v] ^= 1;
  return out;
}

gf2::SymMatrix Graph::adjacency(std::span<const Vertex> vertices) const {
  std::vector<std::uint32_t> labels(vertices.begin(), vertices.end());
  gf2::SymMatrix m(vertices.size(), std::move(labels));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) m.set(i, j, true);
    }
  }
  return m;
}

gf2::SymMatrix Graph::adjacency() const {
  std::vector<Vertex> all(size());
  std::iota(all.begin(), all.end(), Vertex{0});
  return adjacency(all);
}

RankNullity rank_nullity(const Graph& g) {
  const auto rk = gf2::rank(g.adjacency());
  return {rk, g.size() - rk};
}

}  // namespace interlace
