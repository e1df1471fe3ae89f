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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/gf2.hpp"

namespace interlace {

using Vertex = std::uint32_t;

/// Undirected simple graph with optional self loops. Vertices are dense
/// 0-based ids; `label(v)` keeps the external id used in files.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list; a pair (v, v) declares a loop.
  /// Repeated edges collapse to one.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t size() const { return neighbors_.size(); }
  std::size_t edge_count() const;  // loops excluded
  std::size_t loop_count() const;

  bool has_loop(Vertex v) const { return loops_[v] != 0; }
  bool has_edge(Vertex a, Vertex b) const;  // (v, v) asks for a loop
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }

  std::int64_t label(Vertex v) const { return labels_[v]; }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  void set_labels(std::vector<std::int64_t> labels);

  /// Adds edge ab (or a loop when a == b). Returns false if it was present.
  bool add_edge(Vertex a, Vertex b);

  /// G[A]: vertices of `a` renumbered in increasing id order.
  Graph induced(std::span<const Vertex> a) const;
  /// G with loops toggled on every vertex of `a`.
  Graph toggle_loops(std::span<const Vertex> a) const;

  /// Adjacency matrix of G[vertices], rows in the given order, loops on the diagonal.
  gf2::SymMatrix adjacency(std::span<const Vertex> vertices) const;
  gf2::SymMatrix adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> neighbors_;  // sorted, loops excluded
  std::vector<std::uint8_t> loops_;
  std::vector<std::int64_t> labels_;
};

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

RankNullity rank_nullity(const Graph& g);

}  // namespace interlace
