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

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace interlace {

/// Plain tree decomposition: one bag per node plus the tree edges.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t max_bag() const;
  std::size_t width() const;
};

enum class Violation {
  kNone,
  kNotATree,
  kUnknownVertex,
  kVertexUncovered,   // condition 1
  kEdgeUncovered,     // condition 2
  kDisconnected,      // condition 3
};

struct ValidationReport {
  Violation violation = Violation::kNone;
  Vertex vertex = 0;  // witness vertex (or first endpoint of an edge)
  Vertex other = 0;   // second endpoint for kEdgeUncovered
  std::string message;

  bool ok() const { return violation == Violation::kNone; }
};

/// Checks the three tree-decomposition conditions plus tree shape. The
/// first violated condition is reported together with a witness.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

enum class NodeKind : std::uint8_t { kLeaf, kJoin, kIntroduce, kForget };

struct NiceNode {
  NodeKind kind = NodeKind::kLeaf;
  Vertex vertex = 0;             // introduced/forgotten vertex
  std::vector<Vertex> bag;       // sorted by vertex id
  std::array<std::int32_t, 2> children{-1, -1};
  std::int32_t parent = -1;
};

/// Rooted nice decomposition with empty root and leaf bags. Nodes are
/// stored in post-order, so index order is a bottom-up traversal and the
/// root is the last node.
class NiceTreeDecomposition {
 public:
  const std::vector<NiceNode>& nodes() const { return nodes_; }
  const NiceNode& node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t root() const { return nodes_.size() - 1; }
  /// k: the maximum bag size.
  std::size_t max_bag() const { return max_bag_; }
  /// First node index of the subtree rooted at i (subtree = [first, i]).
  std::size_t subtree_begin(std::size_t i) const { return subtree_begin_[i]; }

 private:
  friend class NiceBuilder;
  std::vector<NiceNode> nodes_;
  std::vector<std::size_t> subtree_begin_;
  std::size_t max_bag_ = 0;
};

/// Incremental construction with structural checks on every step.
class NiceBuilder {
 public:
  std::int32_t leaf();
  std::int32_t introduce(std::int32_t child, Vertex v);
  std::int32_t forget(std::int32_t child, Vertex v);
  std::int32_t join(std::int32_t left, std::int32_t right);
  /// Reorders into post-order below `root`; the root bag must be empty.
  NiceTreeDecomposition finish(std::int32_t root);

 private:
  std::int32_t push(NiceNode node);
  std::vector<NiceNode> nodes_;
};

/// Verifies the invariants relied on by the evaluator against graph `g`:
/// every vertex is forgotten exactly once and an introduced vertex has no
/// edge into the vertices already forgotten below it. Throws on violation.
void check_nice(const Graph& g, const NiceTreeDecomposition& ntd);

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Global vertex order: vertices numbered by forget order, bottom-up.
class VertexOrder {
 public:
  VertexOrder() = default;
  explicit VertexOrder(std::vector<std::uint32_t> rank_of);

  /// 0-based position of v in the order.
  std::uint32_t rank(Vertex v) const { return rank_of_[v]; }
  /// 1-based number as handed out by the forget traversal.
  std::uint32_t number(Vertex v) const { return rank_of_[v] + 1; }
  bool less(Vertex a, Vertex b) const { return rank_of_[a] < rank_of_[b]; }
  const std::vector<Vertex>& in_order() const { return in_order_; }
  std::size_t size() const { return rank_of_.size(); }

 private:
  std::vector<std::uint32_t> rank_of_;
  std::vector<Vertex> in_order_;
};

VertexOrder vertex_order(const NiceTreeDecomposition& ntd, std::size_t vertex_count);

/// Min-fill elimination ordering; ties go to the smallest external label.
TreeDecomposition heuristic_td(const Graph& g);

}  // namespace interlace
