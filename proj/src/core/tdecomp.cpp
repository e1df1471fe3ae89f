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

#include "core/tdecomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

#include "core/error.hpp"

namespace interlace {

std::size_t TreeDecomposition::max_bag() const {
  std::size_t k = 0;
  for (const auto& b : bags) k = std::max(k, b.size());
  return k;
}

std::size_t TreeDecomposition::width() const {
  const auto k = max_bag();
  return k == 0 ? 0 : k - 1;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string label_of(const Graph& g, Vertex v) { return std::to_string(g.label(v)); }

}  // namespace

ValidationReport validate(const Graph& g, const TreeDecomposition& td) {
  ValidationReport report;
  const std::size_t nodes = td.bags.size();
  const std::size_t n = g.size();

  if (nodes == 0) {
    if (n != 0) {
      report.violation = Violation::kVertexUncovered;
      report.vertex = 0;
      report.message = "vertex " + label_of(g, 0) + " is in no bag";
    }
    return report;
  }
  if (td.edges.size() != nodes - 1) {
    report.violation = Violation::kNotATree;
    report.message = "decomposition has " + std::to_string(nodes) + " nodes but " +
                     std::to_string(td.edges.size()) + " edges";
    return report;
  }
  std::vector<std::size_t> uf(nodes);
  std::iota(uf.begin(), uf.end(), std::size_t{0});
  for (const auto& [a, b] : td.edges) {
    if (a >= nodes || b >= nodes) {
      report.violation = Violation::kNotATree;
      report.message = "tree edge references unknown node";
      return report;
    }
    const auto ra = find_root(uf, a);
    const auto rb = find_root(uf, b);
    if (ra == rb) {
      report.violation = Violation::kNotATree;
      report.message = "tree edges contain a cycle at nodes " + std::to_string(a + 1) + " and " +
                       std::to_string(b + 1);
      return report;
    }
    uf[ra] = rb;
  }

  std::vector<std::size_t> occurrences(n, 0);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (auto v : td.bags[i]) {
      if (v >= n) {
        report.violation = Violation::kUnknownVertex;
        report.vertex = v;
        report.message = "bag " + std::to_string(i + 1) + " names unknown vertex " + std::to_string(v + 1);
        return report;
      }
      ++occurrences[v];
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (occurrences[v] == 0) {
      report.violation = Violation::kVertexUncovered;
      report.vertex = v;
      report.message = "condition 1: vertex " + label_of(g, v) + " is in no bag";
      return report;
    }
  }

  std::vector<std::vector<std::size_t>> bags_of(n);
  for (std::size_t i = 0; i < nodes; ++i) {
    for (auto v : sorted_unique(td.bags[i])) bags_of[v].push_back(i);
  }
  for (Vertex a = 0; a < n; ++a) {
    for (auto b : g.neighbors(a)) {
      if (b <= a) continue;
      const auto& la = bags_of[a];
      const auto& lb = bags_of[b];
      std::size_t i = 0;
      std::size_t j = 0;
      bool shared = false;
      while (i < la.size() && j < lb.size()) {
        if (la[i] == lb[j]) {
          shared = true;
          break;
        }
        if (la[i] < lb[j]) {
          ++i;
        } else {
          ++j;
        }
      }
      if (!shared) {
        report.violation = Violation::kEdgeUncovered;
        report.vertex = a;
        report.other = b;
        report.message = "condition 2: edge " + label_of(g, a) + "-" + label_of(g, b) + " is in no bag";
        return report;
      }
    }
  }

  // A vertex's bags form a subtree iff they span exactly (count - 1) tree edges.
  std::vector<std::size_t> inner_edges(n, 0);
  for (const auto& [a, b] : td.edges) {
    const auto ba = sorted_unique(td.bags[a]);
    const auto bb = sorted_unique(td.bags[b]);
    std::vector<Vertex> common;
    std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(common));
    for (auto v : common) ++inner_edges[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inner_edges[v] + 1 != bags_of[v].size()) {
      report.violation = Violation::kDisconnected;
      report.vertex = v;
      report.message = "condition 3: bags containing vertex " + label_of(g, v) + " are disconnected";
      return report;
    }
  }
  return report;
}

std::int32_t NiceBuilder::push(NiceNode node) {
  nodes_.push_back(std::move(node));
  return static_cast<std::int32_t>(nodes_.size() - 1);
}

std::int32_t NiceBuilder::leaf() { return push(NiceNode{}); }

namespace {

void claim_child(std::vector<NiceNode>& nodes, std::int32_t child, std::int32_t parent) {
  if (child < 0 || static_cast<std::size_t>(child) >= nodes.size()) {
    fail(ErrorKind::kInvalidDecomposition, "nice node references unknown child");
  }
  if (nodes[child].parent != -1) fail(ErrorKind::kInvalidDecomposition, "nice node has two parents");
  nodes[child].parent = parent;
}

}  // namespace

std::int32_t NiceBuilder::introduce(std::int32_t child, Vertex v) {
  const auto self = static_cast<std::int32_t>(nodes_.size());
  claim_child(nodes_, child, self);
  NiceNode node;
  node.kind = NodeKind::kIntroduce;
  node.vertex = v;
  node.bag = nodes_[child].bag;
  auto it = std::lower_bound(node.bag.begin(), node.bag.end(), v);
  if (it != node.bag.end() && *it == v) {
    fail(ErrorKind::kInvalidDecomposition, "introduced vertex already in child bag");
  }
  node.bag.insert(it, v);
  node.children[0] = child;
  return push(std::move(node));
}

std::int32_t NiceBuilder::forget(std::int32_t child, Vertex v) {
  const auto self = static_cast<std::int32_t>(nodes_.size());
  claim_child(nodes_, child, self);
  NiceNode node;
  node.kind = NodeKind::kForget;
  node.vertex = v;
  node.bag = nodes_[child].bag;
  auto it = std::lower_bound(node.bag.begin(), node.bag.end(), v);
  if (it == node.bag.end() || *it != v) fail(ErrorKind::kInvalidDecomposition, "forgotten vertex not in child bag");
  node.bag.erase(it);
  node.children[0] = child;
  return push(std::move(node));
}

std::int32_t NiceBuilder::join(std::int32_t left, std::int32_t right) {
  const auto self = static_cast<std::int32_t>(nodes_.size());
  if (left == right) fail(ErrorKind::kInvalidDecomposition, "join children must differ");
  claim_child(nodes_, left, self);
  claim_child(nodes_, right, self);
  if (nodes_[left].bag != nodes_[right].bag) fail(ErrorKind::kInvalidDecomposition, "join children bags differ");
  NiceNode node;
  node.kind = NodeKind::kJoin;
  node.bag = nodes_[left].bag;
  node.children = {left, right};
  return push(std::move(node));
}

NiceTreeDecomposition NiceBuilder::finish(std::int32_t root) {
  if (root < 0 || static_cast<std::size_t>(root) >= nodes_.size()) {
    fail(ErrorKind::kInvalidDecomposition, "unknown root node");
  }
  if (!nodes_[root].bag.empty()) fail(ErrorKind::kInvalidDecomposition, "root bag must be empty");
  if (nodes_[root].parent != -1) fail(ErrorKind::kInvalidDecomposition, "root has a parent");

  // Iterative post-order from the root.
  std::vector<std::int32_t> order;
  order.reserve(nodes_.size());
  std::vector<std::pair<std::int32_t, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    const auto& kids = nodes_[node].children;
    if (next < 2 && kids[next] != -1) {
      const auto child = kids[next];
      ++next;
      stack.emplace_back(child, 0);
      continue;
    }
    if (next < 2) {
      next = 2;
      continue;
    }
    order.push_back(node);
    stack.pop_back();
  }
  if (order.size() != nodes_.size()) fail(ErrorKind::kInvalidDecomposition, "nice decomposition has dangling nodes");

  std::vector<std::int32_t> remap(nodes_.size());
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<std::int32_t>(i);

  NiceTreeDecomposition out;
  out.nodes_.resize(order.size());
  out.subtree_begin_.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    NiceNode node = std::move(nodes_[order[i]]);
    for (auto& c : node.children) {
      if (c != -1) c = remap[c];
    }
    if (node.parent != -1) node.parent = remap[node.parent];
    std::size_t begin = i;
    for (auto c : node.children) {
      if (c != -1) begin = std::min(begin, out.subtree_begin_[c]);
    }
    out.subtree_begin_[i] = begin;
    out.max_bag_ = std::max(out.max_bag_, node.bag.size());
    out.nodes_[i] = std::move(node);
  }
  nodes_.clear();
  return out;
}

void check_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  const std::size_t n = g.size();
  std::vector<std::int64_t> forgotten_at(n, -1);
  for (std::size_t i = 0; i < ntd.size(); ++i) {
    const auto& node = ntd.node(i);
    for (auto v : node.bag) {
      if (v >= n) fail(ErrorKind::kInvalidDecomposition, "nice node bag names unknown vertex");
    }
    if (node.kind == NodeKind::kLeaf && !node.bag.empty()) {
      fail(ErrorKind::kInvalidDecomposition, "leaf bag must be empty");
    }
    if (node.kind == NodeKind::kForget) {
      if (forgotten_at[node.vertex] != -1) {
        fail(ErrorKind::kInvalidDecomposition, "vertex " + std::to_string(g.label(node.vertex)) + " forgotten twice");
      }
      forgotten_at[node.vertex] = static_cast<std::int64_t>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (forgotten_at[v] == -1) {
      fail(ErrorKind::kInvalidDecomposition, "vertex " + std::to_string(g.label(v)) + " is never forgotten");
    }
  }
  for (std::size_t i = 0; i < ntd.size(); ++i) {
    const auto& node = ntd.node(i);
    if (node.kind != NodeKind::kIntroduce) continue;
    const auto child = static_cast<std::size_t>(node.children[0]);
    const auto lo = static_cast<std::int64_t>(ntd.subtree_begin(child));
    const auto hi = static_cast<std::int64_t>(child);
    for (auto w : g.neighbors(node.vertex)) {
      const auto f = forgotten_at[w];
      if (f >= lo && f <= hi) {
        fail(ErrorKind::kInvalidDecomposition, "introduced vertex " + std::to_string(g.label(node.vertex)) +
                                                   " has an edge to already forgotten vertex " +
                                                   std::to_string(g.label(w)));
      }
    }
  }
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  const auto report = validate(g, td);
  if (!report.ok()) fail(ErrorKind::kInvalidDecomposition, report.message);

  NiceBuilder builder;
  const std::size_t nodes = td.bags.size();
  if (nodes == 0) return builder.finish(builder.leaf());

  std::vector<std::vector<Vertex>> bags(nodes);
  for (std::size_t i = 0; i < nodes; ++i) bags[i] = sorted_unique(td.bags[i]);
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (const auto& [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  // Root the input tree at node 0; collect a post-order.
  std::vector<std::int64_t> parent(nodes, -1);
  std::vector<std::size_t> order;
  order.reserve(nodes);
  std::vector<std::size_t> stack{0};
  std::vector<char> seen(nodes, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const auto t = stack.back();
    stack.pop_back();
    order.push_back(t);
    for (auto c : adj[t]) {
      if (!seen[c]) {
        seen[c] = 1;
        parent[c] = static_cast<std::int64_t>(t);
        stack.push_back(c);
      }
    }
  }
  std::reverse(order.begin(), order.end());  // children before parents

  std::vector<std::vector<std::size_t>> children(nodes);
  for (auto t : order) {
    if (parent[t] >= 0) children[parent[t]].push_back(t);
  }
  for (auto& c : children) std::sort(c.begin(), c.end());

  std::vector<std::int32_t> top(nodes, -1);
  for (auto t : order) {
    const auto& bag = bags[t];
    if (children[t].empty()) {
      auto cur = builder.leaf();
      for (auto v : bag) cur = builder.introduce(cur, v);
      top[t] = cur;
      continue;
    }
    std::vector<std::int32_t> branches;
    for (auto c : children[t]) {
      auto cur = top[c];
      std::vector<Vertex> drop;
      std::vector<Vertex> add;
      std::set_difference(bags[c].begin(), bags[c].end(), bag.begin(), bag.end(), std::back_inserter(drop));
      std::set_difference(bag.begin(), bag.end(), bags[c].begin(), bags[c].end(), std::back_inserter(add));
      for (auto v : drop) cur = builder.forget(cur, v);
      for (auto v : add) cur = builder.introduce(cur, v);
      branches.push_back(cur);
    }
    auto cur = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) cur = builder.join(cur, branches[i]);
    top[t] = cur;
  }
  auto cur = top[0];
  for (auto v : bags[0]) cur = builder.forget(cur, v);
  auto ntd = builder.finish(cur);
  check_nice(g, ntd);
  return ntd;
}

VertexOrder::VertexOrder(std::vector<std::uint32_t> rank_of) : rank_of_(std::move(rank_of)) {
  in_order_.assign(rank_of_.size(), 0);
  std::vector<char> used(rank_of_.size(), 0);
  for (Vertex v = 0; v < rank_of_.size(); ++v) {
    const auto r = rank_of_[v];
    if (r >= rank_of_.size() || used[r]) fail(ErrorKind::kInvalidArgument, "vertex order is not a permutation");
    used[r] = 1;
    in_order_[r] = v;
  }
}

VertexOrder vertex_order(const NiceTreeDecomposition& ntd, std::size_t vertex_count) {
  constexpr auto kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> rank_of(vertex_count, kUnset);
  std::uint32_t c = 0;
  for (const auto& node : ntd.nodes()) {
    if (node.kind != NodeKind::kForget) continue;
    if (node.vertex >= vertex_count || rank_of[node.vertex] != kUnset) {
      fail(ErrorKind::kInvalidDecomposition, "vertex forgotten twice or unknown");
    }
    rank_of[node.vertex] = c++;
  }
  if (c != vertex_count) fail(ErrorKind::kInvalidDecomposition, "some vertex is never forgotten");
  return VertexOrder(std::move(rank_of));
}

TreeDecomposition heuristic_td(const Graph& g) {
  const std::size_t n = g.size();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }

  std::vector<std::unordered_set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    for (auto w : g.neighbors(v)) adj[v].insert(w);
  }
  auto fill_of = [&](Vertex v) {
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    std::size_t missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!adj[nb[i]].count(nb[j])) ++missing;
      }
    }
    return missing;
  };

  using Key = std::tuple<std::size_t, std::int64_t, Vertex>;
  std::set<Key> queue;
  std::vector<std::size_t> fill(n);
  for (Vertex v = 0; v < n; ++v) {
    fill[v] = fill_of(v);
    queue.emplace(fill[v], g.label(v), v);
  }

  std::vector<std::size_t> position(n);
  std::vector<std::vector<Vertex>> higher(n);
  std::vector<char> eliminated(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    const auto [f, label, v] = *queue.begin();
    queue.erase(queue.begin());
    position[v] = step;
    eliminated[v] = 1;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    std::sort(nb.begin(), nb.end());
    higher[v] = nb;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      adj[nb[i]].erase(v);
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    }
    adj[v].clear();
    // Fill counts can change within distance two of v.
    std::unordered_set<Vertex> touched(nb.begin(), nb.end());
    for (auto w : nb) {
      for (auto x : adj[w]) touched.insert(x);
    }
    std::vector<Vertex> touched_sorted(touched.begin(), touched.end());
    std::sort(touched_sorted.begin(), touched_sorted.end());
    for (auto w : touched_sorted) {
      if (eliminated[w]) continue;
      queue.erase(Key{fill[w], g.label(w), w});
      fill[w] = fill_of(w);
      queue.emplace(fill[w], g.label(w), w);
    }
  }

  // Bag of v: v plus its neighbours at elimination time. Its parent is the
  // bag of the earliest eliminated of those neighbours.
  std::vector<Vertex> by_position(n);
  for (Vertex v = 0; v < n; ++v) by_position[position[v]] = v;
  td.bags.resize(n);
  std::int64_t previous_root = -1;
  for (std::size_t p = 0; p < n; ++p) {
    const Vertex v = by_position[p];
    auto bag = higher[v];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[p] = std::move(bag);
    if (higher[v].empty()) {
      if (previous_root >= 0) td.edges.emplace_back(static_cast<std::size_t>(previous_root), p);
      previous_root = static_cast<std::int64_t>(p);
      continue;
    }
    std::size_t parent = n;
    for (auto w : higher[v]) parent = std::min(parent, position[w]);
    td.edges.emplace_back(p, parent);
  }
  return td;
}

}  // namespace interlace
