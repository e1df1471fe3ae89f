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
#include <random>

#include "core/graph.hpp"
#include "core/tdecomp.hpp"

namespace interlace {

using Rng = std::mt19937_64;

struct GraphWithTd {
  Graph graph;
  TreeDecomposition td;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph random_tree(std::size_t n, Rng& rng);
/// G(n, p) Erdos-Renyi graph without loops.
Graph random_graph(std::size_t n, double p, Rng& rng);
/// Adds a loop at each vertex independently with probability p.
void add_random_loops(Graph& g, double p, Rng& rng);

/// Path with bags {i, i+1}: width 1.
GraphWithTd path_with_td(std::size_t n);
/// Vertices i, j adjacent iff 0 < |i - j| <= k; bags {i..i+k}: width k.
GraphWithTd path_power_with_td(std::size_t n, std::size_t k);
/// Random k-tree on n vertices with every edge kept with probability
/// keep, returned with the decomposition it was grown along (width <= k).
GraphWithTd random_partial_ktree(std::size_t n, std::size_t k, double keep, Rng& rng);

}  // namespace interlace
