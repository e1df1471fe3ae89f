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

#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"
#include "core/tdecomp.hpp"

namespace interlace {

struct GraphFile {
  Graph graph;
  std::vector<std::string> warnings;
};

/// PACE ".gr": "p tw n m", "u v" edges, "c" comments; "v v" is a self loop.
GraphFile parse_gr(std::string_view text);
GraphFile read_gr(const std::string& path);
std::string write_gr(const Graph& g);

/// PACE ".td": "s td N w+1 n", "b i v..." bags, "i j" tree edges.
/// Vertex ids in the file are labels of `g` (1..n).
TreeDecomposition parse_td(std::string_view text, const Graph& g);
TreeDecomposition read_td(const std::string& path, const Graph& g);
std::string write_td(const Graph& g, const TreeDecomposition& td);

/// "s ntd <nodes> <k> <n>" then one line per node in post-order:
/// "<id> leaf", "<id> introduce <v> <child>", "<id> forget <v> <child>",
/// "<id> join <left> <right>". Ids are 1-based, vertices are labels.
std::string write_nice(const Graph& g, const NiceTreeDecomposition& ntd);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace interlace
