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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace interlace {

inline constexpr std::size_t kMaxExtension = 16;

using Mask = std::uint16_t;

/// Lexicographic order on vectors over the extension: position 0 is the
/// smallest vertex, the first differing position decides, and 0 < 1.
inline bool lex_less(Mask a, Mask b) {
  const Mask d = a ^ b;
  if (d == 0) return false;
  const int p = __builtin_ctz(d);
  return ((a >> p) & 1U) == 0;
}

/// Scenario of an extension U with |U| = dim. `basis[0..rank)` spans the
/// column space W of the U x V' block after elimination; `uu[i]` is row i
/// of the U x U block. Bit i of every mask is position i of U in vertex
/// order. Unused entries are zero so the struct compares bytewise.
struct Scenario {
  std::uint8_t dim = 0;
  std::uint8_t rank = 0;
  std::array<Mask, kMaxExtension> basis{};
  std::array<Mask, kMaxExtension> uu{};

  std::span<const Mask> vectors() const { return {basis.data(), rank}; }
  bool uu_get(std::size_t r, std::size_t c) const { return (uu[r] >> c) & 1U; }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

static_assert(sizeof(Scenario) == 2 + 4 * kMaxExtension);

struct ScenarioHash {
  std::size_t operator()(const Scenario& s) const {
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(&s), sizeof(Scenario)));
  }
};

std::string to_string(const Scenario& s);

/// Byte key: dim, rank, two little-endian bytes per basis vector, then the
/// lower triangle of uu (diagonal included) packed row by row.
std::string encode(const Scenario& s);
Scenario decode(std::string_view key);
std::string to_hex(std::string_view bytes);

/// Raw scenario of G[V' u U]: eliminate with V' and keep the greedy
/// lexicographically minimal basis of the U x V' columns. Both lists must
/// be in vertex order, every V' vertex before every U vertex.
Scenario scenario_of(const Graph& g, std::span<const Vertex> vprime, std::span<const Vertex> u);

/// Representative of the class of scenarios that behave identically under
/// every operation: the basis becomes the reduced echelon form of its span
/// (pivot = lowest position) and the U x U block is reduced modulo the
/// symmetric matrices w x^T + x w^T and w w^T, w in the span.
Scenario canonical(const Scenario& s);
bool is_canonical(const Scenario& s);

/// Every operation below expects and returns canonical scenarios.

struct JoinResult {
  Scenario scenario;
  bool preserves_full_rank = false;
};

/// gu: rows of the adjacency matrix of G(toggled)[U].
JoinResult join(const Scenario& s1, const Scenario& s2, std::span<const Mask> gu);

/// Adds the vertex at position `pos` of the new extension. `row` is its
/// adjacency row over the new positions, bit `pos` being its loop.
Scenario introduce(const Scenario& s, std::size_t pos, Mask row);

struct ForgetResult {
  Scenario scenario;
  int rank_delta = 0;
  int nullity_delta = 0;
  bool full_rank = false;  // full rank is kept when it held before
};

/// Moves position 0 (the smallest extension vertex) into the eliminated graph.
ForgetResult forget(const Scenario& s);

struct IgnoreResult {
  Scenario scenario;
  bool full_rank = false;
};

/// Drops position `pos` from the extension entirely.
IgnoreResult ignore(const Scenario& s, std::size_t pos);

/// All raw scenarios for k vertices: every set of
/// linearly independent vectors of {0,1}^k paired with every symmetric k x k
/// matrix. Sets are listed in increasing lexicographic order.
std::vector<Scenario> enumerate_scenarios(std::size_t k);
/// Number of distinct canonical classes for k vertices.
std::size_t count_canonical_scenarios(std::size_t k);

/// Helpers shared with the evaluator.
Mask insert_bit(Mask m, std::size_t pos, bool bit);
Mask remove_bit(Mask m, std::size_t pos);
/// Reduced echelon basis (pivot = lowest set bit) of the span of `vectors`.
std::vector<Mask> reduced_basis(std::span<const Mask> vectors);
bool in_span(std::span<const Mask> reduced, Mask v);

}  // namespace interlace
