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

#include <gmpxx.h>

#include <span>

#include "core/assignment.hpp"
#include "core/graph.hpp"
#include "core/scenario.hpp"
#include "core/truncpoly.hpp"

namespace interlace {

inline constexpr std::size_t kOracleEvalLimit = 14;
inline constexpr std::size_t kOracleCoeffLimit = 10;

/// Sum over all disjoint (A, B) of x_A y_B u^rk v^nullity of (G toggled on B)[A u B],
/// with 0^0 = 1.
mpq_class oracle_evaluate(const Graph& g, const Assignment& asg);

/// The same enumeration, keeping monomials of quasi-degree <= d.
TruncPoly oracle_coefficients(const Graph& g, std::size_t d);

struct OracleScenario {
  Scenario scenario;           // greedy basis and raw U x U block, not canonical
  bool full_rank = false;      // unruled U x V' columns independent
  std::size_t vprime_rank = 0; // rank of G[V']
};

/// Elimination on a dense matrix followed by the greedy minimal basis.
/// Shares nothing with scenario_of besides the Scenario type.
OracleScenario oracle_scenario(const Graph& g, std::span<const Vertex> vprime, std::span<const Vertex> u);

/// Part S(i, D, s) computed by enumeration over (A, B) within `forgotten`,
/// grouped by canonical scenario of the extension `bag` in G toggled on B u D.
/// Values as a multiset of (D, scenario) -> value under `asg`.
struct OraclePart {
  Mask d = 0;
  Scenario scenario;
  mpq_class value;
};
std::vector<OraclePart> oracle_parts(const Graph& g, std::span<const Vertex> forgotten, std::span<const Vertex> bag,
                                     const Assignment& asg);

}  // namespace interlace
