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

#include <cstdint>
#include <functional>
#include <vector>

#include "core/assignment.hpp"
#include "core/dp_engine.hpp"
#include "core/graph.hpp"
#include "core/tdecomp.hpp"
#include "core/truncpoly.hpp"

namespace interlace {

/// Called once per tree node (rational evaluation only) with the node's
/// bag in vertex order and every stored part.
using PartsObserver =
    std::function<void(std::size_t node, const std::vector<Vertex>& bag, const PartsTable<mpq_class>& parts)>;

/// C(G) at `asg`. v = 0 is handed to evaluate_v0.
mpq_class evaluate(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                   const EvalOptions& opt = {}, EvalStats* stats = nullptr, const PartsObserver& observer = {});

/// The DP with v carried as a scalar; rejects v = 0.
mpq_class evaluate_standard(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                            const EvalOptions& opt = {}, EvalStats* stats = nullptr,
                            const PartsObserver& observer = {});

/// Sum over full-rank toggled induced subgraphs only; requires v = 0.
mpq_class evaluate_v0(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                      const EvalOptions& opt = {}, EvalStats* stats = nullptr);

/// Cross-check path for v = 0: carries v symbolically and returns the
/// coefficient of v^0. asg.v is ignored.
mpq_class evaluate_v0_symbolic(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                               const EvalOptions& opt = {});

/// Evaluation modulo a word-size prime p (< 2^62). Every value of `asg` must
/// have a denominator invertible mod p; v must be nonzero mod p.
std::uint64_t evaluate_modular(const Graph& g, const NiceTreeDecomposition& ntd, const Assignment& asg,
                               std::uint64_t p, const EvalOptions& opt = {}, EvalStats* stats = nullptr);

/// Every monomial of C(G) with quasi-degree <= d.
TruncPoly truncate(const Graph& g, const NiceTreeDecomposition& ntd, std::size_t d, const EvalOptions& opt = {},
                   EvalStats* stats = nullptr);

enum class Substitution {
  kTwoVariable,     // x_a = 1, y_a = 0, u = x - 1, v = y - 1
  kVertexNullity,   // two-variable form at x = 2
};

/// C(G) under a named substitution; `x` is unused for kVertexNullity.
mpq_class specialize(const Graph& g, const NiceTreeDecomposition& ntd, Substitution form, const mpq_class& x,
                     const mpq_class& y, const EvalOptions& opt = {});

}  // namespace interlace
