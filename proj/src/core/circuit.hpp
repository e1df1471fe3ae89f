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
#include <string>
#include <string_view>
#include <vector>

#include "core/assignment.hpp"
#include "core/dp_engine.hpp"
#include "core/graph.hpp"
#include "core/tdecomp.hpp"

namespace interlace {

enum class GateOp : std::uint8_t { kInput, kAdd, kMul };

struct Gate {
  GateOp op = GateOp::kInput;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::string input;  // integer constant or variable name, inputs only
};

/// Division-free arithmetic circuit; every gate refers to earlier gates only.
class Circuit {
 public:
  std::uint32_t input(std::string name);
  std::uint32_t add(std::uint32_t l, std::uint32_t r);
  std::uint32_t mul(std::uint32_t l, std::uint32_t r);
  void set_output(std::uint32_t id);

  const std::vector<Gate>& gates() const { return gates_; }
  std::uint32_t output() const { return output_; }
  /// Number of ADD and MUL gates.
  std::size_t operation_count() const;

  /// "<id> IN <const|var>", "<id> ADD <l> <r>", "<id> MUL <l> <r>", "OUT <id>".
  std::string to_text() const;
  static Circuit parse(std::string_view text);

 private:
  std::uint32_t push(Gate g);
  std::vector<Gate> gates_;
  std::uint32_t output_ = 0;
  bool has_output_ = false;
};

/// Evaluates with `resolve` supplying each variable's value.
mpq_class eval_circuit(const Circuit& c, const std::function<mpq_class(std::string_view)>& resolve);
/// Variables u, v, x_<label>, y_<label> bound from `asg`.
mpq_class eval_circuit(const Circuit& c, const Graph& g, const Assignment& asg);

/// Runs the parts DP with gates as values; the output gate computes C(G).
Circuit build_circuit(const Graph& g, const NiceTreeDecomposition& ntd, const EvalOptions& opt = {},
                      EvalStats* stats = nullptr);

}  // namespace interlace
