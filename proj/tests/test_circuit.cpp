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

#include <gtest/gtest.h>

#include "core/circuit.hpp"
#include "core/error.hpp"
#include "core/evaluator.hpp"
#include "core/generators.hpp"
#include "support/graphs.hpp"

namespace interlace {
namespace {

NiceTreeDecomposition nice_for(const Graph& g) { return make_nice(g, heuristic_td(g)); }

TEST(Circuit, SingleVertex) {
  const Graph g(1);
  const auto c = build_circuit(g, nice_for(g));
  EXPECT_EQ(eval_circuit(c, g, Assignment::uniform(1, 1, 1, 2, 3)), 6);
  EXPECT_LE(c.operation_count(), 8U);
}

TEST(Circuit, EmptyGraphIsConstantOne) {
  const Graph g;
  const auto c = build_circuit(g, nice_for(g));
  EXPECT_EQ(c.operation_count(), 0U);
  EXPECT_EQ(eval_circuit(c, g, Assignment::ones(0)), 1);
}

TEST(Circuit, AgreesWithEvaluateOnRandomGraphs) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto n = 1 + rng() % 7;
    const auto g = testing::random_looped_graph(n, rng);
    const auto ntd = nice_for(g);
    const auto c = build_circuit(g, ntd);
    for (int p = 0; p < 5; ++p) {
      // v = 0 is allowed here: the circuit never divides.
      const auto asg = testing::random_assignment(n, rng, p != 0);
      ASSERT_EQ(eval_circuit(c, g, asg), evaluate(g, ntd, asg)) << "trial " << t << " point " << p;
    }
  }
}

TEST(Circuit, TextRoundTrip) {
  Rng rng(5);
  const auto gt = random_partial_ktree(10, 2, 0.8, rng);
  const auto c = build_circuit(gt.graph, make_nice(gt.graph, gt.td));
  const auto text = c.to_text();
  const auto back = Circuit::parse(text);
  EXPECT_EQ(back.to_text(), text);
  const auto asg = testing::random_assignment(10, rng);
  EXPECT_EQ(eval_circuit(back, gt.graph, asg), eval_circuit(c, gt.graph, asg));
}

TEST(Circuit, ParseRejectsBadInput) {
  EXPECT_THROW(Circuit::parse("0 IN 1\n"), ParseError);
  EXPECT_THROW(Circuit::parse("0 IN 1\n1 ADD 0 1\nOUT 1\n"), ParseError);
  EXPECT_THROW(Circuit::parse("1 IN 1\nOUT 1\n"), ParseError);
  EXPECT_THROW(Circuit::parse("0 SUB 1 2\nOUT 0\n"), ParseError);
  EXPECT_NO_THROW(Circuit::parse("0 IN -3\n1 IN u\n2 MUL 0 1\nOUT 2\n"));
}

TEST(Circuit, UnboundVariableIsAnError) {
  const auto c = Circuit::parse("0 IN x_9\nOUT 0\n");
  const Graph g(2);
  EXPECT_THROW(eval_circuit(c, g, Assignment::ones(2)), Error);
}

TEST(Circuit, SizeGrowsLinearlyOnPaths) {
  std::size_t prev = 0;
  for (std::size_t n : {50, 100, 200}) {
    const auto gt = path_with_td(n);
    const auto c = build_circuit(gt.graph, make_nice(gt.graph, gt.td));
    if (prev) {
      const double ratio = static_cast<double>(c.operation_count()) / static_cast<double>(prev);
      EXPECT_NEAR(ratio, 2.0, 0.2);
    }
    prev = c.operation_count();
  }
}

}  // namespace
}  // namespace interlace
