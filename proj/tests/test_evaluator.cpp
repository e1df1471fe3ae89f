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

#include "core/evaluator.hpp"
#include "core/generators.hpp"
#include "core/oracle.hpp"
#include "core/tdecomp.hpp"
#include "support/graphs.hpp"

namespace interlace {
namespace {

NiceTreeDecomposition nice_for(const Graph& g) { return make_nice(g, heuristic_td(g)); }

Graph k2() {
  const std::pair<Vertex, Vertex> e[] = {{0, 1}};
  return Graph::from_edges(2, e);
}

TEST(Evaluate, EmptyGraphIsOne) {
  const Graph g;
  EXPECT_EQ(evaluate(g, nice_for(g), Assignment::ones(0)), 1);
}

TEST(Evaluate, SingleVertex) {
  const Graph g(1);
  EXPECT_EQ(evaluate(g, nice_for(g), Assignment::uniform(1, 1, 1, 2, 3)), 6);
}

TEST(Evaluate, SingleEdge) {
  const Graph g = k2();
  EXPECT_EQ(evaluate(g, nice_for(g), Assignment::uniform(2, 1, 1, 2, 3)), 29);
}

TEST(Evaluate, AllOnesIsPowerOfThree) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto gt = random_partial_ktree(12, 3, 0.7, rng);
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 3, 12);
    EXPECT_EQ(evaluate(gt.graph, make_nice(gt.graph, gt.td), Assignment::ones(12)), mpq_class(expect));
  }
}

TEST(Evaluate, MatchesOracleOnRandomLoopedGraphs) {
  Rng rng(17);
  for (int t = 0; t < 150; ++t) {
    std::uniform_int_distribution<std::size_t> size(0, 7);
    const Graph g = testing::random_looped_graph(size(rng), rng);
    const auto ntd = nice_for(g);
    const auto asg = testing::random_assignment(g.size(), rng);
    ASSERT_EQ(evaluate(g, ntd, asg), oracle_evaluate(g, asg)) << "trial " << t;
  }
}

TEST(Evaluate, ThreadCountDoesNotChangeResult) {
  Rng rng(23);
  const auto gt = random_partial_ktree(40, 3, 0.8, rng);
  const auto ntd = make_nice(gt.graph, gt.td);
  const auto asg = testing::random_assignment(40, rng);
  EvalOptions one;
  EvalOptions four;
  four.threads = 4;
  EXPECT_EQ(evaluate(gt.graph, ntd, asg, one), evaluate(gt.graph, ntd, asg, four));
}

TEST(Evaluate, FullEnumerationEqualsSparseIteration) {
  Rng rng(29);
  EvalOptions full;
  full.full_enumeration = true;
  for (int t = 0; t < 30; ++t) {
    const auto gt = random_partial_ktree(8, 2, 0.8, rng);
    Graph g = gt.graph;
    add_random_loops(g, 0.4, rng);
    const auto ntd = make_nice(g, gt.td);
    const auto asg = testing::random_assignment(8, rng);
    EXPECT_EQ(evaluate(g, ntd, asg, full), evaluate(g, ntd, asg));
  }
}

TEST(Evaluate, RejectsOversizedBags) {
  Rng rng(31);
  const auto gt = random_partial_ktree(12, 9, 1.0, rng);
  const auto ntd = make_nice(gt.graph, gt.td);
  EXPECT_THROW(evaluate(gt.graph, ntd, Assignment::ones(12)), Error);
}

TEST(Evaluate, StandardPathRejectsZeroV) {
  const Graph g(1);
  EXPECT_THROW(evaluate_standard(g, nice_for(g), Assignment::uniform(1, 1, 1, 2, 0)), Error);
}

TEST(EvaluateV0, SmallExamples) {
  const Graph g1(1);
  EXPECT_EQ(evaluate(g1, nice_for(g1), Assignment::uniform(1, 1, 1, 2, 0)), 3);
  const Graph g2 = k2();
  EXPECT_EQ(evaluate_v0(g2, nice_for(g2), Assignment::uniform(2, 1, 1, 2, 0)), 17);
}

TEST(EvaluateV0, MatchesOracleAndSymbolicFallback) {
  Rng rng(37);
  for (int t = 0; t < 150; ++t) {
    std::uniform_int_distribution<std::size_t> size(0, 7);
    const Graph g = testing::random_looped_graph(size(rng), rng);
    const auto ntd = nice_for(g);
    auto asg = testing::random_assignment(g.size(), rng);
    asg.v = 0;
    const auto want = oracle_evaluate(g, asg);
    ASSERT_EQ(evaluate_v0(g, ntd, asg), want) << "trial " << t;
    ASSERT_EQ(evaluate_v0_symbolic(g, ntd, asg), want) << "trial " << t;
  }
}

TEST(EvaluateModular, AgreesWithRationalReduced) {
  Rng rng(41);
  constexpr std::uint64_t p = 1000000007ULL;
  for (int t = 0; t < 40; ++t) {
    const auto gt = random_partial_ktree(15, 2, 0.7, rng);
    const auto ntd = make_nice(gt.graph, gt.td);
    Assignment asg = testing::random_assignment(15, rng);
    const mpq_class exact = evaluate(gt.graph, ntd, asg);
    const auto got = evaluate_modular(gt.graph, ntd, asg, p);
    mpz_class pz(p);
    mpz_class num = exact.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class inv;
    mpz_class den = exact.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    mpz_class want = (num * inv) % pz;
    EXPECT_EQ(mpz_class(std::to_string(got)), want);
  }
}

TEST(Truncate, SingleEdgeDegreeOne) {
  const Graph g = k2();
  const auto poly = truncate(g, nice_for(g), 1);
  EXPECT_EQ(poly.to_json(g),
            "[{\"A\":[],\"B\":[],\"coeff\":\"1\",\"u\":0,\"v\":0},"
            "{\"A\":[],\"B\":[1],\"coeff\":\"1\",\"u\":1,\"v\":0},"
            "{\"A\":[],\"B\":[2],\"coeff\":\"1\",\"u\":1,\"v\":0},"
            "{\"A\":[1],\"B\":[],\"coeff\":\"1\",\"u\":0,\"v\":1},"
            "{\"A\":[2],\"B\":[],\"coeff\":\"1\",\"u\":0,\"v\":1}]\n");
  EXPECT_EQ(poly, oracle_coefficients(g, 1));
}

TEST(Truncate, DegreeZeroIsConstantOne) {
  Rng rng(43);
  const Graph g = testing::random_looped_graph(6, rng);
  EXPECT_EQ(truncate(g, nice_for(g), 0), TruncPoly::constant(0, 1));
}

TEST(Truncate, MatchesOracleCoefficients) {
  Rng rng(47);
  for (int t = 0; t < 60; ++t) {
    std::uniform_int_distribution<std::size_t> size(0, 6);
    const Graph g = testing::random_looped_graph(size(rng), rng);
    const auto ntd = nice_for(g);
    for (std::size_t d : {std::size_t{0}, std::size_t{1}, std::size_t{2}, g.size()}) {
      ASSERT_EQ(truncate(g, ntd, d), oracle_coefficients(g, d)) << "trial " << t << " d=" << d;
    }
  }
}

TEST(Truncate, JsonRoundTrip) {
  Rng rng(53);
  const Graph g = testing::random_looped_graph(5, rng);
  const auto poly = truncate(g, nice_for(g), 5);
  EXPECT_EQ(TruncPoly::from_json(poly.to_json(g), g, 5), poly);
}

TEST(Specialize, TwoVariableSingleEdge) {
  const Graph g = k2();
  EXPECT_EQ(specialize(g, nice_for(g), Substitution::kTwoVariable, 3, 4), 11);
  const Graph empty;
  EXPECT_EQ(specialize(empty, nice_for(empty), Substitution::kTwoVariable, 3, 4), 1);
}

TEST(Specialize, TwoVariableEqualsDirectSubstitution) {
  Rng rng(59);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testing::random_looped_graph(6, rng);
    const auto ntd = nice_for(g);
    const auto x = testing::random_rational(rng);
    const auto y = testing::random_rational(rng);
    const auto asg = Assignment::uniform(6, 1, 0, x - 1, y - 1);
    EXPECT_EQ(specialize(g, ntd, Substitution::kTwoVariable, x, y), oracle_evaluate(g, asg));
    EXPECT_EQ(specialize(g, ntd, Substitution::kVertexNullity, 0, y),
              oracle_evaluate(g, Assignment::uniform(6, 1, 0, 1, y - 1)));
  }
}

TEST(Parts, EveryStoredPartMatchesBruteForce) {
  Rng rng(61);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    const Graph g = testing::random_looped_graph(size(rng), rng);
    const auto ntd = nice_for(g);
    const auto order = vertex_order(ntd, g.size());
    const auto asg = testing::random_assignment(g.size(), rng);
    std::size_t checked = 0;
    evaluate(g, ntd, asg, {}, nullptr,
             [&](std::size_t node, const std::vector<Vertex>& bag, const PartsTable<mpq_class>& parts) {
               // Forgotten below node = vertices forgotten at nodes in its subtree.
               std::vector<Vertex> below;
               for (std::size_t i = ntd.subtree_begin(node); i <= node; ++i) {
                 if (ntd.node(i).kind == NodeKind::kForget) below.push_back(ntd.node(i).vertex);
               }
               std::sort(below.begin(), below.end(), [&](Vertex a, Vertex b) { return order.less(a, b); });
               const auto want = oracle_parts(g, below, bag, asg);
               ASSERT_EQ(want.size(), parts.size()) << "node " << node;
               for (const auto& p : want) {
                 auto it = parts.find(PartKey{p.d, p.scenario});
                 ASSERT_NE(it, parts.end()) << "node " << node << " missing " << to_string(p.scenario);
                 EXPECT_EQ(it->second, p.value);
                 ++checked;
               }
             });
    EXPECT_GT(checked, 0U);
  }
}

}  // namespace
}  // namespace interlace
