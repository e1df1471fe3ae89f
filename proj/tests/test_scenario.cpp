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

#include <set>

#include "core/oracle.hpp"
#include "core/scenario.hpp"
#include "support/graphs.hpp"
#include "support/scenario_check.hpp"

namespace interlace {
namespace {

using testing::check_all_graphs;
using testing::check_extension;
using testing::ScenarioCheckStats;

Scenario make(std::size_t dim, std::vector<Mask> basis, std::vector<Mask> uu) {
  Scenario s;
  s.dim = static_cast<std::uint8_t>(dim);
  s.rank = static_cast<std::uint8_t>(basis.size());
  std::copy(basis.begin(), basis.end(), s.basis.begin());
  std::copy(uu.begin(), uu.end(), s.uu.begin());
  return s;
}

TEST(ScenarioOf, LoopedVertexWithoutEliminatedPart) {
  Graph g(1);
  g.add_edge(0, 0);
  const std::vector<Vertex> u{0};
  EXPECT_EQ(scenario_of(g, {}, u), make(1, {}, {1}));
}

TEST(ScenarioOf, SingleEdgeSplit) {
  const std::pair<Vertex, Vertex> e[] = {{0, 1}};
  const Graph g = Graph::from_edges(2, e);
  const std::vector<Vertex> vp{0};
  const std::vector<Vertex> u{1};
  EXPECT_EQ(scenario_of(g, vp, u), make(1, {1}, {0}));
}

TEST(ScenarioOf, StarCentreEliminated) {
  const std::pair<Vertex, Vertex> e[] = {{0, 1}, {0, 2}};
  const Graph g = Graph::from_edges(3, e);
  const std::vector<Vertex> vp{0};
  const std::vector<Vertex> u{1, 2};
  EXPECT_EQ(scenario_of(g, vp, u), make(2, {0b11}, {0, 0}));
}

TEST(ScenarioOps, JoinExamples) {
  const Mask empty_row[] = {0};
  EXPECT_EQ(join(make(1, {}, {0}), make(1, {}, {0}), empty_row).scenario, make(1, {}, {0}));
  EXPECT_EQ(join(make(1, {1}, {0}), make(1, {1}, {0}), empty_row).scenario, make(1, {1}, {0}));
  EXPECT_EQ(join(make(1, {}, {1}), make(1, {}, {1}), empty_row).scenario, make(1, {}, {0}));
}

TEST(ScenarioOps, JoinFullRankExamples) {
  const Mask row1[] = {0};
  EXPECT_TRUE(join(make(1, {}, {0}), make(1, {}, {0}), row1).preserves_full_rank);
  EXPECT_FALSE(join(make(1, {1}, {0}), make(1, {1}, {0}), row1).preserves_full_rank);
  const Mask rows2[] = {0, 0};
  EXPECT_TRUE(join(make(2, {0b01}, {0, 0}), make(2, {0b10}, {0, 0}), rows2).preserves_full_rank);
}

TEST(ScenarioOps, TwoLeafStarJoinMatchesOracle) {
  // Both leaves eliminated, centre is the extension.
  const std::pair<Vertex, Vertex> e[] = {{0, 2}, {1, 2}};
  const Graph g = Graph::from_edges(3, e);
  const std::vector<Vertex> u{2};
  const std::vector<Vertex> v1{0};
  const std::vector<Vertex> v2{1};
  const std::vector<Vertex> both{0, 1};
  const Mask row[] = {0};
  const auto j = join(scenario_of(g, v1, u), scenario_of(g, v2, u), row);
  EXPECT_EQ(j.scenario, canonical(scenario_of(g, both, u)));
  EXPECT_FALSE(j.preserves_full_rank);
  EXPECT_FALSE(oracle_scenario(g, both, u).full_rank);
}

TEST(ScenarioOps, IntroduceExamples) {
  EXPECT_EQ(introduce(Scenario{}, 0, 1), make(1, {}, {1}));
  // ({(1)}, [0]) over {u1}; u2 adjacent to u1. The class representative
  // clears the pivot row, so compare against the canonical form.
  const auto s = introduce(make(1, {1}, {0}), 1, 0b01);
  EXPECT_EQ(s, canonical(make(2, {0b01}, {0b10, 0b01})));
}

TEST(ScenarioOps, ForgetExamples) {
  auto f = forget(make(1, {}, {1}));
  EXPECT_EQ(f.scenario, Scenario{});
  EXPECT_EQ(f.rank_delta, 1);
  EXPECT_EQ(f.nullity_delta, 0);

  f = forget(make(1, {}, {0}));
  EXPECT_EQ(f.scenario, Scenario{});
  EXPECT_EQ(f.rank_delta, 0);
  EXPECT_EQ(f.nullity_delta, 1);

  f = forget(make(1, {1}, {0}));
  EXPECT_EQ(f.scenario, Scenario{});
  EXPECT_EQ(f.rank_delta, 2);
  EXPECT_EQ(f.nullity_delta, -1);
}

TEST(ScenarioOps, IgnoreExamples) {
  EXPECT_EQ(ignore(make(1, {1}, {0}), 0).scenario, Scenario{});
  EXPECT_EQ(ignore(make(2, {0b01, 0b10}, {0, 0}), 0).scenario, make(1, {1}, {0}));
  EXPECT_EQ(ignore(make(2, {0b11}, {0, 0}), 1).scenario, make(1, {1}, {0}));
}

TEST(ScenarioOps, GreedyBasisFormIsNotClosedUnderForget) {
  // Order v2 < v1 < u < p; edges v1-u, v2-u, v2-p, loop at u. Forgetting u
  // from the literal scenario of V' = {v2, v1} gives a different U x U block
  // than the literal scenario of V' = {v2, v1, u}; both lie in one class.
  const std::pair<Vertex, Vertex> e[] = {{1, 2}, {0, 2}, {0, 3}, {2, 2}};
  const Graph g = Graph::from_edges(4, e);
  const std::vector<Vertex> vp{0, 1};
  const std::vector<Vertex> u{2, 3};
  const std::vector<Vertex> vp2{0, 1, 2};
  const std::vector<Vertex> u2{3};
  const auto after = oracle_scenario(g, vp2, u2).scenario;
  const auto via_forget = forget(oracle_scenario(g, vp, u).scenario).scenario;
  EXPECT_EQ(after, make(1, {1}, {1}));
  EXPECT_EQ(via_forget, canonical(after));
  EXPECT_FALSE(via_forget == after);
}

TEST(ScenarioEnumeration, RawCounts) {
  EXPECT_EQ(enumerate_scenarios(0).size(), 1U);
  EXPECT_EQ(enumerate_scenarios(1).size(), 4U);
  EXPECT_EQ(enumerate_scenarios(2).size(), 56U);
  EXPECT_EQ(enumerate_scenarios(3).size(), 3648U);
  for (std::size_t k = 0; k <= 3; ++k) {
    EXPECT_LE(enumerate_scenarios(k).size(), std::size_t{1} << ((3 * k + 1) * k / 2));
  }
}

TEST(ScenarioEnumeration, CanonicalClassCounts) {
  EXPECT_EQ(count_canonical_scenarios(0), 1U);
  EXPECT_EQ(count_canonical_scenarios(1), 3U);
  EXPECT_EQ(count_canonical_scenarios(2), 15U);
  EXPECT_EQ(count_canonical_scenarios(3), 135U);
}

TEST(ScenarioKey, RoundTrip) {
  std::set<std::string> keys;
  for (const auto& s : enumerate_scenarios(3)) {
    const auto key = encode(s);
    EXPECT_EQ(decode(key), s);
    keys.insert(key);
  }
  EXPECT_EQ(keys.size(), 3648U);
  EXPECT_EQ(to_hex(encode(make(1, {1}, {1}))), "0101010001");
}

TEST(ScenarioKey, LexOrderPutsLowPositionFirst) {
  EXPECT_TRUE(lex_less(0b10, 0b01));
  EXPECT_FALSE(lex_less(0b01, 0b10));
  EXPECT_TRUE(lex_less(0b00, 0b01));
  EXPECT_FALSE(lex_less(0b11, 0b11));
}

TEST(ScenarioOracle, ExhaustiveUpToFourVertices) {
  ScenarioCheckStats stats;
  for (std::size_t m = 1; m <= 4; ++m) check_all_graphs(m, 3, stats);
  EXPECT_EQ(stats.mismatches, 0U) << stats.first_mismatch;
  EXPECT_GT(stats.joins, 0U);
  EXPECT_GT(stats.introduces, 0U);
}

TEST(ScenarioOracle, RandomSevenVertexExtensions) {
  Rng rng(7);
  ScenarioCheckStats stats;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::random_looped_graph(7, rng);
    std::uniform_int_distribution<std::size_t> tsize(0, 3);
    const auto t = tsize(rng);
    std::vector<Vertex> vprime;
    std::vector<Vertex> u;
    for (Vertex v = 0; v < 7; ++v) (v + t < 7 ? vprime : u).push_back(v);
    check_extension(g, vprime, u, stats);
  }
  EXPECT_EQ(stats.mismatches, 0U) << stats.first_mismatch;
}

TEST(ScenarioOracle, FullRankAtEmptyExtensionMatchesAdjacencyRank) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<std::size_t> size(0, 8);
    const Graph g = testing::random_looped_graph(size(rng), rng);
    // Introduce every vertex into an empty eliminated part, then forget them
    // in order while propagating the flag.
    Scenario s;
    for (Vertex v = 0; v < g.size(); ++v) {
      Mask row = 0;
      for (Vertex w = 0; w <= v; ++w) {
        if (g.has_edge(v, w)) row = static_cast<Mask>(row | (1U << w));
      }
      s = introduce(s, v, row);
    }
    bool full = true;
    for (Vertex v = 0; v < g.size(); ++v) {
      const auto f = forget(s);
      full = full && f.full_rank;
      s = f.scenario;
    }
    EXPECT_EQ(full, rank_nullity(g).nullity == 0);
  }
}

}  // namespace
}  // namespace interlace
