// Copyright 2026 The RAP Toolkit Authors
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

#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rap/error.hpp"
#include "rap/reductions.hpp"
#include "rap/round.hpp"

namespace rap {
namespace {

using testing::c4;
using testing::nominal;
using testing::uniform_unit;

TEST(UncoveredEdge, Examples) {
  const RapInstance inst = uniform_unit(c4());
  EXPECT_EQ(uncovered_vulnerable_edge(inst, EdgeMask(4, false)), 0);
  EXPECT_EQ(uncovered_vulnerable_edge(inst, to_mask(4, {0, 2})), 0);
  EXPECT_EQ(uncovered_vulnerable_edge(inst, to_mask(4, {1, 3})), 1);
  EXPECT_EQ(uncovered_vulnerable_edge(inst, EdgeMask(4, true)), std::nullopt);
}

TEST(RoundingIteration, JoinsComponents) {
  const RapInstance inst = uniform_unit(c4());
  const FractionalSolution frac = solve_lp(build_lp(inst), LpMethod::kCuts);
  Rng rng(1);
  RoundStep step;
  const EdgeSet added = rounding_iteration(inst, to_mask(4, {0, 2}), frac, 0, rng, &step);
  EXPECT_EQ(added, (EdgeSet{1, 3}));
  EXPECT_EQ(step.components_before, 2);
  EXPECT_EQ(step.components_after, 1);

  // From nothing, a whole perfect matching is added.
  Rng rng2(2);
  EXPECT_EQ(rounding_iteration(inst, EdgeMask(4, false), frac, 0, rng2).size(), 2u);
}

TEST(SolveLpRound, C4TakesEverything) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RoundResult r = solve_lp_round(uniform_unit(c4()), {.seed = seed});
    EXPECT_EQ(r.solution.edges, (EdgeSet{0, 1, 2, 3}));
    EXPECT_EQ(r.solution.cost, 4);
    EXPECT_EQ(r.trace.steps.size(), 2u);
  }
}

TEST(SolveLpRound, NominalGivesMinCostMatching) {
  const RapInstance inst = nominal(c4(), {3, 1, 3, 1});
  const RoundResult r = solve_lp_round(inst);
  EXPECT_EQ(r.solution.edges, (EdgeSet{1, 3}));
  EXPECT_EQ(r.solution.cost, 2);
}

TEST(SolveLpRound, G3WithinBounds) {
  const RapInstance g3 = gk_family(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RoundOptions opts;
    opts.seed = seed;
    opts.check_invariants = true;
    const RoundResult r = solve_lp_round(g3, opts);
    EXPECT_GE(r.solution.edges.size(), 8u);
    EXPECT_LE(r.solution.edges.size(), 12u);
    EXPECT_TRUE(oracle::feasible(g3, r.solution.edges));
  }
}

TEST(SolveLpRound, SameSeedSameTrace) {
  const RapInstance g3 = gk_family(3);
  std::ostringstream a;
  std::ostringstream b;
  solve_lp_round(g3, {.seed = 7}).trace.write(a);
  solve_lp_round(g3, {.seed = 7}).trace.write(b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_TRUE(a.str().starts_with("iter 0 f=e0 "));
}

TEST(SolveLpRound, RejectsInfeasible) {
  EXPECT_THROW(solve_lp_round(uniform_unit(BipartiteMultigraph(1, 1, {{0, 0}}))),
               InfeasibleError);
}

class RoundProperties : public ::testing::TestWithParam<int> {};

TEST_P(RoundProperties, FeasibleMinimalAndBounded) {
  RandomInstanceParams p;
  p.seed = static_cast<std::uint64_t>(GetParam());
  p.num_r = 3 + GetParam() % 2;
  p.num_t = GetParam() % 5 == 0 ? p.num_r - 1 : p.num_r;
  p.edge_prob = 0.7;
  p.vuln_prob = GetParam() % 2 == 0 ? 1.0 : 0.5;
  p.cost_max = 3;
  const RapInstance inst = random_instance(p);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    RoundOptions opts;
    opts.seed = seed;
    opts.check_invariants = true;
    const RoundResult r = solve_lp_round(inst, opts);
    EXPECT_TRUE(oracle::minimal_feasible(inst, r.solution.edges));
    const int loop_edges = inst.num_edges() + static_cast<int>(inst.num_edges() - inst.vulnerable().size());
    EXPECT_LE(static_cast<int>(r.trace.steps.size()), loop_edges);
    for (const RoundStep& step : r.trace.steps) {
      EXPECT_FALSE(step.added.empty());
      EXPECT_LE(step.components_after, step.components_before);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RoundProperties, ::testing::Range(0, 20));

}  // namespace
}  // namespace rap
