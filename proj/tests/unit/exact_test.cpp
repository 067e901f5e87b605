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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rap/error.hpp"
#include "rap/exact.hpp"
#include "rap/lp.hpp"
#include "rap/reductions.hpp"

namespace rap {
namespace {

using testing::c4;
using testing::nominal;
using testing::uniform_unit;

TEST(SolveExact, Examples) {
  EXPECT_EQ(solve_exact(uniform_unit(c4())).cost, 4);
  EXPECT_EQ(solve_exact(gk_family(3)).cost, 8);
  EXPECT_EQ(solve_exact(nominal(c4(), {4, 1, 3, 1})).edges, (EdgeSet{1, 3}));
}

TEST(SolveExact, Guards) {
  EXPECT_THROW(solve_exact(gk_family(3), {.max_edges = 11}), RapError);
  EXPECT_THROW(solve_exact(gk_family(4), {.node_limit = 10}), RapError);
  EXPECT_THROW(solve_exact(uniform_unit(BipartiteMultigraph(1, 1, {{0, 0}}))), InfeasibleError);
}

TEST(SolveExact, Deterministic) {
  const RapInstance g4 = gk_family(4);
  BnbStats a;
  BnbStats b;
  EXPECT_EQ(solve_exact(g4, {}, &a).edges, solve_exact(g4, {}, &b).edges);
  EXPECT_EQ(a.nodes, b.nodes);
}

class ExactProperties : public ::testing::TestWithParam<int> {};

// Instances with at most 14 edges against full subset enumeration.
TEST_P(ExactProperties, MatchesEnumeration) {
  RandomInstanceParams p;
  p.seed = static_cast<std::uint64_t>(GetParam());
  p.num_r = 2 + GetParam() % 3;
  p.num_t = GetParam() % 4 == 0 ? p.num_r - 1 : p.num_r;
  p.edge_prob = 0.7;
  p.vuln_prob = GetParam() % 3 == 0 ? 1.0 : 0.5;
  p.cost_max = 1 + GetParam() % 4;
  const RapInstance inst = random_instance(p);
  if (inst.num_edges() > 14) GTEST_SKIP() << inst.num_edges() << " edges";
  const Solution sol = solve_exact(inst);
  const auto opt = oracle::optimum(inst);
  ASSERT_TRUE(opt);
  EXPECT_DOUBLE_EQ(sol.cost, *opt);
  EXPECT_TRUE(oracle::feasible(inst, sol.edges));

  const LowerBounds lb = lower_bounds(inst);
  EXPECT_LE(lb.best(), *opt + 1e-6);
  EXPECT_LE(lb.lp, *opt + 1e-6);
}

INSTANTIATE_TEST_SUITE_P(Seeds, ExactProperties, ::testing::Range(0, 40));

TEST(LowerBounds, NonUniformUsesOneSide) {
  const RapInstance inst(c4(), {0, 1}, {1, 1, 1, 1});
  const LowerBounds lb = lower_bounds(inst);
  EXPECT_EQ(lb.combinatorial, 2);
  EXPECT_LE(lb.best(), solve_exact(inst).cost);
  const RapInstance weighted(c4(), {0}, {2, 1, 1, 1});
  EXPECT_EQ(lower_bounds(weighted).combinatorial, 0);
}

}  // namespace
}  // namespace rap
