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
#include <stdexcept>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rap/error.hpp"
#include "rap/instance.hpp"
#include "rap/io.hpp"
#include "rap/reductions.hpp"

namespace rap {
namespace {

using testing::c4;
using testing::nominal;
using testing::uniform_unit;

RapInstance random_balanced(std::uint64_t seed, double vuln_prob) {
  Rng rng(seed);
  RandomInstanceParams p;
  p.num_r = p.num_t = 2 + static_cast<int>(rng.uniform_int(0, 2));
  p.edge_prob = 0.7;
  p.vuln_prob = vuln_prob;
  p.cost_max = 3;
  p.seed = seed;
  return random_instance(p);
}

TEST(RapInstance, RejectsBadInput) {
  const auto g = c4();
  EXPECT_THROW(RapInstance(g, {7}, {1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(RapInstance(g, {}, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(RapInstance(g, {}, {1, -1, 1, 1}), std::invalid_argument);
}

TEST(RapInstance, UniformFlag) {
  EXPECT_TRUE(uniform_unit(c4()).uniform());
  EXPECT_FALSE(RapInstance(c4(), {0}, {1, 1, 1, 1}).uniform());
}

TEST(CheckFeasible, Examples) {
  EXPECT_TRUE(check_feasible(uniform_unit(c4())));
  EXPECT_FALSE(check_feasible(uniform_unit(BipartiteMultigraph(1, 1, {{0, 0}}))));
  EXPECT_TRUE(check_feasible(gk_family(3)));
  const RapInstance unbalanced(BipartiteMultigraph(2, 1, {{0, 0}, {1, 0}}), {}, {1, 1});
  EXPECT_THROW(check_feasible(unbalanced), std::invalid_argument);
}

TEST(VerifySolution, CertificateForC4) {
  const RapInstance inst = uniform_unit(c4());
  const Certificate cert = verify_solution(inst, make_solution(inst, {0, 1, 2, 3}));
  ASSERT_EQ(cert.matchings.size(), 4u);
  EXPECT_EQ(cert.matchings.at(0).edges, (EdgeSet{1, 3}));
  EXPECT_EQ(cert.matchings.at(1).edges, (EdgeSet{0, 2}));
  EXPECT_EQ(cert.matchings.at(2).edges, (EdgeSet{1, 3}));
  EXPECT_EQ(cert.matchings.at(3).edges, (EdgeSet{0, 2}));
}

TEST(VerifySolution, NamesFirstFailingScenario) {
  const RapInstance inst = uniform_unit(c4());
  try {
    verify_solution(inst, make_solution(inst, {0, 2}));
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.scenario(), 0);
    EXPECT_STREQ(e.what(), "infeasible at scenario e0");
  }
}

TEST(VerifySolution, HamiltonianCycleOfG3) {
  const RapInstance g3 = gk_family(3);
  const BipartiteMultigraph& g = g3.graph();
  // Node v of G_3 is t0 for 0, t_{v/2} for odd v >= 3, r0 for 1, r_{v/2} else.
  auto id = [&](int a, int b) {
    auto side = [](int v) { return v <= 1 ? 0 : v / 2; };
    const bool a_is_t = a == 0 || (a % 2 == 1 && a >= 3);
    const int r = side(a_is_t ? b : a);
    const int t = side(a_is_t ? a : b);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (g.edge(e) == Edge{r, t}) return e;
    }
    ADD_FAILURE() << "no edge {" << a << "," << b << "}";
    return kNoEdge;
  };
  const int cycle[] = {0, 2, 3, 1, 5, 6, 7, 4};
  EdgeSet x;
  for (int i = 0; i < 8; ++i) x.push_back(id(cycle[i], cycle[(i + 1) % 8]));
  const Solution sol = make_solution(g3, x);
  EXPECT_EQ(sol.edges.size(), 8u);
  EXPECT_NO_THROW(verify_solution(g3, sol));
}

TEST(VerifySolution, NominalSentinel) {
  const RapInstance inst = nominal(c4(), {1, 1, 1, 1});
  const Certificate cert = verify_solution(inst, make_solution(inst, {0, 2}));
  ASSERT_EQ(cert.matchings.size(), 1u);
  EXPECT_TRUE(cert.matchings.contains(kNoEdge));
  EXPECT_THROW(verify_solution(inst, make_solution(inst, {0, 1})), InfeasibleError);
}

class VerifyProperties : public ::testing::TestWithParam<int> {};

TEST_P(VerifyProperties, AgreesWithEnumeration) {
  const auto seed = static_cast<std::uint64_t>(GetParam());
  const RapInstance inst = random_balanced(seed, GetParam() % 3 == 0 ? 1.0 : 0.5);
  Rng rng(seed + 1000);
  for (int trial = 0; trial < 20; ++trial) {
    EdgeSet x;
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (rng.bernoulli(0.75)) x.push_back(e);
    }
    const bool expected = oracle::feasible(inst, x);
    bool got = true;
    try {
      const Certificate cert = verify_solution(inst, make_solution(inst, x));
      for (const auto& [f, m] : cert.matchings) {
        EXPECT_TRUE(m.perfect_in(inst.graph()));
        EXPECT_FALSE(m.contains(f));
        for (EdgeId e : m.edges) EXPECT_TRUE(std::binary_search(x.begin(), x.end(), e));
      }
    } catch (const InfeasibleError&) {
      got = false;
    }
    EXPECT_EQ(got, expected);
    EXPECT_EQ(is_feasible(inst, to_mask(inst.num_edges(), x)), expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, VerifyProperties, ::testing::Range(0, 40));

TEST(PruneToMinimal, C4) {
  const RapInstance inst = uniform_unit(c4());
  EXPECT_EQ(prune_to_minimal(inst, make_solution(inst, {0, 1, 2, 3})).edges,
            (EdgeSet{0, 1, 2, 3}));
  const RapInstance nom = nominal(c4(), {1, 1, 1, 1});
  EXPECT_EQ(prune_to_minimal(nom, make_solution(nom, {0, 1, 2, 3})).edges.size(), 2u);
}

TEST(PruneToMinimal, RemovalOrderIsDescendingCostThenId) {
  // Nominal C4 with costs making {e1,e3} the expensive matching.
  const RapInstance inst = nominal(c4(), {1, 5, 1, 5});
  EXPECT_EQ(prune_to_minimal(inst, make_solution(inst, {0, 1, 2, 3})).edges,
            (EdgeSet{0, 2}));
  // Equal costs: e3 goes first, then e2 cannot.
  const RapInstance flat = nominal(c4(), {1, 1, 1, 1});
  EXPECT_EQ(prune_to_minimal(flat, make_solution(flat, {0, 1, 2, 3})).edges,
            (EdgeSet{0, 2}));
}

TEST(PruneToMinimal, PropagatesInfeasibility) {
  const RapInstance inst = uniform_unit(c4());
  EXPECT_THROW(prune_to_minimal(inst, make_solution(inst, {0, 2})), InfeasibleError);
}

class PruneProperties : public ::testing::TestWithParam<int> {};

TEST_P(PruneProperties, OutputIsMinimal) {
  const RapInstance inst = random_balanced(static_cast<std::uint64_t>(GetParam()), 0.6);
  const Solution pruned = prune_to_minimal(inst, make_solution(inst, all_edges(inst.graph())));
  EXPECT_TRUE(oracle::minimal_feasible(inst, pruned.edges));
}

INSTANTIATE_TEST_SUITE_P(Seeds, PruneProperties, ::testing::Range(0, 30));

TEST(BalancedCompletion, AddsDummyNode) {
  const BipartiteMultigraph g(3, 2, {{0, 0}, {1, 1}, {2, 0}, {2, 1}});
  const RapInstance inst(g, {0, 1}, {2, 3, 4, 5});
  const InstanceMapping map = balanced_completion(inst);
  EXPECT_TRUE(map.instance.graph().balanced());
  EXPECT_EQ(map.instance.graph().num_t(), 3);
  EXPECT_EQ(map.instance.num_edges(), 7);
  const EdgeSet dummies = map.added_edges();
  ASSERT_EQ(dummies.size(), 3u);
  for (EdgeId e : dummies) {
    EXPECT_EQ(map.instance.cost(e), 0.0);
    EXPECT_FALSE(map.instance.is_vulnerable(e));
  }
  EXPECT_EQ(map.instance.vulnerable().size(), 2u);
  EXPECT_EQ(map.decode(all_edges(map.instance.graph())), (EdgeSet{0, 1, 2, 3}));
}

TEST(BalancedCompletion, IdentityWhenBalanced) {
  const RapInstance inst = uniform_unit(c4());
  const InstanceMapping map = balanced_completion(inst);
  EXPECT_EQ(map.instance.num_edges(), 4);
  EXPECT_TRUE(map.added_edges().empty());
}

TEST(BalancedCompletion, SwapsWhenTIsLarger) {
  const BipartiteMultigraph g(1, 2, {{0, 0}, {0, 1}});
  const RapInstance inst(g, {0}, {1, 1});
  const InstanceMapping map = balanced_completion(inst);
  EXPECT_TRUE(map.swapped_sides);
  EXPECT_EQ(map.instance.graph().num_r(), 2);
  EXPECT_EQ(map.instance.graph().num_t(), 2);
}

TEST(Uniformize, AddsOneCopyPerInvulnerableEdge) {
  const RapInstance inst(c4(), {0, 2}, {1, 2, 3, 4});
  const InstanceMapping map = uniformize(inst);
  EXPECT_EQ(map.instance.num_edges(), 6);
  EXPECT_TRUE(map.instance.uniform());
  EXPECT_EQ(map.instance.graph().edge(4), inst.graph().edge(1));
  EXPECT_EQ(map.instance.graph().edge(5), inst.graph().edge(3));
  EXPECT_EQ(map.instance.cost(4), 2.0);
  EXPECT_EQ(map.instance.cost(5), 4.0);
  const RapInstance already = uniform_unit(c4());
  EXPECT_EQ(uniformize(already).instance.num_edges(), 4);
}

class UniformizeProperties : public ::testing::TestWithParam<int> {};

TEST_P(UniformizeProperties, RoundTrip) {
  const RapInstance inst = random_balanced(static_cast<std::uint64_t>(GetParam()), 0.4);
  const InstanceMapping map = uniformize(inst);
  Rng rng(static_cast<std::uint64_t>(GetParam()) * 7 + 1);
  for (int trial = 0; trial < 10; ++trial) {
    EdgeSet x;
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (rng.bernoulli(0.8)) x.push_back(e);
    }
    const EdgeSet encoded = map.encode(x);
    EXPECT_LE(map.instance.cost_of(encoded), 2 * inst.cost_of(x) + 1e-9);
    if (oracle::feasible(inst, x)) {
      EXPECT_TRUE(oracle::feasible(map.instance, encoded));
      EXPECT_TRUE(oracle::feasible(inst, map.decode(encoded)));
    }
    // Any feasible set of the uniform instance decodes to a feasible set.
    EdgeSet xp;
    for (EdgeId e = 0; e < map.instance.num_edges(); ++e) {
      if (rng.bernoulli(0.8)) xp.push_back(e);
    }
    const EdgeSet decoded = map.decode(xp);
    EXPECT_LE(inst.cost_of(decoded), map.instance.cost_of(xp) + 1e-9);
    if (oracle::feasible(map.instance, xp)) {
      EXPECT_TRUE(oracle::feasible(inst, decoded));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, UniformizeProperties, ::testing::Range(0, 25));

TEST(Io, InstanceRoundTrip) {
  const RapInstance inst(c4(), {1, 3}, {0.5, 2, 3.25, 0});
  std::stringstream text;
  write_instance(text, inst, {"a", "b", "c", "d"}, {"header"});
  const RapInstance back = read_instance(text);
  EXPECT_EQ(back.graph().num_r(), 2);
  EXPECT_EQ(back.vulnerable(), inst.vulnerable());
  EXPECT_EQ(back.costs(), inst.costs());
  for (EdgeId e = 0; e < 4; ++e) EXPECT_EQ(back.graph().edge(e), inst.graph().edge(e));
}

TEST(Io, SolutionRoundTrip) {
  std::stringstream text;
  write_solution(text, {0, 3, 5});
  EXPECT_EQ(text.str(), "solution 3\n0\n3\n5\n");
  EXPECT_EQ(read_solution(text), (EdgeSet{0, 3, 5}));
}

TEST(Io, MalformedInput) {
  std::istringstream bad_header("rap 2\ngraph 1 1\n");
  EXPECT_THROW(read_instance(bad_header), ParseError);
  std::istringstream bad_edge("rap 1\ngraph 1 1\nedge 0 3 1 v\n");
  EXPECT_THROW(read_instance(bad_edge), std::exception);
  std::istringstream bad_cost("rap 1\ngraph 1 1\nedge 0 0 -1 v\n");
  EXPECT_THROW(read_instance(bad_cost), ParseError);
  std::istringstream bad_flag("rap 1\ngraph 1 1\nedge 0 0 1 x\n");
  EXPECT_THROW(read_instance(bad_flag), ParseError);
  std::istringstream short_solution("solution 3\n0\n1\n");
  EXPECT_THROW(read_solution(short_solution), ParseError);
}

TEST(Io, FormatNumberRoundTrips) {
  for (double v : {0.0, 1.0, 0.1, 2.5, 1e-7, 123456.789}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(3.0), "3");
}

}  // namespace
}  // namespace rap
