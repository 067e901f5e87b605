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

// Randomized LP rounding. The LP is solved once; then, while some vulnerable
// edge f is uncovered, a perfect matching is sampled from the decomposition of
// x^{-f} and its edges that join different components of G[X] are added.

#ifndef RAP_ROUND_HPP_
#define RAP_ROUND_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rap/instance.hpp"
#include "rap/lp.hpp"
#include "rap/rng.hpp"

namespace rap {

struct RoundStep {
  EdgeId scenario = kNoEdge;
  int term = 0;                 // index of the sampled term
  std::uint64_t matching_hash = 0;
  EdgeSet added;
  int components_before = 0;    // of (R u T, X), isolated nodes included
  int components_after = 0;
};

struct RoundTrace {
  bool uniformized = false;
  double lp_objective = 0.0;
  int lp_iterations = 0;
  std::vector<RoundStep> steps;

  // One line per iteration.
  void write(std::ostream& out) const;
};

struct RoundOptions {
  std::uint64_t seed = 0;
  // After every iteration, check that each component of G[X] is
  // matching-covered and that the fast uncovered-edge test agrees with the
  // direct one. Violations throw RapError.
  bool check_invariants = false;
  LpMethod lp_method = LpMethod::kCuts;
  LpTolerances tolerances;
};

struct RoundResult {
  Solution solution;
  RoundTrace trace;
};

// Lowest-id vulnerable f such that X \ {f} has no perfect matching.
std::optional<EdgeId> uncovered_vulnerable_edge(const RapInstance& inst,
                                                const EdgeMask& x);

// One rounding step for the uncovered edge f: returns the edges of the sampled
// matching whose endpoints lie in different components of (R u T, X), plus a
// sampled edge parallel to f if there is one.
EdgeSet rounding_iteration(const RapInstance& inst, const EdgeMask& x,
                           const FractionalSolution& frac, EdgeId f, Rng& rng,
                           RoundStep* step = nullptr);

// Non-uniform instances are uniformized first and the result is mapped back;
// unbalanced ones are solved in their balanced completion.
// The output is pruned to a minimal solution and verified. Throws
// InfeasibleError for infeasible input.
RoundResult solve_lp_round(const RapInstance& inst, const RoundOptions& opts = {});

}  // namespace rap

#endif  // RAP_ROUND_HPP_
