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

#ifndef RAP_EXACT_HPP_
#define RAP_EXACT_HPP_

#include <cstdint>

#include "rap/instance.hpp"

namespace rap {

struct BnbConfig {
  int max_edges = 26;
  std::int64_t node_limit = 200'000'000;
  double time_limit_seconds = 600.0;
};

struct BnbStats {
  std::int64_t nodes = 0;
};

// Depth-first branch and bound over edges in descending cost order (ties by
// ascending id), excluding before including. A branch dies when the edges not
// yet excluded are infeasible or the included cost reaches the incumbent.
// Among optimal sets the first one met in that order is returned.
//
// Throws RapError("instance too large for exact solver") above max_edges,
// RapError("exact search limit reached") on node or time limits, and
// InfeasibleError for infeasible input. Unbalanced instances are solved in
// their balanced completion.
Solution solve_exact(const RapInstance& inst, const BnbConfig& cfg = {},
                     BnbStats* stats = nullptr);

struct LowerBounds {
  double combinatorial = 0.0;  // 2|T| (uniform) or |T|, unit costs only
  double lp = 0.0;             // LP relaxation value, 0 if not computed

  double best() const { return combinatorial > lp ? combinatorial : lp; }
};

// |T| is the smaller side. The LP is solved on the balanced completion.
LowerBounds lower_bounds(const RapInstance& inst, bool with_lp = true);

}  // namespace rap

#endif  // RAP_EXACT_HPP_
