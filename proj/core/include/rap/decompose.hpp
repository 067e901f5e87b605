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

#ifndef RAP_DECOMPOSE_HPP_
#define RAP_DECOMPOSE_HPP_

#include <vector>

#include "rap/graph.hpp"
#include "rap/matching.hpp"
#include "rap/rng.hpp"

namespace rap {

struct ConvexTerm {
  double weight = 0.0;
  Matching matching;
};

struct ConvexCombination {
  std::vector<ConvexTerm> terms;

  // sum_i weight_i * chi(M_i), per edge.
  std::vector<double> reconstruct(int num_edges) const;
};

// Writes a fractional perfect matching as a convex combination of perfect
// matchings avoiding `f` (kNoEdge: no edge is excluded). Repeatedly takes a
// perfect matching on the support {e : x_e > eps}, subtracts its minimum
// value, and stops once the remaining mass drops below eps. Weights are
// rescaled to sum to 1 at the end.
//
// Throws std::invalid_argument on a size mismatch or negative entries, and
// RapError("support has no perfect matching") when x is not close enough to
// the perfect matching polytope.
ConvexCombination birkhoff_decompose(const BipartiteMultigraph& g, EdgeId f,
                                     const std::vector<double>& x,
                                     double eps = 1e-9);

// One uniform draw against the cumulative weights.
const Matching& sample(const ConvexCombination& cc, Rng& rng);

}  // namespace rap

#endif  // RAP_DECOMPOSE_HPP_
