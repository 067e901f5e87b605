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

// Bipartite ear decompositions and the cardinality heuristic built on them:
// drop dispensable edges, decompose each component, keep everything except
// the trivial (single-edge) ears.

#ifndef RAP_EAR_HPP_
#define RAP_EAR_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rap/instance.hpp"

namespace rap {

struct Ear {
  EdgeSet path;  // edge ids in path order
  bool trivial = false;
};

// ears[0] is the single starting edge.
struct EarDecomposition {
  std::vector<Ear> ears;

  int nontrivial_count() const;
  EdgeSet kept_edges() const;  // ears[0] plus the non-trivial ears, sorted
};

struct EarOptions {
  bool random = false;
  std::uint64_t seed = 0;
};

// "lowest" or "random:<seed>". Throws std::invalid_argument otherwise.
EarOptions parse_ear_order(const std::string& text);

// `g` must be connected and matching-covered, else RapError
// ("not matching-covered"). The start edge is the lowest edge id; later
// choices scan arcs in ascending edge id unless `opts.random` shuffles them.
EarDecomposition ear_decomposition(const BipartiteMultigraph& g,
                                   const EarOptions& opts = {});

struct EarResult {
  Solution solution;
  // Per component of the allowed subgraph, in the ids of the balanced
  // instance that was decomposed (the input itself when it is balanced).
  std::vector<EarDecomposition> components;

  // One line per ear: "component <c> ear <i> [trivial] : <ids>".
  void write_decomposition(std::ostream& out) const;
};

// Costs are ignored; the objective is cardinality. Unbalanced instances are
// completed with invulnerable dummy edges, which are removed from the answer.
// Throws InfeasibleError for infeasible input.
EarResult solve_ear(const RapInstance& inst, const EarOptions& opts = {});

}  // namespace rap

#endif  // RAP_EAR_HPP_
