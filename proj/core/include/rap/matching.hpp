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

#ifndef RAP_MATCHING_HPP_
#define RAP_MATCHING_HPP_

#include <vector>

#include "rap/graph.hpp"

namespace rap {

struct Matching {
  EdgeSet edges;  // sorted

  int size() const { return static_cast<int>(edges.size()); }
  bool perfect_in(const BipartiteMultigraph& g) const {
    return g.balanced() && size() == g.num_r();
  }
  bool contains(EdgeId e) const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

// Maximum-cardinality matching restricted to edges with usable[e] set
// (Hopcroft-Karp). Free nodes and incident edges are scanned in ascending
// order, so the result is a deterministic function of the input.
Matching max_matching(const BipartiteMultigraph& g, const EdgeMask& usable);

// Same, with every edge usable except those in `forbidden`.
Matching max_matching(const BipartiteMultigraph& g,
                      const EdgeSet& forbidden = {});

bool has_perfect_matching(const BipartiteMultigraph& g, const EdgeMask& usable);

// Whether E \ {f} contains a perfect matching. Throws std::invalid_argument
// ("not balanced") for unbalanced graphs.
bool has_pm_avoiding(const BipartiteMultigraph& g, EdgeId f);

// Edges lying in at least one perfect matching.
//
// Computed from one perfect matching M: contracting each matched pair gives a
// digraph with an arc pair(r) -> pair(t) per non-matching edge {r, t}; such an
// edge is allowed iff both ends fall in one strongly connected component.
// Throws RapError("no perfect matching") if g has none.
EdgeSet allowed_edges(const BipartiteMultigraph& g);

struct GraphComponent {
  std::vector<int> nodes;  // unified node ids, ascending
  EdgeSet edges;
  bool perfectly_matchable = false;
  bool matching_covered = false;
};

// Connected components (isolated nodes included), each flagged
// matching-covered iff it is perfectly matchable and every edge is allowed.
std::vector<GraphComponent> matching_covered_components(
    const BipartiteMultigraph& g);

}  // namespace rap

#endif  // RAP_MATCHING_HPP_
