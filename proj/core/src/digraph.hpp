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

// Internal: the matched-pair contraction digraph shared by the allowed-edge
// classifier and the ear decomposition.

#ifndef RAP_SRC_DIGRAPH_HPP_
#define RAP_SRC_DIGRAPH_HPP_

#include <vector>

#include "rap/graph.hpp"
#include "rap/matching.hpp"

namespace rap::internal {

struct Arc {
  int from = 0;
  int to = 0;
  EdgeId edge = kNoEdge;  // the non-matching edge this arc represents
};

// Vertex i is the matched pair containing R node i. A non-matching edge {r, t}
// becomes the arc pair(r) -> pair(t). Requires `m` perfect in `g`.
struct ContractedDigraph {
  int num_vertices = 0;
  std::vector<EdgeId> pair_edge;               // matched edge of vertex i
  std::vector<int> vertex_of_t;                // T index -> vertex
  std::vector<Arc> arcs;                       // ascending edge id
  std::vector<std::vector<int>> out_arcs;      // arc indices, ascending
};

ContractedDigraph contract_matching(const BipartiteMultigraph& g,
                                    const Matching& m);

// Component index per vertex (Kosaraju, iterative).
std::vector<int> strongly_connected_components(const ContractedDigraph& d);

}  // namespace rap::internal

#endif  // RAP_SRC_DIGRAPH_HPP_
