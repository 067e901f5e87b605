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

// Instance generators: set cover encodings, the G_k family on which the ear
// heuristic approaches ratio 3/2, the two-vulnerable-edge construction from
// shortest nice paths, and seeded random instances.

#ifndef RAP_REDUCTIONS_HPP_
#define RAP_REDUCTIONS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rap/instance.hpp"

namespace rap {

// Ground set {1..k} and a list of subsets.
struct SetCoverInstance {
  int k = 0;
  std::vector<std::vector<int>> sets;

  // Throws std::invalid_argument on out-of-range elements or an uncoverable
  // ground set.
  void validate() const;
  bool covers(const std::vector<int>& chosen) const;
  // Size of a smallest cover, by enumeration (guarded at 20 sets).
  int min_cover_size() const;
};

enum class CoverVariant {
  kBasic,            // F = E1, cost 1 on E4
  kUniformWeighted,  // F = E, cost 1 on E4, six-cycle gadgets on E3 and E5
  kUniformCard,      // F = E, unit costs, gadgets plus subdivided E1 edges
};

CoverVariant parse_cover_variant(const std::string& name);
std::string to_string(CoverVariant variant);

// Edge class E1..E6 of the set cover construction. `gadget` marks edges
// created by replacing an original edge of that class.
struct EdgeRole {
  int edge_class = 0;
  bool gadget = false;

  std::string label() const;
};

struct ReducedInstance {
  RapInstance rap;
  CoverVariant variant = CoverVariant::kBasic;
  int k = 0;
  std::vector<EdgeRole> roles;       // per edge
  std::vector<EdgeId> indicator;     // per set: the E4 edge {v̄_S, ṽ_S}
  std::vector<std::string> r_labels; // per R node
  std::vector<std::string> t_labels; // per T node

  // Number of edges in the (possibly subdivided) classes E1, E3 and E5.
  int forced_edge_count() const;
  std::vector<std::string> edge_comments() const;
  std::vector<std::string> header_comments() const;
};

// T-side nodes are numbered u_1..u_k, v̄_S, w_S, then gadget nodes; R-side
// nodes v_S, ū_1..ū_k, ṽ_S, then gadget nodes. Edges come in class order
// E1..E6, gadget replacements in place of the edge they replace.
ReducedInstance from_set_cover(const SetCoverInstance& sc, CoverVariant variant);

// X_C = (E \ E4) plus the indicator edges of the chosen sets.
EdgeSet cover_to_edges(const ReducedInstance& ri, const std::vector<int>& chosen);

// Reads the cover {S : indicator(S) in X} off a feasible solution. The
// solution is first verified (propagating InfeasibleError) and completed with
// E \ E4. Throws RapError("reduction violated") if the result is not a cover.
std::vector<int> decode_cover(const ReducedInstance& ri, const SetCoverInstance& sc,
                              const Solution& x);

// G_k on nodes 0..2k+1 (k >= 3): edge {0,1}, the paths 0-i-(i+1)-1 for even
// i in [2, 2k], and the 4-cycles on {j..j+3} for even j in [4, 2k-2]. Node 0
// and the odd nodes >= 3 form the T side (0 -> t0, 2i+1 -> ti); node 1 and the
// even nodes >= 2 form the R side (1 -> r0, 2i -> ri). Uniform, unit costs.
RapInstance gk_family(int k);

struct SnppReduction {
  RapInstance rap;
  EdgeId f1 = kNoEdge;  // {s, x}
  EdgeId f2 = kNoEdge;  // {x, y}
  EdgeId g = kNoEdge;   // {y, t}
  int x_r = -1;         // new R node
  int y_t = -1;         // new T node
  int h_nodes = 0;

  // Optimum of the RAP instance when a shortest nice s-t path has
  // `path_nodes` nodes.
  int expected_optimum(int path_nodes) const {
    return h_nodes / 2 + path_nodes / 2 + 2;
  }
};

// Two-vulnerable-edge instance from a balanced bipartite h with terminals s
// (a T-side index of h) and t (an R-side index). Unit costs, F = {f1, f2}.
SnppReduction from_snpp(const BipartiteMultigraph& h, int s, int t);

struct RandomInstanceParams {
  int num_r = 3;
  int num_t = 3;
  double edge_prob = 0.5;
  double vuln_prob = 1.0;
  int cost_min = 1;
  int cost_max = 1;
  std::uint64_t seed = 0;
  int max_attempts = 100;
};

// Integer costs drawn uniformly from [cost_min, cost_max]. Unbalanced
// instances are checked for feasibility through their balanced completion.
// Throws RapError("could not generate feasible instance") after max_attempts.
RapInstance random_instance(const RandomInstanceParams& params);

}  // namespace rap

#endif  // RAP_REDUCTIONS_HPP_
