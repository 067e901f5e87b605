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

#ifndef RAP_INSTANCE_HPP_
#define RAP_INSTANCE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "rap/graph.hpp"
#include "rap/matching.hpp"

namespace rap {

// A robust assignment instance: a bipartite multigraph, the set F of
// vulnerable edges and a non-negative cost per edge. An edge set X is feasible
// if X \ {f} contains a perfect matching for every f in F (or, when F is
// empty, if X contains a perfect matching).
class RapInstance {
 public:
  RapInstance() = default;

  // Throws std::invalid_argument on out-of-range vulnerable ids, a cost vector
  // of the wrong length, or negative / non-finite costs.
  RapInstance(BipartiteMultigraph graph, EdgeSet vulnerable,
              std::vector<double> costs);

  const BipartiteMultigraph& graph() const { return graph_; }
  const EdgeSet& vulnerable() const { return vulnerable_; }
  const std::vector<double>& costs() const { return costs_; }

  int num_edges() const { return graph_.num_edges(); }
  double cost(EdgeId e) const { return costs_[e]; }
  double cost_of(const EdgeSet& edges) const;
  bool is_vulnerable(EdgeId e) const { return vulnerable_mask_[e]; }
  bool uniform() const {
    return static_cast<int>(vulnerable_.size()) == graph_.num_edges();
  }
  bool unit_costs() const;

 private:
  BipartiteMultigraph graph_;
  EdgeSet vulnerable_;
  EdgeMask vulnerable_mask_;
  std::vector<double> costs_;
};

struct Solution {
  EdgeSet edges;
  double cost = 0.0;
};

// Sorts and deduplicates `edges` and caches their cost.
Solution make_solution(const RapInstance& inst, EdgeSet edges);

// One perfect matching inside X \ {f} per vulnerable f. Instances without
// vulnerable edges get a single matching under the key kNoEdge.
struct Certificate {
  std::map<EdgeId, Matching> matchings;
};

// Whether the full edge set is feasible. Throws std::invalid_argument
// ("apply balanced_completion first") for unbalanced graphs.
bool check_feasible(const RapInstance& inst);

// Feasibility of an arbitrary edge subset, without building a certificate.
bool is_feasible(const RapInstance& inst, const EdgeMask& x);

// The lowest-id vulnerable f with no perfect matching in X \ {f}. For F empty,
// returns kNoEdge when X has no perfect matching. std::nullopt if X is
// feasible.
std::optional<EdgeId> first_failing_scenario(const RapInstance& inst,
                                             const EdgeMask& x);

// Throws InfeasibleError naming the lowest failing vulnerable edge. Unbalanced
// instances are checked through their balanced completion, so the
// certificate's matchings then use the completed instance's edge ids.
Certificate verify_solution(const RapInstance& inst, const Solution& x);

// Drops edges of a feasible X while feasibility holds, trying them by
// descending cost and then descending id. The result is inclusion-wise
// minimal. Accepts unbalanced instances.
Solution prune_to_minimal(const RapInstance& inst, const Solution& x);

// A transformed instance plus the id bookkeeping needed to move solutions
// between it and the original.
struct InstanceMapping {
  RapInstance instance;
  // original id -> transformed id
  std::vector<EdgeId> forward;
  // transformed id -> original id; parallel copies map to the edge they copy,
  // edges with no original counterpart map to kNoEdge
  std::vector<EdgeId> backward;
  // transformed ids added to the encoding of every original solution
  EdgeSet encode_always;
  // per original id: transformed ids added alongside it when encoding
  std::vector<EdgeSet> encode_companions;
  // the original R and T sides were exchanged
  bool swapped_sides = false;

  EdgeSet encode(const EdgeSet& original) const;
  // Maps transformed edges back through `backward`, dropping kNoEdge.
  EdgeSet decode(const EdgeSet& transformed) const;
  // Transformed edges that are not the image of an original edge.
  EdgeSet added_edges() const;
};

// Pads the smaller side with dummy nodes joined to every node of the other
// side by zero-cost invulnerable edges. If num_t > num_r the sides are swapped
// first. Balanced inputs map to themselves.
InstanceMapping balanced_completion(const RapInstance& inst);

// Adds an equal-cost parallel copy of every invulnerable edge and marks all
// edges vulnerable. Copies get ids m, m+1, ... in ascending original order.
InstanceMapping uniformize(const RapInstance& inst);

// Exchanges the R and T sides, keeping edge ids.
RapInstance swap_sides(const RapInstance& inst);

}  // namespace rap

#endif  // RAP_INSTANCE_HPP_
