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

#include "rap/round.hpp"

#include <ios>
#include <ostream>

#include "rap/decompose.hpp"
#include "rap/error.hpp"
#include "rap/matching.hpp"

namespace rap {

void RoundTrace::write(std::ostream& out) const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const RoundStep& s = steps[i];
    out << "iter " << i << " f=e" << s.scenario << " term=" << s.term
        << " hash=" << std::hex << s.matching_hash << std::dec << " added=";
    for (std::size_t k = 0; k < s.added.size(); ++k) {
      out << (k ? "," : "") << s.added[k];
    }
    out << " components=" << s.components_before << "->" << s.components_after
        << '\n';
  }
}

std::optional<EdgeId> uncovered_vulnerable_edge(const RapInstance& inst,
                                                const EdgeMask& x) {
  return first_failing_scenario(inst, x);
}

namespace {

std::uint64_t hash_matching(const Matching& m) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (EdgeId e : m.edges) {
    h ^= static_cast<std::uint64_t>(e);
    h *= 1099511628211ULL;
  }
  return h;
}

DisjointSets components_of(const BipartiteMultigraph& g, const EdgeMask& x) {
  DisjointSets sets(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (x[e]) sets.unite(g.r_endpoint_node(e), g.t_endpoint_node(e));
  }
  return sets;
}

// Valid while every component of G[X] is matching-covered: then X \ {f}
// fails only when f is an isolated edge, or when X is not yet spanning.
std::optional<EdgeId> uncovered_fast(const RapInstance& inst, const EdgeMask& x) {
  const BipartiteMultigraph& g = inst.graph();
  if (!has_perfect_matching(g, x)) {
    if (inst.vulnerable().empty()) return kNoEdge;
    return inst.vulnerable().front();
  }
  std::vector<int> degree(g.num_nodes(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!x[e]) continue;
    ++degree[g.r_endpoint_node(e)];
    ++degree[g.t_endpoint_node(e)];
  }
  for (EdgeId f : inst.vulnerable()) {
    if (x[f] && degree[g.r_endpoint_node(f)] == 1 &&
        degree[g.t_endpoint_node(f)] == 1) {
      return f;
    }
  }
  return std::nullopt;
}

void check_component_invariants(const RapInstance& inst, const EdgeMask& x) {
  const BipartiteMultigraph& g = inst.graph();
  const Subgraph sub = edge_subgraph(g, from_mask(x));
  for (const GraphComponent& c : matching_covered_components(sub.graph)) {
    if (!c.edges.empty() && !c.matching_covered) {
      throw RapError("invariant violated: component of G[X] not matching-covered");
    }
  }
  if (uncovered_fast(inst, x) != first_failing_scenario(inst, x)) {
    throw RapError("invariant violated: uncovered-edge fast path disagrees");
  }
}

EdgeSet round_uniform(const RapInstance& inst, const RoundOptions& opts,
                      RoundTrace& trace) {
  const FractionalSolution frac = solve_lp(build_lp(inst), opts.lp_method, opts.tolerances);
  trace.lp_objective = frac.objective;
  trace.lp_iterations = frac.iterations;
  Rng rng(opts.seed);
  EdgeMask x(inst.num_edges(), false);
  for (int iter = 0;; ++iter) {
    const std::optional<EdgeId> f = uncovered_fast(inst, x);
    if (!f) break;
    if (iter >= inst.num_edges()) throw RapError("iteration bound exceeded");
    RoundStep step;
    const EdgeSet delta = rounding_iteration(inst, x, frac, *f, rng, &step);
    if (delta.empty()) throw RapError("rounding step added no edge");
    for (EdgeId e : delta) x[e] = true;
    trace.steps.push_back(std::move(step));
    if (opts.check_invariants) check_component_invariants(inst, x);
  }
  return from_mask(x);
}

}  // namespace

EdgeSet rounding_iteration(const RapInstance& inst, const EdgeMask& x,
                           const FractionalSolution& frac, EdgeId f, Rng& rng,
                           RoundStep* step) {
  const BipartiteMultigraph& g = inst.graph();
  const ConvexCombination cc = birkhoff_decompose(g, f, frac.x_for(f));
  const Matching& chosen = sample(cc, rng);

  DisjointSets before = components_of(g, x);
  const int count_before = before.num_sets();
  // A copy of f inside the sampled matching stays within f's component but
  // is the only way that matching covers f, so it is taken as well.
  const auto parallel_to_f = [&](EdgeId e) {
    return f != kNoEdge && g.edge(e) == g.edge(f);
  };
  EdgeSet added;
  for (EdgeId e : chosen.edges) {
    if (x[e]) continue;
    if (before.find(g.r_endpoint_node(e)) != before.find(g.t_endpoint_node(e)) ||
        parallel_to_f(e)) {
      added.push_back(e);
    }
  }
  if (step != nullptr) {
    step->scenario = f;
    for (std::size_t i = 0; i < cc.terms.size(); ++i) {
      if (&cc.terms[i].matching == &chosen) step->term = static_cast<int>(i);
    }
    step->matching_hash = hash_matching(chosen);
    step->added = added;
    step->components_before = count_before;
    for (EdgeId e : added) {
      before.unite(g.r_endpoint_node(e), g.t_endpoint_node(e));
    }
    step->components_after = before.num_sets();
  }
  return added;
}

RoundResult solve_lp_round(const RapInstance& inst, const RoundOptions& opts) {
  if (!inst.graph().balanced()) {
    const InstanceMapping map = balanced_completion(inst);
    RoundResult result = solve_lp_round(map.instance, opts);
    result.solution = prune_to_minimal(
        inst, make_solution(inst, map.decode(result.solution.edges)));
    verify_solution(inst, result.solution);
    return result;
  }
  if (const auto failure =
          first_failing_scenario(inst, EdgeMask(inst.num_edges(), true))) {
    throw InfeasibleError(*failure);
  }
  RoundResult result;
  EdgeSet x;
  if (inst.vulnerable().empty()) {
    // Nominal problem: sample one optimal matching of the LP block.
    const FractionalSolution frac = solve_lp(build_lp(inst), opts.lp_method, opts.tolerances);
    result.trace.lp_objective = frac.objective;
    result.trace.lp_iterations = frac.iterations;
    Rng rng(opts.seed);
    const ConvexCombination cc =
        birkhoff_decompose(inst.graph(), kNoEdge, frac.x_for(kNoEdge));
    x = sample(cc, rng).edges;
  } else if (inst.uniform()) {
    x = round_uniform(inst, opts, result.trace);
  } else {
    const InstanceMapping map = uniformize(inst);
    result.trace.uniformized = true;
    x = map.decode(round_uniform(map.instance, opts, result.trace));
  }
  result.solution = prune_to_minimal(inst, make_solution(inst, std::move(x)));
  verify_solution(inst, result.solution);
  return result;
}

}  // namespace rap
