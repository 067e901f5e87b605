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

#include "rap/instance.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "rap/error.hpp"

namespace rap {

RapInstance::RapInstance(BipartiteMultigraph graph, EdgeSet vulnerable,
                         std::vector<double> costs)
    : graph_(std::move(graph)),
      vulnerable_(std::move(vulnerable)),
      costs_(std::move(costs)) {
  if (static_cast<int>(costs_.size()) != graph_.num_edges()) {
    throw std::invalid_argument("cost vector length differs from edge count");
  }
  for (double c : costs_) {
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument("costs must be finite and non-negative");
    }
  }
  std::sort(vulnerable_.begin(), vulnerable_.end());
  vulnerable_.erase(std::unique(vulnerable_.begin(), vulnerable_.end()),
                    vulnerable_.end());
  for (EdgeId f : vulnerable_) {
    if (f < 0 || f >= graph_.num_edges()) {
      throw std::invalid_argument("vulnerable edge id out of range");
    }
  }
  vulnerable_mask_ = to_mask(graph_.num_edges(), vulnerable_);
}

double RapInstance::cost_of(const EdgeSet& edges) const {
  double total = 0.0;
  for (EdgeId e : edges) total += costs_[e];
  return total;
}

bool RapInstance::unit_costs() const {
  return std::all_of(costs_.begin(), costs_.end(),
                     [](double c) { return c == 1.0; });
}

Solution make_solution(const RapInstance& inst, EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (EdgeId e : edges) {
    if (e < 0 || e >= inst.num_edges()) {
      throw std::invalid_argument("solution edge id " + std::to_string(e) +
                                  " out of range");
    }
  }
  Solution s;
  s.cost = inst.cost_of(edges);
  s.edges = std::move(edges);
  return s;
}

namespace {

// Given a perfect matching (as per-node matched edges) inside `x` and a
// matched edge f, looks for an alternating path in X \ {f} between the two
// nodes f leaves exposed; returns the repaired matching if one exists.
std::optional<Matching> repair_without(const BipartiteMultigraph& g,
                                       const EdgeMask& x,
                                       const std::vector<EdgeId>& match_r,
                                       const std::vector<EdgeId>& match_t,
                                       EdgeId f) {
  const int source = g.edge(f).r;
  const int target = g.edge(f).t;
  // BFS over R nodes; parent_edge[r] is the non-matching edge used to reach
  // the T node matched to r.
  std::vector<EdgeId> parent_edge(g.num_r(), kNoEdge);
  std::vector<char> seen(g.num_r(), 0);
  std::queue<int> queue;
  seen[source] = 1;
  queue.push(source);
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop();
    for (EdgeId e : g.r_incident(r)) {
      if (!x[e] || e == f || e == match_r[r]) continue;
      const int t = g.edge(e).t;
      if (t == target) {
        std::vector<EdgeId> path = {e};
        int cur = r;
        while (cur != source) {
          const EdgeId in = parent_edge[cur];
          path.push_back(match_r[cur]);
          path.push_back(in);
          cur = g.edge(in).r;
        }
        EdgeMask in_m(g.num_edges(), false);
        for (int rr = 0; rr < g.num_r(); ++rr) in_m[match_r[rr]] = true;
        in_m[f] = false;
        for (EdgeId p : path) in_m[p] = !in_m[p];
        Matching repaired;
        repaired.edges = from_mask(in_m);
        return repaired;
      }
      const EdgeId back = match_t[t];
      const int next = g.edge(back).r;
      if (!seen[next]) {
        seen[next] = 1;
        parent_edge[next] = e;
        queue.push(next);
      }
    }
  }
  return std::nullopt;
}

// Shared engine for feasibility checks; fills `cert` when non-null.
std::optional<EdgeId> find_failure(const RapInstance& inst, const EdgeMask& x,
                                   Certificate* cert) {
  const BipartiteMultigraph& g = inst.graph();
  if (!g.balanced()) {
    throw std::invalid_argument("apply balanced_completion first");
  }
  if (static_cast<int>(x.size()) != g.num_edges()) {
    throw std::invalid_argument("edge mask size mismatch");
  }
  const Matching base = max_matching(g, x);
  if (base.size() != g.num_r()) {
    if (inst.vulnerable().empty()) return kNoEdge;
    return inst.vulnerable().front();
  }
  if (inst.vulnerable().empty()) {
    if (cert != nullptr) cert->matchings[kNoEdge] = base;
    return std::nullopt;
  }
  std::vector<EdgeId> match_r(g.num_r());
  std::vector<EdgeId> match_t(g.num_t());
  for (EdgeId e : base.edges) {
    match_r[g.edge(e).r] = e;
    match_t[g.edge(e).t] = e;
  }
  for (EdgeId f : inst.vulnerable()) {
    if (!x[f] || !base.contains(f)) {
      if (cert != nullptr) cert->matchings[f] = base;
      continue;
    }
    std::optional<Matching> repaired = repair_without(g, x, match_r, match_t, f);
    if (!repaired) return f;
    if (cert != nullptr) cert->matchings[f] = std::move(*repaired);
  }
  return std::nullopt;
}

}  // namespace

bool check_feasible(const RapInstance& inst) {
  return !find_failure(inst, EdgeMask(inst.num_edges(), true), nullptr);
}

bool is_feasible(const RapInstance& inst, const EdgeMask& x) {
  return !find_failure(inst, x, nullptr);
}

std::optional<EdgeId> first_failing_scenario(const RapInstance& inst,
                                             const EdgeMask& x) {
  return find_failure(inst, x, nullptr);
}

Certificate verify_solution(const RapInstance& inst, const Solution& x) {
  for (EdgeId e : x.edges) {
    if (e < 0 || e >= inst.num_edges()) {
      throw std::invalid_argument("solution edge id out of range");
    }
  }
  Certificate cert;
  if (!inst.graph().balanced()) {
    const InstanceMapping map = balanced_completion(inst);
    const EdgeMask mask = to_mask(map.instance.num_edges(), map.encode(x.edges));
    if (const auto failure = find_failure(map.instance, mask, &cert)) {
      throw InfeasibleError(*failure);
    }
    return cert;
  }
  const std::optional<EdgeId> failure =
      find_failure(inst, to_mask(inst.num_edges(), x.edges), &cert);
  if (failure) throw InfeasibleError(*failure);
  return cert;
}

Solution prune_to_minimal(const RapInstance& inst, const Solution& x) {
  verify_solution(inst, x);
  std::vector<EdgeId> order = x.edges;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (inst.cost(a) != inst.cost(b)) return inst.cost(a) > inst.cost(b);
    return a > b;
  });
  // Unbalanced inputs are pruned inside their completion, where the dummy
  // edges stay in place throughout.
  const bool balanced = inst.graph().balanced();
  const InstanceMapping map =
      balanced ? InstanceMapping{} : balanced_completion(inst);
  const RapInstance& work = balanced ? inst : map.instance;
  const auto image = [&](EdgeId e) { return balanced ? e : map.forward[e]; };
  EdgeMask keep = to_mask(work.num_edges(),
                          balanced ? x.edges : map.encode(x.edges));
  // One pass suffices: by monotonicity an edge that cannot be dropped now
  // cannot be dropped from any subset either.
  for (EdgeId e : order) {
    keep[image(e)] = false;
    if (!is_feasible(work, keep)) keep[image(e)] = true;
  }
  EdgeSet kept;
  for (EdgeId e : x.edges) {
    if (keep[image(e)]) kept.push_back(e);
  }
  return make_solution(inst, std::move(kept));
}

EdgeSet InstanceMapping::encode(const EdgeSet& original) const {
  EdgeSet out = encode_always;
  for (EdgeId e : original) {
    out.push_back(forward[e]);
    for (EdgeId c : encode_companions[e]) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeSet InstanceMapping::decode(const EdgeSet& transformed) const {
  EdgeSet out;
  for (EdgeId e : transformed) {
    if (backward[e] != kNoEdge) out.push_back(backward[e]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeSet InstanceMapping::added_edges() const {
  EdgeSet out;
  for (std::size_t e = 0; e < backward.size(); ++e) {
    const EdgeId orig = backward[e];
    if (orig == kNoEdge || forward[orig] != static_cast<EdgeId>(e)) {
      out.push_back(static_cast<EdgeId>(e));
    }
  }
  return out;
}

RapInstance swap_sides(const RapInstance& inst) {
  const BipartiteMultigraph& g = inst.graph();
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back({e.t, e.r});
  return RapInstance(BipartiteMultigraph(g.num_t(), g.num_r(), std::move(edges)),
                     inst.vulnerable(), inst.costs());
}

namespace {

InstanceMapping identity_mapping(RapInstance inst) {
  InstanceMapping map;
  const int m = inst.num_edges();
  map.forward.resize(m);
  map.backward.resize(m);
  for (EdgeId e = 0; e < m; ++e) map.forward[e] = map.backward[e] = e;
  map.encode_companions.assign(m, {});
  map.instance = std::move(inst);
  return map;
}

}  // namespace

InstanceMapping balanced_completion(const RapInstance& inst) {
  const bool swap = inst.graph().num_t() > inst.graph().num_r();
  InstanceMapping map = identity_mapping(swap ? swap_sides(inst) : inst);
  map.swapped_sides = swap;
  const BipartiteMultigraph& g = map.instance.graph();
  const int dummies = g.num_r() - g.num_t();
  if (dummies == 0) return map;

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<double> costs = map.instance.costs();
  for (int d = 0; d < dummies; ++d) {
    for (int r = 0; r < g.num_r(); ++r) {
      map.encode_always.push_back(static_cast<EdgeId>(edges.size()));
      map.backward.push_back(kNoEdge);
      edges.push_back({r, g.num_t() + d});
      costs.push_back(0.0);
    }
  }
  map.instance = RapInstance(
      BipartiteMultigraph(g.num_r(), g.num_r(), std::move(edges)),
      map.instance.vulnerable(), std::move(costs));
  return map;
}

InstanceMapping uniformize(const RapInstance& inst) {
  InstanceMapping map = identity_mapping(inst);
  if (inst.uniform()) return map;
  const BipartiteMultigraph& g = inst.graph();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<double> costs = inst.costs();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (inst.is_vulnerable(e)) continue;
    const auto copy = static_cast<EdgeId>(edges.size());
    map.encode_companions[e].push_back(copy);
    map.backward.push_back(e);
    edges.push_back(g.edge(e));
    costs.push_back(inst.cost(e));
  }
  EdgeSet everything(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    everything[e] = static_cast<EdgeId>(e);
  }
  map.instance =
      RapInstance(BipartiteMultigraph(g.num_r(), g.num_t(), std::move(edges)),
                  std::move(everything), std::move(costs));
  return map;
}

}  // namespace rap
