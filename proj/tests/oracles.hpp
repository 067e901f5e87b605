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


// Brute-force reference implementations for the tests. Nothing here calls
// the library's matching, feasibility or solver code; only the data types
// are shared.

#ifndef RAP_TESTS_ORACLES_HPP_
#define RAP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "rap/graph.hpp"
#include "rap/instance.hpp"
#include "rap/rng.hpp"

namespace rap::oracle {

// Return false from the visitor to stop the enumeration.
using MatchingVisitor = std::function<bool(const EdgeSet&)>;

namespace detail {

inline bool saturate(const BipartiteMultigraph& g, const EdgeMask& usable,
                     bool r_side, int i, std::vector<bool>& used, EdgeSet& chosen,
                     const MatchingVisitor& visit) {
  const int n = r_side ? g.num_r() : g.num_t();
  if (i == n) {
    EdgeSet sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    return visit(sorted);
  }
  const auto incident = r_side ? g.r_incident(i) : g.t_incident(i);
  for (EdgeId e : incident) {
    if (!usable[e]) continue;
    const int other = r_side ? g.edge(e).t : g.edge(e).r;
    if (used[other]) continue;
    used[other] = true;
    chosen.push_back(e);
    const bool go_on = saturate(g, usable, r_side, i + 1, used, chosen, visit);
    chosen.pop_back();
    used[other] = false;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

// Every matching that covers the smaller side (for balanced graphs: every
// perfect matching). Parallel edges give distinct matchings.
inline void saturating_matchings(const BipartiteMultigraph& g, const EdgeMask& usable,
                                 const MatchingVisitor& visit) {
  const bool r_side = g.num_r() <= g.num_t();
  std::vector<bool> used(r_side ? g.num_t() : g.num_r(), false);
  EdgeSet chosen;
  detail::saturate(g, usable, r_side, 0, used, chosen, visit);
}

inline std::vector<EdgeSet> perfect_matchings(const BipartiteMultigraph& g,
                                              const EdgeMask& usable) {
  std::vector<EdgeSet> out;
  if (!g.balanced()) return out;
  saturating_matchings(g, usable, [&](const EdgeSet& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

inline std::vector<EdgeSet> perfect_matchings(const BipartiteMultigraph& g) {
  return perfect_matchings(g, EdgeMask(g.num_edges(), true));
}

inline bool has_saturating(const BipartiteMultigraph& g, const EdgeMask& usable) {
  bool found = false;
  saturating_matchings(g, usable, [&](const EdgeSet&) {
    found = true;
    return false;
  });
  return found;
}

// Largest matching, trying every choice (match or skip) at every R node.
inline int max_matching_size(const BipartiteMultigraph& g, const EdgeMask& usable) {
  std::vector<bool> used(g.num_t(), false);
  std::function<int(int)> go = [&](int r) -> int {
    if (r == g.num_r()) return 0;
    int best = go(r + 1);
    for (EdgeId e : g.r_incident(r)) {
      const int t = g.edge(e).t;
      if (!usable[e] || used[t]) continue;
      used[t] = true;
      best = std::max(best, 1 + go(r + 1));
      used[t] = false;
    }
    return best;
  };
  return go(0);
}

inline EdgeSet allowed_edges(const BipartiteMultigraph& g) {
  EdgeMask in_some(g.num_edges(), false);
  for (const EdgeSet& m : perfect_matchings(g)) {
    for (EdgeId e : m) in_some[e] = true;
  }
  return from_mask(in_some);
}

// X \ {f} saturates the smaller side for every vulnerable f; with F empty,
// X itself must. This is the defining condition, also for unbalanced graphs.
inline bool feasible(const RapInstance& inst, const EdgeMask& x) {
  const BipartiteMultigraph& g = inst.graph();
  if (inst.vulnerable().empty()) return has_saturating(g, x);
  EdgeMask without = x;
  for (EdgeId f : inst.vulnerable()) {
    const bool had = without[f];
    without[f] = false;
    const bool ok = has_saturating(g, without);
    without[f] = had;
    if (!ok) return false;
  }
  return true;
}

inline bool feasible(const RapInstance& inst, const EdgeSet& x) {
  return feasible(inst, to_mask(inst.num_edges(), x));
}

// Cheapest feasible subset over all 2^m subsets; nullopt if E is infeasible.
inline std::optional<double> optimum(const RapInstance& inst) {
  const int m = inst.num_edges();
  std::optional<double> best;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    double cost = 0.0;
    EdgeMask x(m, false);
    for (int e = 0; e < m; ++e) {
      if ((bits >> e) & 1) {
        x[e] = true;
        cost += inst.cost(e);
      }
    }
    if (best && cost >= *best) continue;
    if (feasible(inst, x)) best = cost;
  }
  return best;
}

inline std::optional<double> min_cost_perfect_matching(const RapInstance& inst) {
  std::optional<double> best;
  for (const EdgeSet& m : perfect_matchings(inst.graph())) {
    double cost = 0.0;
    for (EdgeId e : m) cost += inst.cost(e);
    if (!best || cost < *best) best = cost;
  }
  return best;
}

// Feasible, and dropping any single edge breaks feasibility.
inline bool minimal_feasible(const RapInstance& inst, const EdgeSet& x) {
  EdgeMask mask = to_mask(inst.num_edges(), x);
  if (!feasible(inst, mask)) return false;
  for (EdgeId e : x) {
    mask[e] = false;
    const bool still = feasible(inst, mask);
    mask[e] = true;
    if (still) return false;
  }
  return true;
}

// Connected components of (R u T, edges) as lists of unified node ids.
inline std::vector<std::vector<int>> components(const BipartiteMultigraph& g,
                                                const EdgeSet& edges) {
  std::vector<std::vector<int>> adj(g.num_nodes());
  for (EdgeId e : edges) {
    const int a = g.r_endpoint_node(e);
    const int b = g.t_endpoint_node(e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> comp(g.num_nodes(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.num_nodes(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack = {s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// Every edge of the component lies in a perfect matching of the component,
// and the component has one. Components are built by hand from `edges`.
inline bool component_matching_covered(const BipartiteMultigraph& g,
                                       const EdgeSet& edges,
                                       const std::vector<int>& nodes) {
  std::vector<int> r_index(g.num_r(), -1);
  std::vector<int> t_index(g.num_t(), -1);
  int nr = 0;
  int nt = 0;
  for (int v : nodes) {
    if (g.is_r_node(v)) {
      r_index[v] = nr++;
    } else {
      t_index[v - g.num_r()] = nt++;
    }
  }
  std::vector<Edge> local;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    if (r_index[ed.r] >= 0 && t_index[ed.t] >= 0) {
      local.push_back({r_index[ed.r], t_index[ed.t]});
    }
  }
  if (nr != nt) return false;
  const BipartiteMultigraph sub(nr, nt, local);
  const std::vector<EdgeSet> pms = perfect_matchings(sub);
  if (pms.empty()) return false;
  return static_cast<int>(oracle::allowed_edges(sub).size()) == sub.num_edges();
}

// Shortest nice s-t path in h (s a T index, t an R index): a simple path
// whose removal leaves a perfectly matchable graph. Returns its node count.
inline std::optional<int> shortest_nice_path(const BipartiteMultigraph& h, int s,
                                             int t) {
  const int start = h.t_node(s);
  const int target = h.r_node(t);
  std::vector<bool> on_path(h.num_nodes(), false);
  std::optional<int> best;
  auto complement_matchable = [&] {
    std::vector<int> keep;
    for (int v = 0; v < h.num_nodes(); ++v) {
      if (!on_path[v]) keep.push_back(v);
    }
    if (keep.empty()) return true;
    EdgeSet inside;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (!on_path[h.r_endpoint_node(e)] && !on_path[h.t_endpoint_node(e)]) {
        inside.push_back(e);
      }
    }
    std::vector<int> r_index(h.num_r(), -1);
    std::vector<int> t_index(h.num_t(), -1);
    int nr = 0;
    int nt = 0;
    for (int v : keep) {
      if (h.is_r_node(v)) {
        r_index[v] = nr++;
      } else {
        t_index[v - h.num_r()] = nt++;
      }
    }
    if (nr != nt) return false;
    std::vector<Edge> local;
    for (EdgeId e : inside) {
      local.push_back({r_index[h.edge(e).r], t_index[h.edge(e).t]});
    }
    const BipartiteMultigraph sub(nr, nt, local);
    return has_saturating(sub, EdgeMask(sub.num_edges(), true));
  };
  std::function<void(int, int)> dfs = [&](int v, int count) {
    if (v == target) {
      if ((!best || count < *best) && complement_matchable()) best = count;
      return;
    }
    for (EdgeId e : h.incident(v)) {
      const int w = h.opposite(e, v);
      if (on_path[w]) continue;
      on_path[w] = true;
      dfs(w, count + 1);
      on_path[w] = false;
    }
  };
  on_path[start] = true;
  dfs(start, 1);
  return best;
}

// A random bipartite graph; each pair gets an edge with probability p, and a
// parallel copy with probability `parallel`.
inline BipartiteMultigraph random_graph(Rng& rng, int nr, int nt, double p,
                                        double parallel = 0.0) {
  std::vector<Edge> edges;
  for (int r = 0; r < nr; ++r) {
    for (int t = 0; t < nt; ++t) {
      if (!rng.bernoulli(p)) continue;
      edges.push_back({r, t});
      if (rng.bernoulli(parallel)) edges.push_back({r, t});
    }
  }
  return BipartiteMultigraph(nr, nt, std::move(edges));
}

}  // namespace rap::oracle

#endif  // RAP_TESTS_ORACLES_HPP_
