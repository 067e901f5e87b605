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

#include "rap/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include "digraph.hpp"
#include "rap/error.hpp"

namespace rap {

bool Matching::contains(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteMultigraph& g, const EdgeMask& usable)
      : g_(g),
        usable_(usable),
        match_r_(g.num_r(), kNoEdge),
        match_t_(g.num_t(), kNoEdge),
        dist_(g.num_r(), kInf) {}

  Matching run() {
    while (bfs()) {
      for (int r = 0; r < g_.num_r(); ++r) {
        if (match_r_[r] == kNoEdge) dfs(r);
      }
    }
    Matching m;
    for (int r = 0; r < g_.num_r(); ++r) {
      if (match_r_[r] != kNoEdge) m.edges.push_back(match_r_[r]);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

 private:
  // Layers R nodes by alternating distance from the free ones; true if some
  // free T node is reachable.
  bool bfs() {
    std::queue<int> queue;
    for (int r = 0; r < g_.num_r(); ++r) {
      if (match_r_[r] == kNoEdge) {
        dist_[r] = 0;
        queue.push(r);
      } else {
        dist_[r] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int r = queue.front();
      queue.pop();
      for (EdgeId e : g_.r_incident(r)) {
        if (!usable_[e]) continue;
        const EdgeId back = match_t_[g_.edge(e).t];
        if (back == kNoEdge) {
          found = true;
        } else {
          const int next = g_.edge(back).r;
          if (dist_[next] == kInf) {
            dist_[next] = dist_[r] + 1;
            queue.push(next);
          }
        }
      }
    }
    return found;
  }

  bool dfs(int r) {
    for (EdgeId e : g_.r_incident(r)) {
      if (!usable_[e]) continue;
      const int t = g_.edge(e).t;
      const EdgeId back = match_t_[t];
      if (back == kNoEdge ||
          (dist_[g_.edge(back).r] == dist_[r] + 1 && dfs(g_.edge(back).r))) {
        match_r_[r] = e;
        match_t_[t] = e;
        return true;
      }
    }
    dist_[r] = kInf;
    return false;
  }

  const BipartiteMultigraph& g_;
  const EdgeMask& usable_;
  std::vector<EdgeId> match_r_;
  std::vector<EdgeId> match_t_;
  std::vector<int> dist_;
};

}  // namespace

Matching max_matching(const BipartiteMultigraph& g, const EdgeMask& usable) {
  if (static_cast<int>(usable.size()) != g.num_edges()) {
    throw std::invalid_argument("edge mask size mismatch");
  }
  return HopcroftKarp(g, usable).run();
}

Matching max_matching(const BipartiteMultigraph& g, const EdgeSet& forbidden) {
  EdgeMask usable(g.num_edges(), true);
  for (EdgeId e : forbidden) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::invalid_argument("forbidden edge id out of range");
    }
    usable[e] = false;
  }
  return HopcroftKarp(g, usable).run();
}

bool has_perfect_matching(const BipartiteMultigraph& g,
                          const EdgeMask& usable) {
  return g.balanced() && max_matching(g, usable).size() == g.num_r();
}

bool has_pm_avoiding(const BipartiteMultigraph& g, EdgeId f) {
  if (!g.balanced()) throw std::invalid_argument("not balanced");
  if (f < 0 || f >= g.num_edges()) {
    throw std::invalid_argument("edge id out of range");
  }
  return max_matching(g, EdgeSet{f}).size() == g.num_r();
}

namespace internal {

ContractedDigraph contract_matching(const BipartiteMultigraph& g,
                                    const Matching& m) {
  ContractedDigraph d;
  d.num_vertices = g.num_r();
  d.pair_edge.assign(g.num_r(), kNoEdge);
  d.vertex_of_t.assign(g.num_t(), -1);
  EdgeMask matched(g.num_edges(), false);
  for (EdgeId e : m.edges) {
    d.pair_edge[g.edge(e).r] = e;
    d.vertex_of_t[g.edge(e).t] = g.edge(e).r;
    matched[e] = true;
  }
  d.out_arcs.resize(d.num_vertices);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (matched[e]) continue;
    const int from = g.edge(e).r;
    const int to = d.vertex_of_t[g.edge(e).t];
    d.out_arcs[from].push_back(static_cast<int>(d.arcs.size()));
    d.arcs.push_back({from, to, e});
  }
  return d;
}

std::vector<int> strongly_connected_components(const ContractedDigraph& d) {
  const int n = d.num_vertices;
  std::vector<std::vector<int>> in_arcs(n);
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    in_arcs[d.arcs[a].to].push_back(static_cast<int>(a));
  }

  // First pass: finishing order on the forward graph.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < d.out_arcs[v].size()) {
        const int w = d.arcs[d.out_arcs[v][next++]].to;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  // Second pass on the reversed graph in decreasing finishing time.
  std::vector<int> component(n, -1);
  int count = 0;
  std::vector<int> work;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (component[*it] >= 0) continue;
    component[*it] = count;
    work.push_back(*it);
    while (!work.empty()) {
      const int v = work.back();
      work.pop_back();
      for (int a : in_arcs[v]) {
        const int w = d.arcs[a].from;
        if (component[w] < 0) {
          component[w] = count;
          work.push_back(w);
        }
      }
    }
    ++count;
  }
  return component;
}

}  // namespace internal

EdgeSet allowed_edges(const BipartiteMultigraph& g) {
  if (!g.balanced()) throw RapError("no perfect matching");
  const Matching m = max_matching(g);
  if (m.size() != g.num_r()) throw RapError("no perfect matching");
  const internal::ContractedDigraph d = internal::contract_matching(g, m);
  const std::vector<int> scc = internal::strongly_connected_components(d);
  EdgeMask allowed(g.num_edges(), false);
  for (EdgeId e : m.edges) allowed[e] = true;
  for (const internal::Arc& arc : d.arcs) {
    if (scc[arc.from] == scc[arc.to]) allowed[arc.edge] = true;
  }
  return from_mask(allowed);
}

std::vector<GraphComponent> matching_covered_components(
    const BipartiteMultigraph& g) {
  DisjointSets sets(g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    sets.unite(g.r_endpoint_node(e), g.t_endpoint_node(e));
  }
  // Components are ordered by their smallest unified node id.
  std::vector<int> index_of_root(g.num_nodes(), -1);
  std::vector<GraphComponent> components;
  for (int v = 0; v < g.num_nodes(); ++v) {
    const int root = sets.find(v);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[index_of_root[root]].nodes.push_back(v);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    components[index_of_root[sets.find(g.r_endpoint_node(e))]].edges.push_back(
        e);
  }
  for (GraphComponent& c : components) {
    const Subgraph sub = induced_subgraph(g, c.nodes);
    const BipartiteMultigraph& h = sub.graph;
    c.perfectly_matchable =
        h.balanced() && max_matching(h).size() == h.num_r() && h.num_r() > 0;
    c.matching_covered =
        c.perfectly_matchable &&
        static_cast<int>(allowed_edges(h).size()) == h.num_edges();
  }
  return components;
}

}  // namespace rap
