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

#include "rap/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rap {

BipartiteMultigraph::BipartiteMultigraph(int num_r, int num_t,
                                         std::vector<Edge> edges)
    : num_r_(num_r), num_t_(num_t), edges_(std::move(edges)) {
  if (num_r < 0 || num_t < 0) {
    throw std::invalid_argument("negative node count");
  }
  std::vector<int> degree(num_nodes() + 1, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.r < 0 || edge.r >= num_r_ || edge.t < 0 || edge.t >= num_t_) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " has an endpoint out of range");
    }
    ++degree[edge.r];
    ++degree[num_r_ + edge.t];
  }
  offsets_.assign(num_nodes() + 1, 0);
  for (int v = 0; v < num_nodes(); ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Ascending edge id within each list follows from the insertion order.
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[fill[edges_[e].r]++] = static_cast<EdgeId>(e);
    adjacency_[fill[num_r_ + edges_[e].t]++] = static_cast<EdgeId>(e);
  }
}

Subgraph edge_subgraph(const BipartiteMultigraph& g, const EdgeSet& edges) {
  Subgraph sub;
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (EdgeId e : edges) {
    kept.push_back(g.edge(e));
    sub.edge_to_parent.push_back(e);
  }
  sub.r_to_parent.resize(g.num_r());
  std::iota(sub.r_to_parent.begin(), sub.r_to_parent.end(), 0);
  sub.t_to_parent.resize(g.num_t());
  std::iota(sub.t_to_parent.begin(), sub.t_to_parent.end(), 0);
  sub.graph = BipartiteMultigraph(g.num_r(), g.num_t(), std::move(kept));
  return sub;
}

Subgraph induced_subgraph(const BipartiteMultigraph& g,
                          const std::vector<int>& nodes) {
  Subgraph sub;
  std::vector<int> local(g.num_nodes(), -1);
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    if (g.is_r_node(v)) {
      local[v] = static_cast<int>(sub.r_to_parent.size());
      sub.r_to_parent.push_back(v);
    } else {
      local[v] = static_cast<int>(sub.t_to_parent.size());
      sub.t_to_parent.push_back(v - g.num_r());
    }
  }
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int a = g.r_endpoint_node(e);
    const int b = g.t_endpoint_node(e);
    if (local[a] >= 0 && local[b] >= 0) {
      kept.push_back({local[a], local[b]});
      sub.edge_to_parent.push_back(e);
    }
  }
  sub.graph =
      BipartiteMultigraph(static_cast<int>(sub.r_to_parent.size()),
                          static_cast<int>(sub.t_to_parent.size()),
                          std::move(kept));
  return sub;
}

EdgeMask to_mask(int num_edges, const EdgeSet& edges) {
  EdgeMask mask(num_edges, false);
  for (EdgeId e : edges) mask[e] = true;
  return mask;
}

EdgeSet from_mask(const EdgeMask& mask) {
  EdgeSet out;
  for (std::size_t e = 0; e < mask.size(); ++e) {
    if (mask[e]) out.push_back(static_cast<EdgeId>(e));
  }
  return out;
}

EdgeSet all_edges(const BipartiteMultigraph& g) {
  EdgeSet out(g.num_edges());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

DisjointSets::DisjointSets(int n) : parent_(n), size_(n, 1), num_sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --num_sets_;
  return true;
}

}  // namespace rap
