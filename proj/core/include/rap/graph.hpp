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

#ifndef RAP_GRAPH_HPP_
#define RAP_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace rap {

using EdgeId = std::int32_t;

// Sentinel for "no edge". Also used as the certificate key of the nominal
// scenario when an instance has no vulnerable edges.
inline constexpr EdgeId kNoEdge = -1;

// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;

// Dense membership flags indexed by edge id.
using EdgeMask = std::vector<bool>;

struct Edge {
  int r = 0;
  int t = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A bipartite multigraph with node sides R and T.
//
// Edge ids are positions in the edge list and never change. Parallel edges are
// kept as distinct ids. Nodes have a unified numbering used by component and
// digraph helpers: R nodes occupy [0, num_r) and T nodes [num_r, num_r+num_t).
class BipartiteMultigraph {
 public:
  BipartiteMultigraph() = default;

  // Throws std::invalid_argument if an endpoint is out of range.
  BipartiteMultigraph(int num_r, int num_t, std::vector<Edge> edges);

  int num_r() const { return num_r_; }
  int num_t() const { return num_t_; }
  int num_nodes() const { return num_r_ + num_t_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool balanced() const { return num_r_ == num_t_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  // Incident edge ids in ascending order.
  std::span<const EdgeId> r_incident(int r) const { return incident(r); }
  std::span<const EdgeId> t_incident(int t) const {
    return incident(num_r_ + t);
  }
  std::span<const EdgeId> incident(int node) const {
    return {adjacency_.data() + offsets_[node],
            adjacency_.data() + offsets_[node + 1]};
  }

  int r_node(int r) const { return r; }
  int t_node(int t) const { return num_r_ + t; }
  bool is_r_node(int node) const { return node < num_r_; }
  int r_endpoint_node(EdgeId e) const { return edges_[e].r; }
  int t_endpoint_node(EdgeId e) const { return num_r_ + edges_[e].t; }

  // The endpoint of `e` that is not `node`.
  int opposite(EdgeId e, int node) const {
    const int a = r_endpoint_node(e);
    return a == node ? t_endpoint_node(e) : a;
  }

 private:
  int num_r_ = 0;
  int num_t_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_ = {0};
  std::vector<EdgeId> adjacency_;
};

// A subgraph with its own dense numbering plus maps back to the parent.
struct Subgraph {
  BipartiteMultigraph graph;
  std::vector<EdgeId> edge_to_parent;
  std::vector<int> r_to_parent;
  std::vector<int> t_to_parent;
};

// Keeps every node of `g` and only the edges of `edges` (renumbered in
// ascending parent id order).
Subgraph edge_subgraph(const BipartiteMultigraph& g, const EdgeSet& edges);

// The subgraph induced by a set of unified node ids.
Subgraph induced_subgraph(const BipartiteMultigraph& g,
                          const std::vector<int>& nodes);

EdgeMask to_mask(int num_edges, const EdgeSet& edges);
EdgeSet from_mask(const EdgeMask& mask);
EdgeSet all_edges(const BipartiteMultigraph& g);

// Union-find with path compression and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);

  int find(int x);
  // Returns false if `a` and `b` were already joined.
  bool unite(int a, int b);
  int size_of(int x) { return size_[find(x)]; }
  int num_sets() const { return num_sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int num_sets_ = 0;
};

}  // namespace rap

#endif  // RAP_GRAPH_HPP_
