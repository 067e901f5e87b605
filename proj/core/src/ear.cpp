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

#include "rap/ear.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "digraph.hpp"
#include "rap/error.hpp"
#include "rap/matching.hpp"
#include "rap/rng.hpp"

namespace rap {

int EarDecomposition::nontrivial_count() const {
  return static_cast<int>(std::count_if(
      ears.begin() + (ears.empty() ? 0 : 1), ears.end(),
      [](const Ear& ear) { return !ear.trivial; }));
}

EdgeSet EarDecomposition::kept_edges() const {
  EdgeSet out;
  for (std::size_t i = 0; i < ears.size(); ++i) {
    if (i > 0 && ears[i].trivial) continue;
    out.insert(out.end(), ears[i].path.begin(), ears[i].path.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

EarOptions parse_ear_order(const std::string& text) {
  if (text == "lowest") return {};
  const std::string prefix = "random:";
  if (text.rfind(prefix, 0) == 0) {
    EarOptions opts;
    opts.random = true;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, opts.seed);
    if (ec == std::errc() && ptr == last && first != last) return opts;
  }
  throw std::invalid_argument("ear order must be 'lowest' or 'random:<seed>'");
}

namespace {

class EarBuilder {
 public:
  EarBuilder(const internal::ContractedDigraph& d, std::vector<int> rank)
      : d_(d), rank_(std::move(rank)) {
    by_rank_.resize(d.arcs.size());
    for (std::size_t a = 0; a < d.arcs.size(); ++a) by_rank_[rank_[a]] = a;
    out_.resize(d.num_vertices);
    for (int v = 0; v < d.num_vertices; ++v) {
      out_[v] = d.out_arcs[v];
      std::sort(out_[v].begin(), out_[v].end(),
                [&](int a, int b) { return rank_[a] < rank_[b]; });
    }
    used_.assign(d.arcs.size(), 0);
    in_graph_.assign(d.num_vertices, 0);
  }

  std::vector<Ear> build(EdgeId start) {
    std::vector<Ear> ears;
    ears.push_back({{start}, false});
    const int v0 = find_vertex(start);
    in_graph_[v0] = 1;
    int remaining = d_.num_vertices - 1;
    for (int a : out_[v0]) {
      if (d_.arcs[a].to != v0) {
        ears.push_back(grow(a, remaining));
        break;
      }
    }
    while (remaining > 0) {
      int next = -1;
      for (std::size_t a : by_rank_) {
        const internal::Arc& arc = d_.arcs[a];
        if (!used_[a] && in_graph_[arc.from] && !in_graph_[arc.to]) {
          next = static_cast<int>(a);
          break;
        }
      }
      if (next < 0) throw RapError("not matching-covered");
      ears.push_back(grow(next, remaining));
    }
    for (std::size_t a : by_rank_) {
      if (!used_[a]) ears.push_back({{d_.arcs[a].edge}, true});
    }
    return ears;
  }

 private:
  int find_vertex(EdgeId matched) const {
    for (int v = 0; v < d_.num_vertices; ++v) {
      if (d_.pair_edge[v] == matched) return v;
    }
    throw std::logic_error("start edge is not matched");
  }

  // Directed ear starting with arc `first`, extended through new vertices
  // until it re-enters the current graph, expanded to the bipartite path.
  Ear grow(int first, int& remaining) {
    std::vector<int> arcs = {first};
    const int head = d_.arcs[first].to;
    if (!in_graph_[head]) {
      seen_.assign(d_.num_vertices, 0);
      seen_[head] = 1;
      if (!search(head, arcs)) throw RapError("not matching-covered");
    }
    Ear ear;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const internal::Arc& arc = d_.arcs[arcs[i]];
      used_[arcs[i]] = 1;
      ear.path.push_back(arc.edge);
      if (i + 1 < arcs.size()) {
        ear.path.push_back(d_.pair_edge[arc.to]);
        in_graph_[arc.to] = 1;
        --remaining;
      }
    }
    ear.trivial = ear.path.size() == 1;
    return ear;
  }

  // Prefers continuing through new vertices, which yields long ears.
  bool search(int v, std::vector<int>& arcs) {
    for (int a : out_[v]) {
      const int w = d_.arcs[a].to;
      if (in_graph_[w] || seen_[w]) continue;
      seen_[w] = 1;
      arcs.push_back(a);
      if (search(w, arcs)) return true;
      arcs.pop_back();
    }
    for (int a : out_[v]) {
      if (in_graph_[d_.arcs[a].to]) {
        arcs.push_back(a);
        return true;
      }
    }
    return false;
  }

  const internal::ContractedDigraph& d_;
  std::vector<int> rank_;
  std::vector<std::size_t> by_rank_;
  std::vector<std::vector<int>> out_;
  std::vector<char> used_;
  std::vector<char> in_graph_;
  std::vector<char> seen_;
};

}  // namespace

EarDecomposition ear_decomposition(const BipartiteMultigraph& g,
                                   const EarOptions& opts) {
  const std::vector<GraphComponent> comps = matching_covered_components(g);
  if (g.num_edges() == 0 || comps.size() != 1 || !comps[0].matching_covered) {
    throw RapError("not matching-covered");
  }
  // A perfect matching through the start edge.
  const EdgeId start = 0;
  EdgeMask usable(g.num_edges(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    usable[e] = g.edge(e).r != g.edge(start).r && g.edge(e).t != g.edge(start).t;
  }
  Matching m = max_matching(g, usable);
  m.edges.push_back(start);
  std::sort(m.edges.begin(), m.edges.end());
  if (!m.perfect_in(g)) throw RapError("not matching-covered");

  const internal::ContractedDigraph d = internal::contract_matching(g, m);
  std::vector<int> rank(d.arcs.size());
  std::iota(rank.begin(), rank.end(), 0);
  if (opts.random) {
    Rng rng(opts.seed);
    rng.shuffle(rank);
  }
  EarDecomposition dec;
  dec.ears = EarBuilder(d, std::move(rank)).build(start);
  return dec;
}

void EarResult::write_decomposition(std::ostream& out) const {
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& ears = components[c].ears;
    for (std::size_t i = 0; i < ears.size(); ++i) {
      out << "component " << c << " ear " << i
          << (i > 0 && ears[i].trivial ? " trivial" : "") << " :";
      for (EdgeId e : ears[i].path) out << ' ' << e;
      out << '\n';
    }
  }
}

EarResult solve_ear(const RapInstance& inst, const EarOptions& opts) {
  const bool balanced = inst.graph().balanced();
  const InstanceMapping map =
      balanced ? InstanceMapping{} : balanced_completion(inst);
  const RapInstance& work = balanced ? inst : map.instance;
  const BipartiteMultigraph& g = work.graph();
  if (const auto failure =
          first_failing_scenario(work, EdgeMask(work.num_edges(), true))) {
    throw InfeasibleError(*failure);
  }

  const Subgraph allowed = edge_subgraph(g, allowed_edges(g));
  EarResult result;
  EdgeSet chosen;
  for (const GraphComponent& comp : matching_covered_components(allowed.graph)) {
    const Subgraph part = induced_subgraph(allowed.graph, comp.nodes);
    const auto to_work = [&](EdgeId e) {
      return allowed.edge_to_parent[part.edge_to_parent[e]];
    };
    EarDecomposition dec = ear_decomposition(part.graph, opts);
    for (Ear& ear : dec.ears) {
      for (EdgeId& e : ear.path) e = to_work(e);
    }
    if (part.graph.num_r() == 1) {
      // Parallel edges between two nodes: one invulnerable edge suffices,
      // otherwise two are needed.
      EdgeSet edges;
      for (EdgeId e = 0; e < part.graph.num_edges(); ++e) {
        edges.push_back(to_work(e));
      }
      std::sort(edges.begin(), edges.end());
      const auto safe = std::find_if(edges.begin(), edges.end(), [&](EdgeId e) {
        return !work.is_vulnerable(e);
      });
      if (safe != edges.end()) {
        chosen.push_back(*safe);
      } else {
        chosen.insert(chosen.end(), edges.begin(),
                      edges.begin() + std::min<std::size_t>(2, edges.size()));
      }
    } else {
      const EdgeSet kept = dec.kept_edges();
      chosen.insert(chosen.end(), kept.begin(), kept.end());
    }
    result.components.push_back(std::move(dec));
  }
  std::sort(chosen.begin(), chosen.end());
  result.solution = make_solution(inst, balanced ? chosen : map.decode(chosen));
  verify_solution(inst, result.solution);
  return result;
}

}  // namespace rap
