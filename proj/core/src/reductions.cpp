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

#include "rap/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "rap/error.hpp"
#include "rap/rng.hpp"

namespace rap {

void SetCoverInstance::validate() const {
  if (k < 0) throw std::invalid_argument("negative ground set size");
  std::vector<char> covered(k + 1, 0);
  for (const auto& set : sets) {
    for (int elem : set) {
      if (elem < 1 || elem > k) {
        throw std::invalid_argument("set element out of range");
      }
      covered[elem] = 1;
    }
  }
  for (int s = 1; s <= k; ++s) {
    if (!covered[s]) {
      throw std::invalid_argument("element " + std::to_string(s) +
                                  " is in no set");
    }
  }
}

bool SetCoverInstance::covers(const std::vector<int>& chosen) const {
  std::vector<char> covered(k + 1, 0);
  for (int j : chosen) {
    for (int elem : sets.at(j)) covered[elem] = 1;
  }
  return std::all_of(covered.begin() + 1, covered.end(),
                     [](char c) { return c != 0; });
}

int SetCoverInstance::min_cover_size() const {
  const int l = static_cast<int>(sets.size());
  if (l > 20) throw std::invalid_argument("too many sets to enumerate");
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    const int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    std::vector<int> chosen;
    for (int j = 0; j < l; ++j) {
      if (mask & (1u << j)) chosen.push_back(j);
    }
    if (covers(chosen)) best = size;
  }
  return best;
}

CoverVariant parse_cover_variant(const std::string& name) {
  if (name == "basic") return CoverVariant::kBasic;
  if (name == "uniform_weighted") return CoverVariant::kUniformWeighted;
  if (name == "uniform_card") return CoverVariant::kUniformCard;
  throw std::invalid_argument("unknown set cover variant '" + name + "'");
}

std::string to_string(CoverVariant variant) {
  switch (variant) {
    case CoverVariant::kBasic:
      return "basic";
    case CoverVariant::kUniformWeighted:
      return "uniform_weighted";
    case CoverVariant::kUniformCard:
      return "uniform_card";
  }
  return "?";
}

std::string EdgeRole::label() const {
  return "E" + std::to_string(edge_class) + (gadget ? "/gadget" : "");
}

int ReducedInstance::forced_edge_count() const {
  return static_cast<int>(std::count_if(
      roles.begin(), roles.end(), [](const EdgeRole& role) {
        return role.edge_class == 1 || role.edge_class == 3 ||
               role.edge_class == 5;
      }));
}

std::vector<std::string> ReducedInstance::edge_comments() const {
  std::vector<std::string> out;
  const BipartiteMultigraph& g = rap.graph();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out.push_back(roles[e].label() + " " + r_labels[g.edge(e).r] + "-" +
                  t_labels[g.edge(e).t]);
  }
  return out;
}

std::vector<std::string> ReducedInstance::header_comments() const {
  std::vector<std::string> out;
  out.push_back("set cover reduction, variant " + to_string(variant) +
                ", k=" + std::to_string(k) +
                ", sets=" + std::to_string(indicator.size()));
  std::string r = "R nodes:";
  for (std::size_t i = 0; i < r_labels.size(); ++i) {
    r += " " + std::to_string(i) + "=" + r_labels[i];
  }
  std::string t = "T nodes:";
  for (std::size_t i = 0; i < t_labels.size(); ++i) {
    t += " " + std::to_string(i) + "=" + t_labels[i];
  }
  out.push_back(r);
  out.push_back(t);
  return out;
}

namespace {

class ReductionBuilder {
 public:
  int add_r(std::string label) {
    r_labels_.push_back(std::move(label));
    return static_cast<int>(r_labels_.size()) - 1;
  }
  int add_t(std::string label) {
    t_labels_.push_back(std::move(label));
    return static_cast<int>(t_labels_.size()) - 1;
  }
  EdgeId add_edge(int r, int t, EdgeRole role) {
    edges_.push_back({r, t});
    roles_.push_back(role);
    return static_cast<EdgeId>(edges_.size()) - 1;
  }

  // Replaces {v, w} (v on R, w on T) by the two paths v-x1-x2-w and
  // v-y1-y2-w, x1/y1 on T and x2/y2 on R.
  void add_six_cycle(int v, int w, int edge_class, const std::string& tag) {
    const EdgeRole role{edge_class, true};
    const int x1 = add_t("x1" + tag);
    const int x2 = add_r("x2" + tag);
    const int y1 = add_t("y1" + tag);
    const int y2 = add_r("y2" + tag);
    add_edge(v, x1, role);
    add_edge(x2, x1, role);
    add_edge(x2, w, role);
    add_edge(v, y1, role);
    add_edge(y2, y1, role);
    add_edge(y2, w, role);
  }

  ReducedInstance finish(CoverVariant variant, int k,
                         std::vector<EdgeId> indicator) {
    ReducedInstance ri;
    ri.variant = variant;
    ri.k = k;
    const int m = static_cast<int>(edges_.size());
    std::vector<double> costs(m, 0.0);
    EdgeSet vulnerable;
    for (EdgeId e = 0; e < m; ++e) {
      const EdgeRole& role = roles_[e];
      if (variant == CoverVariant::kUniformCard) {
        costs[e] = 1.0;
      } else if (role.edge_class == 4) {
        costs[e] = 1.0;
      }
      if (variant != CoverVariant::kBasic || role.edge_class == 1) {
        vulnerable.push_back(e);
      }
    }
    const int num_r = static_cast<int>(r_labels_.size());
    const int num_t = static_cast<int>(t_labels_.size());
    ri.rap = RapInstance(BipartiteMultigraph(num_r, num_t, std::move(edges_)),
                         std::move(vulnerable), std::move(costs));
    ri.roles = std::move(roles_);
    ri.indicator = std::move(indicator);
    ri.r_labels = std::move(r_labels_);
    ri.t_labels = std::move(t_labels_);
    return ri;
  }

 private:
  std::vector<std::string> r_labels_;
  std::vector<std::string> t_labels_;
  std::vector<Edge> edges_;
  std::vector<EdgeRole> roles_;
};

}  // namespace

ReducedInstance from_set_cover(const SetCoverInstance& sc,
                               CoverVariant variant) {
  sc.validate();
  const int k = sc.k;
  const int l = static_cast<int>(sc.sets.size());
  const bool six_cycles = variant != CoverVariant::kBasic;
  const bool subdivide = variant == CoverVariant::kUniformCard;

  ReductionBuilder b;
  // Base node blocks; gadget nodes are appended as edges are created.
  std::vector<int> u(k), u_bar(k), v(l), v_bar(l), v_tilde(l), w(l);
  for (int s = 0; s < k; ++s) u[s] = b.add_t("u" + std::to_string(s + 1));
  for (int j = 0; j < l; ++j) v_bar[j] = b.add_t("vbar" + std::to_string(j + 1));
  for (int j = 0; j < l; ++j) w[j] = b.add_t("w" + std::to_string(j + 1));
  for (int j = 0; j < l; ++j) v[j] = b.add_r("v" + std::to_string(j + 1));
  for (int s = 0; s < k; ++s) u_bar[s] = b.add_r("ubar" + std::to_string(s + 1));
  for (int j = 0; j < l; ++j) {
    v_tilde[j] = b.add_r("vtilde" + std::to_string(j + 1));
  }

  // E1: {ū_s, u_s}, or the path ū_s - z1 - z2 - u_s.
  for (int s = 0; s < k; ++s) {
    if (subdivide) {
      const EdgeRole role{1, true};
      const int z1 = b.add_t("z1_" + std::to_string(s + 1));
      const int z2 = b.add_r("z2_" + std::to_string(s + 1));
      b.add_edge(u_bar[s], z1, role);
      b.add_edge(z2, z1, role);
      b.add_edge(z2, u[s], role);
    } else {
      b.add_edge(u_bar[s], u[s], {1, false});
    }
  }
  // E2: {u_s, v_S} for s in S.
  for (int j = 0; j < l; ++j) {
    std::vector<int> elems = sc.sets[j];
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int s : elems) b.add_edge(v[j], u[s - 1], {2, false});
  }
  // E3: {v_S, v̄_S}.
  for (int j = 0; j < l; ++j) {
    if (six_cycles) {
      b.add_six_cycle(v[j], v_bar[j], 3, "_e3_" + std::to_string(j + 1));
    } else {
      b.add_edge(v[j], v_bar[j], {3, false});
    }
  }
  // E4: {v̄_S, ṽ_S}, the set indicators.
  std::vector<EdgeId> indicator(l);
  for (int j = 0; j < l; ++j) {
    indicator[j] = b.add_edge(v_tilde[j], v_bar[j], {4, false});
  }
  // E5: {ṽ_S, w_S}.
  for (int j = 0; j < l; ++j) {
    if (six_cycles) {
      b.add_six_cycle(v_tilde[j], w[j], 5, "_e5_" + std::to_string(j + 1));
    } else {
      b.add_edge(v_tilde[j], w[j], {5, false});
    }
  }
  // E6: {w_S, ū_s} for s in S.
  for (int j = 0; j < l; ++j) {
    std::vector<int> elems = sc.sets[j];
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (int s : elems) b.add_edge(u_bar[s - 1], w[j], {6, false});
  }
  return b.finish(variant, k, std::move(indicator));
}

EdgeSet cover_to_edges(const ReducedInstance& ri,
                       const std::vector<int>& chosen) {
  EdgeMask in(ri.rap.num_edges(), false);
  for (EdgeId e = 0; e < ri.rap.num_edges(); ++e) {
    in[e] = ri.roles[e].edge_class != 4;
  }
  for (int j : chosen) in[ri.indicator.at(j)] = true;
  return from_mask(in);
}

std::vector<int> decode_cover(const ReducedInstance& ri,
                              const SetCoverInstance& sc, const Solution& x) {
  verify_solution(ri.rap, x);
  const EdgeMask in = to_mask(ri.rap.num_edges(), x.edges);
  std::vector<int> cover;
  for (std::size_t j = 0; j < ri.indicator.size(); ++j) {
    if (in[ri.indicator[j]]) cover.push_back(static_cast<int>(j));
  }
  if (!sc.covers(cover)) throw RapError("reduction violated");
  return cover;
}

RapInstance gk_family(int k) {
  if (k < 3) throw std::invalid_argument("G_k requires k >= 3");
  // Node 0 and odd nodes >= 3 are on T; node 1 and even nodes >= 2 on R.
  const auto on_t = [](int v) { return v == 0 || (v >= 3 && v % 2 == 1); };
  const auto index = [](int v) { return v <= 1 ? 0 : v / 2; };
  std::vector<Edge> edges;
  const auto add = [&](int a, int b) {
    if (on_t(a)) std::swap(a, b);
    edges.push_back({index(a), index(b)});
  };
  add(0, 1);
  for (int i = 2; i <= 2 * k; i += 2) {
    add(0, i);
    add(i, i + 1);
    add(i + 1, 1);
  }
  for (int j = 4; j <= 2 * k - 2; j += 2) {
    add(j + 1, j + 2);
    add(j + 3, j);
  }
  const int m = static_cast<int>(edges.size());
  BipartiteMultigraph g(k + 1, k + 1, std::move(edges));
  EdgeSet vulnerable = all_edges(g);
  return RapInstance(std::move(g), std::move(vulnerable),
                     std::vector<double>(m, 1.0));
}

SnppReduction from_snpp(const BipartiteMultigraph& h, int s, int t) {
  if (!h.balanced()) throw std::invalid_argument("h must be balanced");
  if (s < 0 || s >= h.num_t()) {
    throw std::invalid_argument("s must be a T-side node of h");
  }
  if (t < 0 || t >= h.num_r()) {
    throw std::invalid_argument("t must be an R-side node of h");
  }
  SnppReduction red;
  red.h_nodes = h.num_nodes();
  red.x_r = h.num_r();
  red.y_t = h.num_t();
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  red.f1 = static_cast<EdgeId>(edges.size());
  edges.push_back({red.x_r, s});
  red.f2 = static_cast<EdgeId>(edges.size());
  edges.push_back({red.x_r, red.y_t});
  red.g = static_cast<EdgeId>(edges.size());
  edges.push_back({t, red.y_t});
  const int m = static_cast<int>(edges.size());
  red.rap = RapInstance(
      BipartiteMultigraph(h.num_r() + 1, h.num_t() + 1, std::move(edges)),
      {red.f1, red.f2}, std::vector<double>(m, 1.0));
  return red;
}

RapInstance random_instance(const RandomInstanceParams& p) {
  if (p.num_r < 0 || p.num_t < 0 || p.edge_prob < 0.0 || p.edge_prob > 1.0 ||
      p.vuln_prob < 0.0 || p.vuln_prob > 1.0 || p.cost_min < 0 ||
      p.cost_max < p.cost_min || p.max_attempts < 1) {
    throw std::invalid_argument("random instance parameters out of range");
  }
  Rng rng(p.seed);
  for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
    std::vector<Edge> edges;
    EdgeSet vulnerable;
    std::vector<double> costs;
    for (int r = 0; r < p.num_r; ++r) {
      for (int t = 0; t < p.num_t; ++t) {
        if (!rng.bernoulli(p.edge_prob)) continue;
        if (rng.bernoulli(p.vuln_prob)) {
          vulnerable.push_back(static_cast<EdgeId>(edges.size()));
        }
        costs.push_back(
            static_cast<double>(rng.uniform_int(p.cost_min, p.cost_max)));
        edges.push_back({r, t});
      }
    }
    RapInstance inst(BipartiteMultigraph(p.num_r, p.num_t, std::move(edges)),
                     std::move(vulnerable), std::move(costs));
    const bool feasible = inst.graph().balanced()
                              ? check_feasible(inst)
                              : check_feasible(balanced_completion(inst).instance);
    if (feasible) return inst;
  }
  throw RapError("could not generate feasible instance");
}

}  // namespace rap
