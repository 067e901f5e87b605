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

#include "rap/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "rap/error.hpp"

namespace rap {

std::vector<double> ConvexCombination::reconstruct(int num_edges) const {
  std::vector<double> out(num_edges, 0.0);
  for (const ConvexTerm& term : terms) {
    for (EdgeId e : term.matching.edges) out[e] += term.weight;
  }
  return out;
}

ConvexCombination birkhoff_decompose(const BipartiteMultigraph& g, EdgeId f,
                                     const std::vector<double>& x, double eps) {
  if (static_cast<int>(x.size()) != g.num_edges()) {
    throw std::invalid_argument("vector length differs from edge count");
  }
  if (std::any_of(x.begin(), x.end(), [](double v) { return v < 0.0; })) {
    throw std::invalid_argument("negative entry in fractional matching");
  }
  std::vector<double> residual = x;
  if (f != kNoEdge) residual[f] = 0.0;
  // Mass still to assign, measured as the residual degree of one side.
  const auto mass = [&] {
    double total = 0.0;
    for (double v : residual) total += v;
    return g.num_r() == 0 ? 0.0 : total / g.num_r();
  };

  ConvexCombination cc;
  EdgeMask support(g.num_edges());
  for (double left = mass(); left >= eps; left = mass()) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) support[e] = residual[e] > eps;
    Matching m = max_matching(g, support);
    if (!m.perfect_in(g)) {
      if (left > 1e-6) throw RapError("support has no perfect matching");
      break;
    }
    double lambda = 1.0;
    for (EdgeId e : m.edges) lambda = std::min(lambda, residual[e]);
    for (EdgeId e : m.edges) {
      residual[e] -= lambda;
      if (residual[e] <= eps) residual[e] = 0.0;
    }
    cc.terms.push_back({lambda, std::move(m)});
  }
  double total = 0.0;
  for (const ConvexTerm& term : cc.terms) total += term.weight;
  if (total <= 0.0) throw RapError("support has no perfect matching");
  for (ConvexTerm& term : cc.terms) term.weight /= total;
  return cc;
}

const Matching& sample(const ConvexCombination& cc, Rng& rng) {
  if (cc.terms.empty()) throw std::invalid_argument("empty combination");
  const double draw = rng.uniform01();
  double cumulative = 0.0;
  for (const ConvexTerm& term : cc.terms) {
    cumulative += term.weight;
    if (draw < cumulative) return term.matching;
  }
  return cc.terms.back().matching;
}

}  // namespace rap
