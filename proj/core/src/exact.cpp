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

#include "rap/exact.hpp"

#include <algorithm>
#include <chrono>

#include "rap/error.hpp"
#include "rap/lp.hpp"

namespace rap {
namespace {

class BranchAndBound {
 public:
  BranchAndBound(const RapInstance& work, EdgeSet order, EdgeMask base,
                 const BnbConfig& cfg)
      : work_(work),
        order_(std::move(order)),
        cfg_(cfg),
        start_(std::chrono::steady_clock::now()) {
    included_ = base;
    available_ = EdgeMask(work.num_edges(), true);
    best_ = available_;
    best_cost_ = 0.0;
    for (EdgeId e : order_) best_cost_ += work.cost(e);
  }

  EdgeMask run() {
    search(0, 0.0);
    return best_;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  void tick() {
    ++nodes_;
    if (nodes_ > cfg_.node_limit) throw RapError("exact search limit reached");
    if ((nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > cfg_.time_limit_seconds) {
        throw RapError("exact search limit reached");
      }
    }
  }

  // Decisions for order_[0..i) are fixed; `cost` is the included cost.
  void search(std::size_t i, double cost) {
    tick();
    if (cost >= best_cost_ - 1e-9) return;
    if (is_feasible(work_, included_)) {
      best_ = included_;
      best_cost_ = cost;
      return;
    }
    if (i == order_.size()) return;
    const EdgeId e = order_[i];
    available_[e] = false;
    if (is_feasible(work_, available_)) search(i + 1, cost);
    available_[e] = true;
    included_[e] = true;
    search(i + 1, cost + work_.cost(e));
    included_[e] = false;
  }

  const RapInstance& work_;
  EdgeSet order_;
  const BnbConfig& cfg_;
  std::chrono::steady_clock::time_point start_;
  EdgeMask included_;
  EdgeMask available_;
  EdgeMask best_;
  double best_cost_ = 0.0;
  std::int64_t nodes_ = 0;
};

}  // namespace

Solution solve_exact(const RapInstance& inst, const BnbConfig& cfg,
                     BnbStats* stats) {
  if (inst.num_edges() > cfg.max_edges) {
    throw RapError("instance too large for exact solver");
  }
  const bool balanced = inst.graph().balanced();
  const InstanceMapping map =
      balanced ? InstanceMapping{} : balanced_completion(inst);
  const RapInstance& work = balanced ? inst : map.instance;
  if (const auto failure =
          first_failing_scenario(work, EdgeMask(work.num_edges(), true))) {
    throw InfeasibleError(*failure);
  }
  EdgeSet order(inst.num_edges());
  for (EdgeId e = 0; e < inst.num_edges(); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return inst.cost(a) > inst.cost(b);
  });
  // Dummy edges of the completion are free and always present.
  EdgeMask base(work.num_edges(), false);
  if (!balanced) {
    for (EdgeId e : map.added_edges()) base[e] = true;
  }
  BranchAndBound bnb(work, order, std::move(base), cfg);
  const EdgeMask best = bnb.run();
  if (stats != nullptr) stats->nodes = bnb.nodes();
  EdgeSet chosen;
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    if (best[e]) chosen.push_back(e);
  }
  return make_solution(inst, std::move(chosen));
}

LowerBounds lower_bounds(const RapInstance& inst, bool with_lp) {
  LowerBounds lb;
  const BipartiteMultigraph& g = inst.graph();
  const int t = std::min(g.num_r(), g.num_t());
  if (inst.unit_costs()) {
    lb.combinatorial = inst.uniform() && inst.num_edges() > 0 ? 2.0 * t : 1.0 * t;
  }
  if (with_lp) {
    const RapInstance work =
        g.balanced() ? inst : balanced_completion(inst).instance;
    lb.lp = solve_lp(build_lp(work), LpMethod::kCuts).objective;
  }
  return lb;
}

}  // namespace rap
