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

#include "rap/lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <ostream>
#include <stdexcept>

#include "rap/error.hpp"
#include "rap/io.hpp"

namespace rap {

int LinearProgram::add_variable(std::string name, double cost, double lower,
                                double upper) {
  if (lower > upper || std::isinf(lower)) {
    throw std::invalid_argument("bad bounds for variable " + name);
  }
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  names_.push_back(std::move(name));
  return num_variables() - 1;
}

int LinearProgram::add_row(std::vector<std::pair<int, double>> coeffs,
                           Sense sense, double rhs, std::string name) {
  for (const auto& [var, coeff] : coeffs) {
    if (var < 0 || var >= num_variables()) {
      throw std::invalid_argument("row " + name + " references unknown variable");
    }
  }
  rows_.push_back({std::move(coeffs), sense, rhs, std::move(name)});
  return num_rows() - 1;
}

double LinearProgram::objective_value(const std::vector<double>& x) const {
  double total = 0.0;
  for (int j = 0; j < num_variables(); ++j) total += cost_[j] * x[j];
  return total;
}

double LinearProgram::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    worst = std::max({worst, lower_[j] - x[j], x[j] - upper_[j]});
  }
  for (const Row& row : rows_) {
    double lhs = 0.0;
    for (const auto& [var, coeff] : row.coeffs) lhs += coeff * x[var];
    const double gap = lhs - row.rhs;
    worst = std::max(worst, row.sense == Sense::kEqual ? std::abs(gap) : gap);
  }
  return worst;
}

namespace {

void write_terms(std::ostream& out,
                 const std::vector<std::pair<int, double>>& terms,
                 const std::vector<std::string>& names) {
  int on_line = 0;
  bool first = true;
  for (const auto& [var, coeff] : terms) {
    if (coeff == 0.0) continue;
    if (on_line == 8) {
      out << "\n   ";
      on_line = 0;
    }
    out << (coeff < 0.0 ? " - " : (first ? " " : " + "))
        << format_number(std::abs(coeff)) << ' ' << names[var];
    first = false;
    ++on_line;
  }
  if (first) out << " 0 " << names.front();
}

}  // namespace

void LinearProgram::write_lp_format(std::ostream& out) const {
  out << "Minimize\n obj:";
  std::vector<std::pair<int, double>> obj;
  for (int j = 0; j < num_variables(); ++j) obj.emplace_back(j, cost_[j]);
  write_terms(out, obj, names_);
  out << "\nSubject To\n";
  for (const Row& row : rows_) {
    out << ' ' << row.name << ':';
    write_terms(out, row.coeffs, names_);
    out << (row.sense == Sense::kEqual ? " = " : " <= ")
        << format_number(row.rhs) << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < num_variables(); ++j) {
    if (lower_[j] == 0.0 && std::isinf(upper_[j])) continue;
    out << ' ' << format_number(lower_[j]) << " <= " << names_[j];
    if (!std::isinf(upper_[j])) out << " <= " << format_number(upper_[j]);
    out << '\n';
  }
  out << "End\n";
}

const std::vector<double>& FractionalSolution::x_for(EdgeId f) const {
  const auto it = std::lower_bound(scenarios.begin(), scenarios.end(), f);
  if (it == scenarios.end() || *it != f) {
    throw std::invalid_argument("no LP block for edge " + std::to_string(f));
  }
  return x[it - scenarios.begin()];
}

RapLp build_lp(const RapInstance& inst) {
  const BipartiteMultigraph& g = inst.graph();
  if (const auto failure =
          first_failing_scenario(inst, EdgeMask(inst.num_edges(), true))) {
    throw InfeasibleError(*failure);
  }
  RapLp lp;
  lp.instance = inst;
  lp.num_edges = g.num_edges();
  lp.scenarios = inst.vulnerable().empty() ? EdgeSet{kNoEdge} : inst.vulnerable();
  LinearProgram& p = lp.program;
  using Sense = LinearProgram::Sense;

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    p.add_variable("y_e" + std::to_string(e), inst.cost(e), 0.0, 1.0);
  }
  std::vector<std::string> tags;
  for (EdgeId f : lp.scenarios) {
    const std::string tag = f == kNoEdge ? "nom" : "f" + std::to_string(f);
    tags.push_back(tag);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      p.add_variable("x_" + tag + "_e" + std::to_string(e), 0.0);
    }
  }
  for (int b = 0; b < static_cast<int>(lp.scenarios.size()); ++b) {
    const EdgeId f = lp.scenarios[b];
    for (int node = 0; node < g.num_nodes(); ++node) {
      std::vector<std::pair<int, double>> coeffs;
      for (EdgeId e : g.incident(node)) coeffs.emplace_back(lp.x_var(b, e), 1.0);
      const std::string name =
          g.is_r_node(node) ? "r" + std::to_string(node)
                            : "t" + std::to_string(node - g.num_r());
      p.add_row(std::move(coeffs), Sense::kEqual, 1.0,
                "deg_" + tags[b] + "_" + name);
    }
    if (f != kNoEdge) {
      p.add_row({{lp.x_var(b, f), 1.0}}, Sense::kEqual, 0.0, "fix_" + tags[b]);
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      p.add_row({{lp.x_var(b, e), 1.0}, {lp.y_var(e), -1.0}}, Sense::kLessEqual,
                0.0, "cap_" + tags[b] + "_e" + std::to_string(e));
    }
  }
  return lp;
}

FractionalSolution solve_lp(const RapLp& lp, const LpTolerances& tol,
                            const LpSolver& solver) {
  LpResult res = solver.solve(lp.program, tol);
  switch (res.status) {
    case LpStatus::kOptimal:
      break;
    case LpStatus::kInfeasible:
      throw RapError("LP infeasible");
    case LpStatus::kUnbounded:
      throw RapError("LP unbounded");
    case LpStatus::kIterationLimit:
      throw RapError("iteration limit");
  }
  for (double& v : res.x) {
    if (std::abs(v) < tol.truncate) v = 0.0;
  }
  FractionalSolution sol;
  sol.scenarios = lp.scenarios;
  sol.iterations = res.iterations;
  sol.y.assign(res.x.begin(), res.x.begin() + lp.num_edges);
  for (int b = 0; b < static_cast<int>(lp.scenarios.size()); ++b) {
    const auto first = res.x.begin() + lp.x_var(b, 0);
    sol.x.emplace_back(first, first + lp.num_edges);
  }
  sol.objective = lp.program.objective_value(res.x);
  return sol;
}

namespace {

// Edmonds-Karp on source -> R -> T -> sink with unit node capacities and
// capacity cap[e] on bipartite edge e.
class BipartiteFlow {
 public:
  BipartiteFlow(const BipartiteMultigraph& g, const std::vector<double>& cap)
      : g_(g), cap_(cap), flow_(g.num_edges(), 0.0),
        r_used_(g.num_r(), 0.0), t_used_(g.num_t(), 0.0) {}

  double run() {
    double total = 0.0;
    while (true) {
      const double pushed = augment();
      if (pushed <= kResidual) return total;
      total += pushed;
    }
  }

  const std::vector<double>& flow() const { return flow_; }
  // Source side of a minimum cut, valid after run().
  const std::vector<char>& reached() const { return reached_; }

 private:
  static constexpr double kResidual = 1e-12;

  // One shortest augmenting path over unified node ids. Forward moves go
  // R -> T along residual capacity, backward moves T -> R along flow.
  double augment() {
    const int n = g_.num_nodes();
    reached_.assign(n, 0);
    std::vector<EdgeId> via(n, kNoEdge);
    std::queue<int> queue;
    for (int r = 0; r < g_.num_r(); ++r) {
      if (1.0 - r_used_[r] > kResidual) {
        reached_[r] = 1;
        queue.push(r);
      }
    }
    int end = -1;
    while (!queue.empty() && end < 0) {
      const int v = queue.front();
      queue.pop();
      for (EdgeId e : g_.incident(v)) {
        const int w = g_.opposite(e, v);
        if (reached_[w]) continue;
        const bool forward = g_.is_r_node(v);
        const double room = forward ? cap_[e] - flow_[e] : flow_[e];
        if (room <= kResidual) continue;
        reached_[w] = 1;
        via[w] = e;
        if (forward && 1.0 - t_used_[w - g_.num_r()] > kResidual) {
          end = w;
          break;
        }
        queue.push(w);
      }
    }
    if (end < 0) return 0.0;
    // Bottleneck, then apply.
    double amount = 1.0 - t_used_[end - g_.num_r()];
    int v = end;
    while (via[v] != kNoEdge) {
      const EdgeId e = via[v];
      const int u = g_.opposite(e, v);
      amount = std::min(amount, g_.is_r_node(u) ? cap_[e] - flow_[e] : flow_[e]);
      v = u;
    }
    const int start = v;
    amount = std::min(amount, 1.0 - r_used_[start]);
    for (v = end; via[v] != kNoEdge;) {
      const EdgeId e = via[v];
      const int u = g_.opposite(e, v);
      flow_[e] += g_.is_r_node(u) ? amount : -amount;
      v = u;
    }
    r_used_[start] += amount;
    t_used_[end - g_.num_r()] += amount;
    return amount;
  }

  const BipartiteMultigraph& g_;
  const std::vector<double>& cap_;
  std::vector<double> flow_;
  std::vector<double> r_used_;
  std::vector<double> t_used_;
  std::vector<char> reached_;
};

}  // namespace

FractionalSolution solve_lp_by_cuts(const RapLp& lp, const LpTolerances& tol,
                                    const LpSolver& solver) {
  const RapInstance& inst = lp.instance;
  const BipartiteMultigraph& g = inst.graph();
  const int n = g.num_r();
  using Sense = LinearProgram::Sense;

  LinearProgram master;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    master.add_variable("y_e" + std::to_string(e), inst.cost(e), 0.0, 1.0);
  }
  std::map<std::pair<EdgeSet, int>, int> known;
  const auto add_cut = [&](EdgeSet edges, int rhs) {
    std::sort(edges.begin(), edges.end());
    if (!known.emplace(std::make_pair(edges, rhs), master.num_rows()).second) {
      return false;
    }
    std::vector<std::pair<int, double>> coeffs;
    for (EdgeId e : edges) coeffs.emplace_back(e, -1.0);
    master.add_row(std::move(coeffs), Sense::kLessEqual, -rhs,
                   "cut" + std::to_string(master.num_rows()));
    return true;
  };
  for (int node = 0; node < g.num_nodes(); ++node) {
    const auto inc = g.incident(node);
    add_cut(EdgeSet(inc.begin(), inc.end()), 1);
  }

  FractionalSolution sol;
  sol.scenarios = lp.scenarios;
  std::vector<double> cap;
  while (true) {
    LpResult res = solver.solve(master, tol);
    sol.iterations += res.iterations;
    if (res.status == LpStatus::kInfeasible) throw RapError("LP infeasible");
    if (res.status == LpStatus::kIterationLimit) {
      throw RapError("iteration limit");
    }
    if (res.status != LpStatus::kOptimal) throw RapError("LP unbounded");
    sol.y = res.x;
    sol.x.clear();
    bool added = false;
    for (EdgeId f : lp.scenarios) {
      cap = sol.y;
      if (f != kNoEdge) cap[f] = 0.0;
      BipartiteFlow flow(g, cap);
      const double value = flow.run();
      sol.x.push_back(flow.flow());
      if (value >= n - tol.feasibility * 0.1) continue;
      // Min cut: A = reached R nodes, B = reached T nodes.
      const std::vector<char>& reached = flow.reached();
      int rhs = 0;
      for (int node = 0; node < g.num_nodes(); ++node) {
        if (reached[node]) rhs += g.is_r_node(node) ? 1 : -1;
      }
      EdgeSet edges;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (e != f && reached[g.r_endpoint_node(e)] &&
            !reached[g.t_endpoint_node(e)]) {
          edges.push_back(e);
        }
      }
      if (rhs > 0 && add_cut(std::move(edges), rhs)) added = true;
    }
    if (!added) break;
  }
  for (double& v : sol.y) {
    if (std::abs(v) < tol.truncate) v = 0.0;
  }
  for (auto& block : sol.x) {
    for (double& v : block) {
      if (std::abs(v) < tol.truncate) v = 0.0;
    }
  }
  sol.objective = 0.0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) sol.objective += inst.cost(e) * sol.y[e];
  return sol;
}

FractionalSolution solve_lp(const RapLp& lp, LpMethod method,
                            const LpTolerances& tol) {
  return method == LpMethod::kFull ? solve_lp(lp, tol) : solve_lp_by_cuts(lp, tol);
}

}  // namespace rap
