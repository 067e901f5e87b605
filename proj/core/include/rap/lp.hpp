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

// Linear programs and the fractional relaxation of the robust assignment
// model: one perfect-matching block x^{-f} per vulnerable edge f, each forced
// to avoid f, all dominated by a shared capacity vector y.

#ifndef RAP_LP_HPP_
#define RAP_LP_HPP_

#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rap/instance.hpp"

namespace rap {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// min c.x  s.t.  rows, lower <= x <= upper.
class LinearProgram {
 public:
  enum class Sense { kEqual, kLessEqual };

  struct Row {
    std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
    Sense sense = Sense::kEqual;
    double rhs = 0.0;
    std::string name;
  };

  int add_variable(std::string name, double cost, double lower = 0.0,
                   double upper = kInfinity);
  int add_row(std::vector<std::pair<int, double>> coeffs, Sense sense,
              double rhs, std::string name);

  int num_variables() const { return static_cast<int>(cost_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& cost() const { return cost_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Row>& rows() const { return rows_; }

  double objective_value(const std::vector<double>& x) const;
  // Largest bound or row violation of `x`.
  double max_violation(const std::vector<double>& x) const;

  // CPLEX LP text format.
  void write_lp_format(std::ostream& out) const;

 private:
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<Row> rows_;
};

struct LpTolerances {
  double feasibility = 1e-9;
  double optimality = 1e-7;  // reduced costs
  double truncate = 1e-9;    // values below this are reported as 0
  int max_iterations = 1'000'000;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

// Anything that can solve a LinearProgram to an optimal basic point.
class LpSolver {
 public:
  virtual ~LpSolver() = default;
  virtual LpResult solve(const LinearProgram& lp,
                         const LpTolerances& tol) const = 0;
};

// Two-phase bounded-variable primal simplex on a dense tableau. Dantzig
// pricing, switching to Bland's rule after a run of degenerate pivots.
// Singleton equality rows are presolved into fixed variables.
class SimplexSolver final : public LpSolver {
 public:
  LpResult solve(const LinearProgram& lp, const LpTolerances& tol) const override;

  int degenerate_streak_limit = 50;
};

struct RapLp {
  RapInstance instance;
  LinearProgram program;
  int num_edges = 0;
  // Block keys: the vulnerable edges, or the single key kNoEdge when F is
  // empty (the nominal assignment block).
  EdgeSet scenarios;

  int y_var(EdgeId e) const { return e; }
  int x_var(int block, EdgeId e) const {
    return num_edges * (block + 1) + e;
  }
};

struct FractionalSolution {
  std::vector<double> y;
  EdgeSet scenarios;
  std::vector<std::vector<double>> x;  // per block, per edge
  double objective = 0.0;
  int iterations = 0;

  // The block for scenario `f` (kNoEdge for the nominal block).
  const std::vector<double>& x_for(EdgeId f) const;
};

// Variables: y_e for all e, then x^{-f}_e by scenario then edge. Rows: degree
// equalities per (f, node), x^{-f}_f = 0 per f, and x^{-f}_e <= y_e.
// Throws std::invalid_argument if unbalanced and InfeasibleError if the
// instance has no feasible solution.
RapLp build_lp(const RapInstance& inst);

// Solves the full formulation. Throws RapError("LP infeasible") or
// RapError("iteration limit").
FractionalSolution solve_lp(const RapLp& lp, const LpTolerances& tol = {},
                            const LpSolver& solver = SimplexSolver{});

// Same optimum by cut generation: a master LP over y alone, where each block
// is checked by a max-flow with capacities y (0 on f) and a violated cut
//   sum_{e in E(A, T \ B), e != f} y_e >= |A| - |B|
// is added from the min cut. x^{-f} is the final flow, so the point satisfies
// every row of the full formulation but need not be one of its vertices.
FractionalSolution solve_lp_by_cuts(const RapLp& lp, const LpTolerances& tol = {},
                                    const LpSolver& solver = SimplexSolver{});

enum class LpMethod { kFull, kCuts };

FractionalSolution solve_lp(const RapLp& lp, LpMethod method,
                            const LpTolerances& tol = {});

}  // namespace rap

#endif  // RAP_LP_HPP_
