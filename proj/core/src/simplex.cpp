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

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "rap/lp.hpp"

namespace rap {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kDropTol = 1e-13;

enum class ColStatus : unsigned char { kBasic, kAtLower, kAtUpper };

// Presolved problem in the shifted space 0 <= x' <= upper.
struct Reduced {
  std::vector<int> column_of;   // original var -> reduced column, -1 if fixed
  std::vector<double> fixed;    // value of fixed originals
  std::vector<int> original;    // reduced column -> original var
  std::vector<double> shift;    // lower bound per reduced column
  std::vector<double> upper;
  std::vector<double> cost;
  std::vector<LinearProgram::Row> rows;
  double objective_offset = 0.0;
  bool infeasible = false;
};

Reduced presolve(const LinearProgram& lp, double tol) {
  using Sense = LinearProgram::Sense;
  const int n = lp.num_variables();
  Reduced red;
  std::vector<std::optional<double>> fix(n);
  for (int j = 0; j < n; ++j) {
    if (lp.lower()[j] == lp.upper()[j]) fix[j] = lp.lower()[j];
  }
  std::vector<char> dropped(lp.num_rows(), 0);
  for (int i = 0; i < lp.num_rows(); ++i) {
    const auto& row = lp.rows()[i];
    if (row.sense != Sense::kEqual) continue;
    int count = 0;
    std::pair<int, double> only{-1, 0.0};
    for (const auto& term : row.coeffs) {
      if (term.second != 0.0) {
        ++count;
        only = term;
      }
    }
    if (count != 1) continue;
    const double value = row.rhs / only.second;
    const int j = only.first;
    if (value < lp.lower()[j] - tol || value > lp.upper()[j] + tol ||
        (fix[j] && std::abs(*fix[j] - value) > tol)) {
      red.infeasible = true;
      return red;
    }
    fix[j] = value;
    dropped[i] = 1;
  }

  red.column_of.assign(n, -1);
  red.fixed.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    if (fix[j]) {
      red.fixed[j] = *fix[j];
      red.objective_offset += lp.cost()[j] * *fix[j];
      continue;
    }
    red.column_of[j] = static_cast<int>(red.original.size());
    red.original.push_back(j);
    red.shift.push_back(lp.lower()[j]);
    red.upper.push_back(lp.upper()[j] - lp.lower()[j]);
    red.cost.push_back(lp.cost()[j]);
    red.objective_offset += lp.cost()[j] * lp.lower()[j];
  }
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (dropped[i]) continue;
    const auto& row = lp.rows()[i];
    LinearProgram::Row out{{}, row.sense, row.rhs, row.name};
    for (const auto& [var, coeff] : row.coeffs) {
      if (coeff == 0.0) continue;
      if (fix[var]) {
        out.rhs -= coeff * *fix[var];
      } else {
        out.rhs -= coeff * lp.lower()[var];
        out.coeffs.emplace_back(red.column_of[var], coeff);
      }
    }
    if (out.coeffs.empty()) {
      const bool ok = row.sense == Sense::kEqual ? std::abs(out.rhs) <= tol
                                                 : out.rhs >= -tol;
      if (!ok) {
        red.infeasible = true;
        return red;
      }
      continue;
    }
    red.rows.push_back(std::move(out));
  }
  return red;
}

class Tableau {
 public:
  Tableau(const Reduced& red, const LpTolerances& tol, int streak_limit)
      : tol_(tol), streak_limit_(streak_limit) {
    num_structural_ = static_cast<int>(red.cost.size());
    const int m = static_cast<int>(red.rows.size());
    // Column layout: structural, then one slack per <= row, then artificials.
    upper_ = red.upper;
    int cols = num_structural_;
    std::vector<int> slack_of(m, -1);
    for (int i = 0; i < m; ++i) {
      if (red.rows[i].sense == LinearProgram::Sense::kLessEqual) {
        slack_of[i] = cols++;
        upper_.push_back(kInfinity);
      }
    }
    first_artificial_ = cols;
    std::vector<int> artificial_of(m, -1);
    for (int i = 0; i < m; ++i) {
      const bool slack_start = slack_of[i] >= 0 && red.rows[i].rhs >= 0.0;
      if (!slack_start) {
        artificial_of[i] = cols++;
        upper_.push_back(kInfinity);
      }
    }
    num_cols_ = cols;
    t_.assign(m, std::vector<double>(num_cols_, 0.0));
    beta_.assign(m, 0.0);
    basis_.assign(m, -1);
    status_.assign(num_cols_, ColStatus::kAtLower);
    for (int i = 0; i < m; ++i) {
      const auto& row = red.rows[i];
      const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
      for (const auto& [col, coeff] : row.coeffs) t_[i][col] += sign * coeff;
      if (slack_of[i] >= 0) t_[i][slack_of[i]] = sign;
      beta_[i] = sign * row.rhs;
      if (artificial_of[i] >= 0) {
        t_[i][artificial_of[i]] = 1.0;
        basis_[i] = artificial_of[i];
      } else {
        basis_[i] = slack_of[i];
      }
      status_[basis_[i]] = ColStatus::kBasic;
    }
    banned_.assign(num_cols_, 0);
  }

  int iterations() const { return iterations_; }

  // Phase 1. Returns false if the rows cannot be satisfied.
  bool find_feasible() {
    if (first_artificial_ == num_cols_) return true;
    std::vector<double> cost(num_cols_, 0.0);
    for (int j = first_artificial_; j < num_cols_; ++j) cost[j] = 1.0;
    set_costs(cost);
    if (run() != LpStatus::kOptimal) return false;
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] >= first_artificial_) infeasibility += beta_[i];
    }
    if (infeasibility > 1e-7) return false;
    drive_out_artificials();
    for (int j = first_artificial_; j < num_cols_; ++j) banned_[j] = 1;
    return true;
  }

  LpStatus optimize(const std::vector<double>& structural_cost) {
    std::vector<double> cost(num_cols_, 0.0);
    std::copy(structural_cost.begin(), structural_cost.end(), cost.begin());
    set_costs(cost);
    return run();
  }

  std::vector<double> structural_values() const {
    std::vector<double> x(num_structural_, 0.0);
    for (int j = 0; j < num_structural_; ++j) {
      if (status_[j] == ColStatus::kAtUpper) x[j] = upper_[j];
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i] < num_structural_) x[basis_[i]] = beta_[i];
    }
    return x;
  }

 private:
  void set_costs(const std::vector<double>& cost) {
    d_ = cost;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      const std::vector<double>& row = t_[i];
      for (int j = 0; j < num_cols_; ++j) {
        if (row[j] != 0.0) d_[j] -= cb * row[j];
      }
    }
    for (int i : basis_) d_[i] = 0.0;
  }

  int choose_entering(bool bland) const {
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < num_cols_; ++j) {
      if (banned_[j] || status_[j] == ColStatus::kBasic) continue;
      double score = 0.0;
      if (status_[j] == ColStatus::kAtLower && d_[j] < -tol_.optimality) {
        score = -d_[j];
      } else if (status_[j] == ColStatus::kAtUpper && d_[j] > tol_.optimality) {
        score = d_[j];
      } else {
        continue;
      }
      if (bland) return j;
      if (score > best_score) {
        best = j;
        best_score = score;
      }
    }
    return best;
  }

  LpStatus run() {
    int streak = 0;
    while (true) {
      if (iterations_ >= tol_.max_iterations) return LpStatus::kIterationLimit;
      const bool bland = streak >= streak_limit_;
      const int q = choose_entering(bland);
      if (q < 0) return LpStatus::kOptimal;
      const double dir = status_[q] == ColStatus::kAtLower ? 1.0 : -1.0;

      // Ratio test.
      int leave = -1;
      double theta = kInfinity;
      double leave_alpha = 0.0;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        const double alpha = t_[i][q];
        if (std::abs(alpha) <= kPivotTol) continue;
        const double rate = dir * alpha;
        double limit;
        if (rate > 0.0) {
          limit = std::max(beta_[i], 0.0) / rate;
        } else {
          const double ub = upper_[basis_[i]];
          if (std::isinf(ub)) continue;
          limit = std::max(ub - beta_[i], 0.0) / -rate;
        }
        bool better = limit < theta - 1e-12;
        if (!better && limit <= theta + 1e-12 && leave >= 0) {
          better = bland ? basis_[i] < basis_[leave]
                         : std::abs(alpha) > std::abs(leave_alpha);
        }
        if (better) {
          theta = limit;
          leave = static_cast<int>(i);
          leave_alpha = alpha;
        }
      }
      const bool flip = upper_[q] <= theta;
      if (flip) theta = upper_[q];
      if (std::isinf(theta)) return LpStatus::kUnbounded;

      ++iterations_;
      streak = theta <= 1e-12 ? streak + 1 : 0;
      if (theta != 0.0) {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
          const double alpha = t_[i][q];
          if (alpha != 0.0) beta_[i] -= dir * alpha * theta;
        }
      }
      if (flip) {
        status_[q] = dir > 0.0 ? ColStatus::kAtUpper : ColStatus::kAtLower;
        continue;
      }
      const double start = dir > 0.0 ? 0.0 : upper_[q];
      const int out = basis_[leave];
      status_[out] = dir * leave_alpha > 0.0 ? ColStatus::kAtLower
                                             : ColStatus::kAtUpper;
      pivot(leave, q);
      beta_[leave] = start + dir * theta;
    }
  }

  void pivot(int r, int q) {
    std::vector<double>& prow = t_[r];
    const double inv = 1.0 / prow[q];
    nz_.clear();
    for (int j = 0; j < num_cols_; ++j) {
      if (prow[j] == 0.0) continue;
      prow[j] *= inv;
      if (std::abs(prow[j]) < kDropTol) {
        prow[j] = 0.0;
      } else {
        nz_.push_back(j);
      }
    }
    prow[q] = 1.0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      std::vector<double>& row = t_[i];
      const double a = row[q];
      if (a == 0.0) continue;
      for (int j : nz_) {
        const double v = row[j] - a * prow[j];
        row[j] = std::abs(v) < kDropTol ? 0.0 : v;
      }
      row[q] = 0.0;
    }
    const double dq = d_[q];
    if (dq != 0.0) {
      for (int j : nz_) d_[j] -= dq * prow[j];
      d_[q] = 0.0;
    }
    status_[q] = ColStatus::kBasic;
    basis_[r] = q;
  }

  // Pivots basic artificials (all at zero) out of the basis; rows where that
  // is impossible are linearly dependent on the others and are deleted.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int best = -1;
      for (int j = 0; j < first_artificial_; ++j) {
        if (status_[j] == ColStatus::kBasic) continue;
        if (std::abs(t_[i][j]) > 1e-7 &&
            (best < 0 || std::abs(t_[i][j]) > std::abs(t_[i][best]))) {
          best = j;
        }
      }
      if (best < 0) {
        status_[basis_[i]] = ColStatus::kAtLower;
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        beta_.erase(beta_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      const double value =
          status_[best] == ColStatus::kAtUpper ? upper_[best] : 0.0;
      status_[basis_[i]] = ColStatus::kAtLower;
      pivot(static_cast<int>(i), best);
      beta_[i] = value;
      ++i;
    }
  }

  const LpTolerances& tol_;
  int streak_limit_;
  int num_structural_ = 0;
  int first_artificial_ = 0;
  int num_cols_ = 0;
  int iterations_ = 0;
  std::vector<std::vector<double>> t_;
  std::vector<double> beta_;
  std::vector<int> basis_;
  std::vector<ColStatus> status_;
  std::vector<double> upper_;
  std::vector<double> d_;
  std::vector<char> banned_;
  std::vector<int> nz_;
};

}  // namespace

LpResult SimplexSolver::solve(const LinearProgram& lp,
                              const LpTolerances& tol) const {
  LpResult result;
  const Reduced red = presolve(lp, tol.feasibility);
  if (red.infeasible) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  Tableau tableau(red, tol, degenerate_streak_limit);
  if (!tableau.find_feasible()) {
    result.status = LpStatus::kInfeasible;
    result.iterations = tableau.iterations();
    return result;
  }
  result.status = tableau.optimize(red.cost);
  result.iterations = tableau.iterations();
  if (result.status != LpStatus::kOptimal) return result;

  const std::vector<double> reduced = tableau.structural_values();
  result.x = red.fixed;
  for (std::size_t c = 0; c < reduced.size(); ++c) {
    result.x[red.original[c]] = red.shift[c] + reduced[c];
  }
  result.objective = lp.objective_value(result.x);
  return result;
}

}  // namespace rap
