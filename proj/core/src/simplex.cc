// Copyright 2026 The amodel Authors
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

#include "amodel/simplex.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "amodel/errors.h"

namespace amodel {

std::int32_t LpData::AddColumn(double lower, double upper, double cost) {
  col_lower.push_back(lower);
  col_upper.push_back(upper);
  objective.push_back(cost);
  return num_cols++;
}

void LpData::AddRow(SparseRow row, double lower, double upper) {
  rows.push_back(std::move(row));
  row_lower.push_back(lower);
  row_upper.push_back(upper);
}

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration limit";
    case LpStatus::kTimeLimit: return "time limit";
  }
  return "?";
}

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kPhaseOneTolerance = 1e-7;

enum class NonbasicState : std::int8_t { kBasic, kAtLower, kAtUpper, kFree };

class Simplex {
 public:
  Simplex(const LpData& lp, const LpOptions& options)
      : lp_(lp),
        options_(options),
        deadline_(options.time_limit),
        n_(lp.num_cols),
        m_(lp.num_rows()) {
    col_rows_.resize(n_);
    col_values_.resize(n_);
    for (std::int32_t i = 0; i < m_; ++i) {
      const SparseRow& row = lp.rows[i];
      for (std::size_t k = 0; k < row.columns.size(); ++k) {
        if (row.values[k] == 0.0) continue;
        col_rows_[row.columns[k]].push_back(i);
        col_values_[row.columns[k]].push_back(row.values[k]);
      }
    }
  }

  LpSolution Run();

 private:
  std::int32_t num_columns() const {
    return static_cast<std::int32_t>(lower_.size());
  }
  bool IsArtificial(std::int32_t j) const { return j >= n_ + m_; }

  void Column(std::int32_t j, std::vector<double>& alpha) const;
  double DotColumn(std::int32_t j, const std::vector<double>& y) const;
  void ComputeDuals(std::vector<double>& y) const;
  void ComputeBasicValues();
  bool Invert();
  void Refactor();

  void InitializeColumns();
  void ColdStart();
  bool WarmStart(const LpBasis& basis);

  LpStatus Iterate();
  std::int32_t Price(const std::vector<double>& y, int& direction) const;
  void Pivot(std::int32_t r, const std::vector<double>& alpha);
  void DriveOutArtificials();

  LpSolution Extract(LpStatus status);

  const LpData& lp_;
  const LpOptions& options_;
  Deadline deadline_;
  const std::int32_t n_;
  const std::int32_t m_;

  std::vector<std::vector<std::int32_t>> col_rows_;
  std::vector<std::vector<double>> col_values_;
  std::vector<std::int32_t> artificial_row_;
  std::vector<double> artificial_sign_;

  std::vector<double> lower_, upper_, value_, cost_;
  std::vector<NonbasicState> state_;
  std::vector<std::int32_t> basis_;     // row position -> column
  std::vector<std::int32_t> position_;  // column -> row position or -1
  std::vector<double> binv_;            // m x m row-major

  std::vector<double> ray_;
  std::int64_t iterations_ = 0;
  std::int64_t bland_pivots_ = 0;
  std::int32_t since_refactor_ = 0;
  std::int64_t degenerate_run_ = 0;
  bool bland_ = false;
};

void Simplex::Column(std::int32_t j, std::vector<double>& alpha) const {
  alpha.assign(m_, 0.0);
  if (j < n_) {
    const auto& rows = col_rows_[j];
    const auto& vals = col_values_[j];
    for (std::int32_t i = 0; i < m_; ++i) {
      const double* binv_row = &binv_[static_cast<std::size_t>(i) * m_];
      double s = 0.0;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        s += binv_row[rows[k]] * vals[k];
      }
      alpha[i] = s;
    }
    return;
  }
  std::int32_t row;
  double sign;
  if (j < n_ + m_) {
    row = j - n_;
    sign = -1.0;
  } else {
    row = artificial_row_[j - n_ - m_];
    sign = artificial_sign_[j - n_ - m_];
  }
  for (std::int32_t i = 0; i < m_; ++i) {
    alpha[i] = sign * binv_[static_cast<std::size_t>(i) * m_ + row];
  }
}

double Simplex::DotColumn(std::int32_t j, const std::vector<double>& y) const {
  if (j < n_) {
    double s = 0.0;
    const auto& rows = col_rows_[j];
    const auto& vals = col_values_[j];
    for (std::size_t k = 0; k < rows.size(); ++k) s += y[rows[k]] * vals[k];
    return s;
  }
  if (j < n_ + m_) return -y[j - n_];
  return artificial_sign_[j - n_ - m_] * y[artificial_row_[j - n_ - m_]];
}

void Simplex::ComputeDuals(std::vector<double>& y) const {
  y.assign(m_, 0.0);
  for (std::int32_t i = 0; i < m_; ++i) {
    const double c = cost_[basis_[i]];
    if (c == 0.0) continue;
    const double* binv_row = &binv_[static_cast<std::size_t>(i) * m_];
    for (std::int32_t k = 0; k < m_; ++k) y[k] += c * binv_row[k];
  }
}

void Simplex::ComputeBasicValues() {
  // B x_B = -N x_N
  std::vector<double> rhs(m_, 0.0);
  for (std::int32_t j = 0; j < num_columns(); ++j) {
    if (position_[j] >= 0 || value_[j] == 0.0) continue;
    const double v = value_[j];
    if (j < n_) {
      for (std::size_t k = 0; k < col_rows_[j].size(); ++k) {
        rhs[col_rows_[j][k]] -= col_values_[j][k] * v;
      }
    } else if (j < n_ + m_) {
      rhs[j - n_] += v;
    } else {
      rhs[artificial_row_[j - n_ - m_]] -= artificial_sign_[j - n_ - m_] * v;
    }
  }
  for (std::int32_t i = 0; i < m_; ++i) {
    const double* binv_row = &binv_[static_cast<std::size_t>(i) * m_];
    double s = 0.0;
    for (std::int32_t k = 0; k < m_; ++k) s += binv_row[k] * rhs[k];
    value_[basis_[i]] = s;
  }
}

// Gauss-Jordan inversion of the basis matrix with partial pivoting.
bool Simplex::Invert() {
  const std::size_t m = static_cast<std::size_t>(m_);
  std::vector<double> b(m * m, 0.0);
  std::vector<double> unit(m_);
  for (std::int32_t p = 0; p < m_; ++p) {
    const std::int32_t j = basis_[p];
    if (j < n_) {
      for (std::size_t k = 0; k < col_rows_[j].size(); ++k) {
        b[col_rows_[j][k] * m + p] = col_values_[j][k];
      }
    } else if (j < n_ + m_) {
      b[(j - n_) * m + p] = -1.0;
    } else {
      b[artificial_row_[j - n_ - m_] * m + p] = artificial_sign_[j - n_ - m_];
    }
  }
  double norm_b = 0.0;
  for (std::size_t c = 0; c < m; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += std::abs(b[r * m + c]);
    norm_b = std::max(norm_b, s);
  }

  std::vector<double> inv(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) inv[i * m + i] = 1.0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    double best = std::abs(b[col * m + col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      if (std::abs(b[r * m + col]) > best) {
        best = std::abs(b[r * m + col]);
        pivot = r;
      }
    }
    if (best < 1e-13) return false;
    if (pivot != col) {
      for (std::size_t k = 0; k < m; ++k) {
        std::swap(b[pivot * m + k], b[col * m + k]);
        std::swap(inv[pivot * m + k], inv[col * m + k]);
      }
    }
    const double d = b[col * m + col];
    for (std::size_t k = 0; k < m; ++k) {
      b[col * m + k] /= d;
      inv[col * m + k] /= d;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = b[r * m + col];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < m; ++k) {
        b[r * m + k] -= f * b[col * m + k];
        inv[r * m + k] -= f * inv[col * m + k];
      }
    }
  }
  double norm_inv = 0.0;
  for (std::size_t c = 0; c < m; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += std::abs(inv[r * m + c]);
    norm_inv = std::max(norm_inv, s);
  }
  if (norm_b * norm_inv > options_.condition_limit) {
    throw Error(ErrorCode::kNumericalFailure,
                "basis condition estimate " + FormatNumber(norm_b * norm_inv) +
                    " exceeds " + FormatNumber(options_.condition_limit));
  }
  binv_ = std::move(inv);
  return true;
}

void Simplex::Refactor() {
  if (!Invert()) {
    throw Error(ErrorCode::kNumericalFailure, "basis became singular");
  }
  ComputeBasicValues();
  since_refactor_ = 0;
}

void Simplex::InitializeColumns() {
  const std::int32_t total = n_ + m_;
  lower_.resize(total);
  upper_.resize(total);
  value_.assign(total, 0.0);
  cost_.assign(total, 0.0);
  state_.assign(total, NonbasicState::kAtLower);
  position_.assign(total, -1);
  basis_.assign(m_, -1);
  for (std::int32_t j = 0; j < n_; ++j) {
    lower_[j] = lp_.col_lower[j];
    upper_[j] = lp_.col_upper[j];
  }
  for (std::int32_t i = 0; i < m_; ++i) {
    lower_[n_ + i] = lp_.row_lower[i];
    upper_[n_ + i] = lp_.row_upper[i];
  }
}

void Simplex::ColdStart() {
  InitializeColumns();
  for (std::int32_t j = 0; j < n_; ++j) {
    if (std::isfinite(lower_[j])) {
      value_[j] = lower_[j];
      state_[j] = NonbasicState::kAtLower;
    } else if (std::isfinite(upper_[j])) {
      value_[j] = upper_[j];
      state_[j] = NonbasicState::kAtUpper;
    } else {
      value_[j] = 0.0;
      state_[j] = NonbasicState::kFree;
    }
  }
  std::vector<double> activity(m_, 0.0);
  for (std::int32_t j = 0; j < n_; ++j) {
    if (value_[j] == 0.0) continue;
    for (std::size_t k = 0; k < col_rows_[j].size(); ++k) {
      activity[col_rows_[j][k]] += col_values_[j][k] * value_[j];
    }
  }
  binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
  for (std::int32_t i = 0; i < m_; ++i) {
    const std::int32_t slack = n_ + i;
    const double r = activity[i];
    const double tol = options_.tolerance;
    if (r >= lower_[slack] - tol && r <= upper_[slack] + tol) {
      basis_[i] = slack;
      position_[slack] = i;
      state_[slack] = NonbasicState::kBasic;
      value_[slack] = r;
      binv_[static_cast<std::size_t>(i) * m_ + i] = -1.0;
      continue;
    }
    // Slack rests at the violated bound; an artificial absorbs the rest.
    const bool below = r < lower_[slack];
    value_[slack] = below ? lower_[slack] : upper_[slack];
    state_[slack] = below ? NonbasicState::kAtLower : NonbasicState::kAtUpper;
    const double sign = below ? 1.0 : -1.0;
    const std::int32_t art = static_cast<std::int32_t>(lower_.size());
    artificial_row_.push_back(i);
    artificial_sign_.push_back(sign);
    lower_.push_back(0.0);
    upper_.push_back(kInf);
    value_.push_back(std::abs(value_[slack] - r));
    cost_.push_back(1.0);
    state_.push_back(NonbasicState::kBasic);
    position_.push_back(i);
    basis_[i] = art;
    binv_[static_cast<std::size_t>(i) * m_ + i] = sign;
  }
}

bool Simplex::WarmStart(const LpBasis& basis) {
  if (static_cast<std::int32_t>(basis.status.size()) != n_ + m_) return false;
  InitializeColumns();
  std::int32_t next = 0;
  for (std::int32_t j = 0; j < n_ + m_; ++j) {
    switch (basis.status[j]) {
      case LpBasis::kBasic:
        if (next >= m_) return false;
        basis_[next] = j;
        position_[j] = next++;
        state_[j] = NonbasicState::kBasic;
        break;
      case LpBasis::kAtLower:
        if (!std::isfinite(lower_[j])) return false;
        value_[j] = lower_[j];
        state_[j] = NonbasicState::kAtLower;
        break;
      case LpBasis::kAtUpper:
        if (!std::isfinite(upper_[j])) return false;
        value_[j] = upper_[j];
        state_[j] = NonbasicState::kAtUpper;
        break;
      case LpBasis::kFreeZero:
        value_[j] = 0.0;
        state_[j] = NonbasicState::kFree;
        break;
    }
  }
  if (next != m_) return false;
  if (!Invert()) return false;
  ComputeBasicValues();
  for (std::int32_t i = 0; i < m_; ++i) {
    const std::int32_t j = basis_[i];
    if (value_[j] < lower_[j] - options_.tolerance ||
        value_[j] > upper_[j] + options_.tolerance) {
      return false;
    }
  }
  return true;
}

std::int32_t Simplex::Price(const std::vector<double>& y,
                            int& direction) const {
  const double tol = options_.tolerance;
  std::int32_t best = -1;
  double best_score = 0.0;
  for (std::int32_t j = 0; j < num_columns(); ++j) {
    const NonbasicState s = state_[j];
    if (s == NonbasicState::kBasic) continue;
    if (lower_[j] == upper_[j]) continue;
    const double d = cost_[j] - DotColumn(j, y);
    int dir = 0;
    if (s == NonbasicState::kAtLower && d < -tol) {
      dir = 1;
    } else if (s == NonbasicState::kAtUpper && d > tol) {
      dir = -1;
    } else if (s == NonbasicState::kFree && std::abs(d) > tol) {
      dir = d < 0 ? 1 : -1;
    }
    if (dir == 0) continue;
    if (bland_) {
      direction = dir;
      return j;
    }
    if (std::abs(d) > best_score) {
      best_score = std::abs(d);
      best = j;
      direction = dir;
    }
  }
  return best;
}

void Simplex::Pivot(std::int32_t r, const std::vector<double>& alpha) {
  const std::size_t m = static_cast<std::size_t>(m_);
  double* pivot_row = &binv_[r * m];
  const double p = alpha[r];
  for (std::size_t k = 0; k < m; ++k) pivot_row[k] /= p;
  for (std::int32_t i = 0; i < m_; ++i) {
    if (i == r || alpha[i] == 0.0) continue;
    double* row = &binv_[i * m];
    const double f = alpha[i];
    for (std::size_t k = 0; k < m; ++k) row[k] -= f * pivot_row[k];
  }
}

LpStatus Simplex::Iterate() {
  std::vector<double> y;
  std::vector<double> alpha;
  const double tol = options_.tolerance;
  for (;;) {
    if (iterations_ >= options_.iteration_limit) {
      return LpStatus::kIterationLimit;
    }
    if (deadline_.Expired()) return LpStatus::kTimeLimit;

    ComputeDuals(y);
    int dir = 0;
    const std::int32_t q = Price(y, dir);
    if (q < 0) return LpStatus::kOptimal;
    Column(q, alpha);

    // Harris two-pass ratio test; Bland mode uses the exact minimum with
    // lowest-index ties.
    double bound_relaxed = kInf;
    for (std::int32_t i = 0; i < m_; ++i) {
      const double a = alpha[i] * dir;
      if (std::abs(a) <= kPivotTolerance) continue;
      const std::int32_t j = basis_[i];
      double ratio;
      if (a > 0) {
        if (!std::isfinite(lower_[j])) continue;
        ratio = (value_[j] - lower_[j] + (bland_ ? 0.0 : tol)) / a;
      } else {
        if (!std::isfinite(upper_[j])) continue;
        ratio = (upper_[j] - value_[j] + (bland_ ? 0.0 : tol)) / -a;
      }
      bound_relaxed = std::min(bound_relaxed, std::max(ratio, 0.0));
    }
    std::int32_t leave = -1;
    double step = kInf;
    double best_pivot = 0.0;
    for (std::int32_t i = 0; i < m_; ++i) {
      const double a = alpha[i] * dir;
      if (std::abs(a) <= kPivotTolerance) continue;
      const std::int32_t j = basis_[i];
      double ratio;
      if (a > 0) {
        if (!std::isfinite(lower_[j])) continue;
        ratio = (value_[j] - lower_[j]) / a;
      } else {
        if (!std::isfinite(upper_[j])) continue;
        ratio = (upper_[j] - value_[j]) / -a;
      }
      ratio = std::max(ratio, 0.0);
      if (ratio > bound_relaxed + 1e-12) continue;
      bool take;
      if (leave < 0) {
        take = true;
      } else if (bland_) {
        take = ratio < step - 1e-12 ||
               (ratio <= step + 1e-12 && j < basis_[leave]);
      } else {
        take = std::abs(a) > best_pivot;
      }
      if (take) {
        leave = i;
        step = ratio;
        best_pivot = std::abs(a);
      }
    }

    const double flip = upper_[q] - lower_[q];
    const bool bound_flip = std::isfinite(flip) && flip <= step;
    if (bound_flip) step = flip;
    if (!std::isfinite(step)) {
      ray_.assign(n_, 0.0);
      if (q < n_) ray_[q] = dir;
      for (std::int32_t i = 0; i < m_; ++i) {
        if (basis_[i] < n_) ray_[basis_[i]] = -alpha[i] * dir;
      }
      return LpStatus::kUnbounded;
    }

    ++iterations_;
    if (bland_) ++bland_pivots_;
    if (step <= tol) {
      if (++degenerate_run_ >= 3LL * (m_ + n_)) bland_ = true;
    } else {
      degenerate_run_ = 0;
      bland_ = false;
    }

    if (step > 0.0) {
      value_[q] += dir * step;
      for (std::int32_t i = 0; i < m_; ++i) {
        value_[basis_[i]] -= alpha[i] * dir * step;
      }
    }
    if (bound_flip) {
      const bool to_upper = dir > 0;
      value_[q] = to_upper ? upper_[q] : lower_[q];
      state_[q] = to_upper ? NonbasicState::kAtUpper : NonbasicState::kAtLower;
      continue;
    }

    const std::int32_t out = basis_[leave];
    const bool hits_lower = alpha[leave] * dir > 0;
    value_[out] = hits_lower ? lower_[out] : upper_[out];
    state_[out] = hits_lower ? NonbasicState::kAtLower : NonbasicState::kAtUpper;
    position_[out] = -1;
    basis_[leave] = q;
    position_[q] = leave;
    state_[q] = NonbasicState::kBasic;
    Pivot(leave, alpha);
    if (++since_refactor_ >= options_.refactor_interval) Refactor();
  }
}

void Simplex::DriveOutArtificials() {
  std::vector<double> alpha;
  for (std::int32_t r = 0; r < m_; ++r) {
    const std::int32_t art = basis_[r];
    if (!IsArtificial(art)) continue;
    const double* binv_row = &binv_[static_cast<std::size_t>(r) * m_];
    std::int32_t best = -1;
    double best_abs = 1e-7;
    for (std::int32_t j = 0; j < n_ + m_; ++j) {
      if (state_[j] == NonbasicState::kBasic) continue;
      double v = 0.0;
      if (j < n_) {
        for (std::size_t k = 0; k < col_rows_[j].size(); ++k) {
          v += binv_row[col_rows_[j][k]] * col_values_[j][k];
        }
      } else {
        v = -binv_row[j - n_];
      }
      if (std::abs(v) > best_abs) {
        best_abs = std::abs(v);
        best = j;
      }
    }
    if (best < 0) continue;  // redundant row; artificial stays at zero
    Column(best, alpha);
    value_[art] = 0.0;
    state_[art] = NonbasicState::kAtLower;
    position_[art] = -1;
    basis_[r] = best;
    position_[best] = r;
    state_[best] = NonbasicState::kBasic;
    Pivot(r, alpha);
  }
  Refactor();
}

LpSolution Simplex::Extract(LpStatus status) {
  LpSolution out;
  out.status = status;
  out.iterations = iterations_;
  out.bland_pivots = bland_pivots_;
  out.x.assign(value_.begin(), value_.begin() + n_);
  out.row_activity.assign(value_.begin() + n_, value_.begin() + n_ + m_);
  double obj = lp_.objective_offset;
  for (std::int32_t j = 0; j < n_; ++j) obj += lp_.objective[j] * out.x[j];
  out.objective = obj;
  if (status == LpStatus::kUnbounded) out.ray = ray_;

  std::vector<double> y;
  ComputeDuals(y);
  out.duals = y;
  out.reduced_costs.resize(n_);
  for (std::int32_t j = 0; j < n_; ++j) {
    out.reduced_costs[j] = cost_[j] - DotColumn(j, y);
  }

  bool pure = true;
  for (std::int32_t i = 0; i < m_; ++i) pure = pure && !IsArtificial(basis_[i]);
  if (pure) {
    out.basis.status.resize(n_ + m_);
    for (std::int32_t j = 0; j < n_ + m_; ++j) {
      switch (state_[j]) {
        case NonbasicState::kBasic: out.basis.status[j] = LpBasis::kBasic; break;
        case NonbasicState::kAtLower: out.basis.status[j] = LpBasis::kAtLower; break;
        case NonbasicState::kAtUpper: out.basis.status[j] = LpBasis::kAtUpper; break;
        case NonbasicState::kFree: out.basis.status[j] = LpBasis::kFreeZero; break;
      }
    }
  }
  return out;
}

LpSolution Simplex::Run() {
  if (deadline_.immediate()) {
    LpSolution out;
    out.status = LpStatus::kTimeLimit;
    return out;
  }
  bool warm = options_.warm_start != nullptr && WarmStart(*options_.warm_start);
  if (!warm) {
    artificial_row_.clear();
    artificial_sign_.clear();
    ColdStart();
  }

  double infeasibility = 0.0;
  if (!artificial_row_.empty()) {
    LpStatus phase_one = Iterate();
    for (std::int32_t j = n_ + m_; j < num_columns(); ++j) {
      infeasibility += value_[j];
    }
    if (phase_one != LpStatus::kOptimal) {
      LpSolution out = Extract(phase_one);
      out.infeasibility = infeasibility;
      return out;
    }
    if (infeasibility > kPhaseOneTolerance) {
      LpSolution out = Extract(LpStatus::kInfeasible);
      out.infeasibility = infeasibility;
      return out;
    }
    for (std::int32_t j = n_ + m_; j < num_columns(); ++j) {
      upper_[j] = 0.0;
      cost_[j] = 0.0;
      if (state_[j] != NonbasicState::kBasic) value_[j] = 0.0;
    }
    DriveOutArtificials();
    bland_ = false;
    degenerate_run_ = 0;
  }

  for (std::int32_t j = 0; j < n_; ++j) cost_[j] = lp_.objective[j];
  LpStatus status = Iterate();
  if (status == LpStatus::kOptimal) Refactor();
  LpSolution out = Extract(status);
  out.primal_feasible = true;
  out.infeasibility = infeasibility;
  return out;
}

}  // namespace

LpSolution SolveLp(const LpData& lp, const LpOptions& options) {
  Simplex simplex(lp, options);
  return simplex.Run();
}

LpData BuildLp(const ModelImage& image, LpMapping* mapping) {
  LpData lp;
  LpMapping local;
  LpMapping& map = mapping != nullptr ? *mapping : local;
  map = LpMapping{};
  map.variable_column.assign(image.variable_slots(), -1);
  map.constraint_row.assign(image.constraint_slots(), -1);

  const ObjectiveData& objective = image.objective();
  map.maximize = objective.sense == ObjectiveSense::kMaximize;
  const double sign = map.maximize ? -1.0 : 1.0;

  for (std::int64_t v : image.LiveVariables()) {
    auto [lo, hi] = image.EffectiveBounds(v);
    map.variable_column[v] = lp.AddColumn(lo, hi, 0.0);
    map.column_variable.push_back(v);
  }
  for (const LinearTerm& t : objective.function.affine.terms) {
    lp.objective[map.variable_column[t.variable]] += sign * t.coefficient;
  }
  lp.objective_offset = sign * objective.function.affine.constant;

  for (std::int64_t c : image.LiveConstraints()) {
    const ConstraintData& data = image.constraint(c);
    const SetTag tag = TagOf(data.set);
    if (IsIntegralitySet(tag)) continue;
    const auto* f = std::get_if<ScalarAffineFunction>(&data.function);
    if (f == nullptr || !IsLinearSet(tag)) {
      throw Error(ErrorCode::kUnsupportedConstraint,
                  std::string(FunctionKindName(KindOf(data.function))) +
                      "-in-" + SetName(data.set) +
                      " cannot be part of a linear program");
    }
    SparseRow row;
    row.columns.reserve(f->terms.size());
    row.values.reserve(f->terms.size());
    for (const LinearTerm& t : f->terms) {
      row.columns.push_back(map.variable_column[t.variable]);
      row.values.push_back(t.coefficient);
    }
    map.constraint_row[c] = lp.num_rows();
    map.row_constraint.push_back(c);
    lp.AddRow(std::move(row), SetLower(data.set) - f->constant,
              SetUpper(data.set) - f->constant);
  }
  return lp;
}

LpIis ComputeLpIis(const LpData& lp, const LpOptions& options) {
  LpData work = lp;
  std::fill(work.objective.begin(), work.objective.end(), 0.0);
  work.objective_offset = 0.0;
  auto infeasible = [&work, &options]() {
    return SolveLp(work, options).status == LpStatus::kInfeasible;
  };
  if (!infeasible()) {
    throw Error(ErrorCode::kNotInfeasible, "the problem has a feasible point");
  }
  LpIis iis;
  for (std::int32_t i = 0; i < work.num_rows(); ++i) {
    const double lo = work.row_lower[i];
    const double hi = work.row_upper[i];
    if (std::isinf(lo) && std::isinf(hi)) continue;
    work.row_lower[i] = -kInf;
    work.row_upper[i] = kInf;
    if (!infeasible()) {
      work.row_lower[i] = lo;
      work.row_upper[i] = hi;
      iis.rows.push_back(i);
    }
  }
  for (std::int32_t j = 0; j < work.num_cols; ++j) {
    const double lo = work.col_lower[j];
    if (std::isfinite(lo)) {
      work.col_lower[j] = -kInf;
      if (!infeasible()) {
        work.col_lower[j] = lo;
        iis.bounds.push_back({j, false});
      }
    }
    const double hi = work.col_upper[j];
    if (std::isfinite(hi)) {
      work.col_upper[j] = kInf;
      if (!infeasible()) {
        work.col_upper[j] = hi;
        iis.bounds.push_back({j, true});
      }
    }
  }
  return iis;
}

SimplexBackend::SimplexBackend() {
  capabilities_.incremental = true;
  capabilities_.supports_constraint = [](FunctionKind kind,
                                         const ConstraintSet& set) {
    return kind == FunctionKind::kScalarAffine && IsLinearSet(TagOf(set));
  };
  capabilities_.supports_attribute = [](const AttributeKey& key) {
    return key.scope == AttributeScope::kOptimizer &&
           (key.name == "time_limit" || key.name == "iteration_limit" ||
            key.name == "verbose");
  };
  capabilities_.provides_duals = true;
  capabilities_.supports_iis = true;
  capabilities_.max_results = 1;
}

SolveResults SimplexBackend::Solve() {
  SolveResults out;
  const double time_limit = RealOption("time_limit", kInf);
  if (time_limit <= 0.0) {
    out.termination = TerminationStatus::kTimeLimit;
    out.raw_status = "time limit reached before phase 1";
    return out;
  }
  LpMapping map;
  LpData lp = BuildLp(image_, &map);
  LpOptions options;
  options.time_limit = time_limit;
  options.iteration_limit =
      IntOption("iteration_limit", std::numeric_limits<std::int64_t>::max());
  LpSolution s = SolveLp(lp, options);
  out.iterations = s.iterations;
  out.raw_status = std::string(ToString(s.status));

  const double sign = map.maximize ? -1.0 : 1.0;
  auto to_slots = [&](const std::vector<double>& columns) {
    std::vector<double> values(image_.variable_slots(), 0.0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      values[map.column_variable[j]] = columns[j];
    }
    return values;
  };

  switch (s.status) {
    case LpStatus::kOptimal: {
      out.termination = TerminationStatus::kOptimal;
      PrimalResult primal;
      primal.values = to_slots(s.x);
      primal.objective = sign * s.objective;
      primal.status = ResultStatus::kFeasiblePoint;
      out.primal.push_back(std::move(primal));
      out.objective_bound = sign * s.objective;
      out.dual_status = ResultStatus::kFeasiblePoint;
      out.duals.assign(image_.constraint_slots(),
                       std::numeric_limits<double>::quiet_NaN());
      for (std::size_t i = 0; i < s.duals.size(); ++i) {
        out.duals[map.row_constraint[i]] = s.duals[i];
      }
      out.reduced_costs = to_slots(s.reduced_costs);
      break;
    }
    case LpStatus::kInfeasible:
      out.termination = TerminationStatus::kInfeasible;
      out.raw_status += ", phase-1 objective " + FormatNumber(s.infeasibility);
      break;
    case LpStatus::kUnbounded: {
      out.termination = TerminationStatus::kDualInfeasible;
      PrimalResult ray;
      ray.values = to_slots(s.ray);
      double slope = 0.0;
      for (std::size_t j = 0; j < s.ray.size(); ++j) {
        slope += lp.objective[j] * s.ray[j];
      }
      ray.objective = sign * slope;
      ray.status = ResultStatus::kInfeasibilityCertificate;
      out.primal.push_back(std::move(ray));
      break;
    }
    case LpStatus::kIterationLimit:
    case LpStatus::kTimeLimit:
      out.termination = s.status == LpStatus::kTimeLimit
                            ? TerminationStatus::kTimeLimit
                            : TerminationStatus::kIterationLimit;
      if (s.primal_feasible) {
        PrimalResult primal;
        primal.values = to_slots(s.x);
        primal.objective = sign * s.objective;
        primal.status = ResultStatus::kFeasiblePoint;
        out.primal.push_back(std::move(primal));
      }
      break;
  }
  if (BoolOption("verbose", false)) {
    std::clog << "simplex: " << out.raw_status << " after " << s.iterations
              << " iterations\n";
  }
  return out;
}

IisResult SimplexBackend::ComputeIis() {
  LpMapping map;
  LpData lp = BuildLp(image_, &map);
  LpIis iis = ComputeLpIis(lp);
  IisResult out;
  for (std::int32_t r : iis.rows) out.constraints.push_back(map.row_constraint[r]);
  for (auto [column, upper] : iis.bounds) {
    out.bounds.push_back({map.column_variable[column], upper});
  }
  return out;
}

OptimizerFactory SimplexOptimizer() {
  return OptimizerFactory([] { return std::make_unique<SimplexBackend>(); });
}

}  // namespace amodel
