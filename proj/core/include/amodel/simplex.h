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

// Two-phase bounded-variable revised simplex with a dense basis inverse.
//
// Problems are stated as
//   minimize    c'x + c0
//   subject to  row_lower <= A x <= row_upper
//               col_lower <=  x  <= col_upper
// and solved in the form A x - s = 0 with one slack s_i per row carrying
// the row bounds. Rows whose slack cannot absorb the initial activity get an
// artificial column for phase 1.

#ifndef AMODEL_SIMPLEX_H_
#define AMODEL_SIMPLEX_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amodel/backend.h"
#include "amodel/model_image.h"

namespace amodel {

struct SparseRow {
  std::vector<std::int32_t> columns;
  std::vector<double> values;
};

struct LpData {
  std::int32_t num_cols = 0;
  std::vector<double> objective;
  double objective_offset = 0.0;
  std::vector<double> col_lower;
  std::vector<double> col_upper;
  std::vector<SparseRow> rows;
  std::vector<double> row_lower;
  std::vector<double> row_upper;

  std::int32_t num_rows() const {
    return static_cast<std::int32_t>(rows.size());
  }
  std::int32_t AddColumn(double lower, double upper, double cost);
  void AddRow(SparseRow row, double lower, double upper);
};

enum class LpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kIterationLimit,
  kTimeLimit,
};

std::string_view ToString(LpStatus status);

// Status of each of the num_cols + num_rows columns (structurals, then
// slacks) at the end of a solve; usable as a warm start for a problem with
// the same rows and columns.
struct LpBasis {
  enum Status : std::int8_t { kBasic, kAtLower, kAtUpper, kFreeZero };
  std::vector<Status> status;
};

struct LpOptions {
  double tolerance = 1e-8;
  std::int64_t iteration_limit = INT64_MAX;
  double time_limit = kInf;
  std::int32_t refactor_interval = 50;
  double condition_limit = 1e12;
  const LpBasis* warm_start = nullptr;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  bool primal_feasible = false;  // x satisfies all bounds and rows
  std::vector<double> x;
  std::vector<double> row_activity;
  // d(objective)/d(row bound) of the active side; >= 0 for active lower
  // bounds, <= 0 for active upper bounds.
  std::vector<double> duals;
  std::vector<double> reduced_costs;
  double objective = 0.0;
  // Improving direction of the structurals when kUnbounded.
  std::vector<double> ray;
  // Phase-1 sum of artificials at termination.
  double infeasibility = 0.0;
  std::int64_t iterations = 0;
  std::int64_t bland_pivots = 0;
  LpBasis basis;
};

// Raises NumericalFailure when the basis becomes singular or its condition
// estimate exceeds options.condition_limit.
LpSolution SolveLp(const LpData& lp, const LpOptions& options = {});

// Column/row correspondence between a ModelImage and the LpData built from
// it. Dead slots map to -1.
struct LpMapping {
  std::vector<std::int64_t> column_variable;  // column -> variable slot
  std::vector<std::int64_t> row_constraint;   // row -> constraint slot
  std::vector<std::int32_t> variable_column;  // variable slot -> column
  std::vector<std::int32_t> constraint_row;   // constraint slot -> row
  bool maximize = false;                      // objective was negated
};

// Columns for live variables (effective bounds, integrality ignored) and a
// row per live linear constraint. The linear part of the objective becomes
// c (negated for Maximize). Raises UnsupportedConstraint for any other
// constraint.
LpData BuildLp(const ModelImage& image, LpMapping* mapping);

// Deletion filter over rows, then finite column lower bounds and upper
// bounds, each in index order. Returns kept row indices and (column, upper)
// bound pairs. Raises NotInfeasible if the problem is feasible.
struct LpIis {
  std::vector<std::int32_t> rows;
  std::vector<std::pair<std::int32_t, bool>> bounds;
};
LpIis ComputeLpIis(const LpData& lp, const LpOptions& options = {});

// Reference LP backend.
class SimplexBackend : public ImageBackend {
 public:
  SimplexBackend();

  std::string name() const override { return "simplex"; }
  const BackendCapabilities& capabilities() const override {
    return capabilities_;
  }
  IisResult ComputeIis() override;

 protected:
  SolveResults Solve() override;

 private:
  BackendCapabilities capabilities_;
};

OptimizerFactory SimplexOptimizer();

}  // namespace amodel

#endif  // AMODEL_SIMPLEX_H_
