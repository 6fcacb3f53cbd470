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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "amodel/model.h"
#include "expect_error.h"
#include "fixtures.h"
#include "oracles.h"

namespace amodel {
namespace {

using ::amodel::testing::BuildTwoVariableLp;
using ::amodel::testing::Inequality;
using ::amodel::testing::Member;
using ::amodel::testing::MinimalInfeasibleSubsets;
using ::amodel::testing::Rng;

LpData TwoVariableLpData() {
  LpData lp;
  lp.AddColumn(0, kInf, 12);
  lp.AddColumn(0, 3, 20);
  lp.AddRow({{0, 1}, {6, 8}}, 100, kInf);
  lp.AddRow({{0, 1}, {7, 12}}, 120, kInf);
  return lp;
}

TEST(SimplexTest, BuildLpShapesTwoVariableLp) {
  Model model;
  BuildTwoVariableLp(model);
  LpMapping map;
  LpData lp = BuildLp(model.image(), &map);
  EXPECT_EQ(lp.num_cols, 2);
  EXPECT_EQ(lp.num_rows(), 2);
  EXPECT_FALSE(map.maximize);
  EXPECT_EQ(map.row_constraint.size(), 2u);
}

TEST(SimplexTest, TwoVariableLpOptimumAndDuals) {
  LpSolution s = SolveLp(TwoVariableLpData());
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.x[0], 15.0, 1e-8);
  EXPECT_NEAR(s.x[1], 1.25, 1e-8);
  EXPECT_NEAR(s.objective, 205.0, 1e-8);
  EXPECT_NEAR(s.duals[0], 0.25, 1e-8);
  EXPECT_NEAR(s.duals[1], 1.5, 1e-8);
  EXPECT_TRUE(s.primal_feasible);
}

TEST(SimplexTest, InfeasibleReportsPhaseOneObjective) {
  LpData lp;
  lp.AddColumn(-kInf, kInf, 0);
  lp.AddRow({{0}, {1}}, 1, kInf);
  lp.AddRow({{0}, {1}}, -kInf, 0);
  LpSolution s = SolveLp(lp);
  EXPECT_EQ(s.status, LpStatus::kInfeasible);
  EXPECT_NEAR(s.infeasibility, 1.0, 1e-9);
}

TEST(SimplexTest, UnboundedReturnsRay) {
  LpData lp;
  lp.AddColumn(0, kInf, -1);
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kUnbounded);
  ASSERT_EQ(s.ray.size(), 1u);
  EXPECT_GT(s.ray[0], 0.0);
}

TEST(SimplexTest, IntervalRows) {
  LpData lp;
  lp.AddColumn(-kInf, kInf, 1);
  lp.AddColumn(-kInf, kInf, 1);
  lp.AddRow({{0, 1}, {1, -1}}, -1, 1);
  lp.AddRow({{0, 1}, {1, 1}}, 2, 4);
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, 2.0, 1e-9);
}

TEST(SimplexTest, TimeLimitZeroStopsBeforePhaseOne) {
  LpOptions options;
  options.time_limit = 0.0;
  EXPECT_EQ(SolveLp(TwoVariableLpData(), options).status, LpStatus::kTimeLimit);
}

TEST(SimplexTest, IterationLimit) {
  LpOptions options;
  options.iteration_limit = 0;
  EXPECT_EQ(SolveLp(TwoVariableLpData(), options).status,
            LpStatus::kIterationLimit);
}

TEST(SimplexTest, WarmStartReachesSameOptimum) {
  LpData lp = TwoVariableLpData();
  LpSolution cold = SolveLp(lp);
  lp.objective = {13, 20};
  LpOptions options;
  options.warm_start = &cold.basis;
  LpSolution warm = SolveLp(lp, options);
  LpSolution fresh = SolveLp(lp);
  ASSERT_EQ(warm.status, LpStatus::kOptimal);
  EXPECT_NEAR(warm.objective, fresh.objective, 1e-9);
  EXPECT_LE(warm.iterations, fresh.iterations);
}

// Degenerate cycling example (Beale); the solver must still terminate.
TEST(SimplexTest, DegenerateProblemTerminates) {
  LpData lp;
  lp.AddColumn(0, kInf, -0.75);
  lp.AddColumn(0, kInf, 150);
  lp.AddColumn(0, kInf, -0.02);
  lp.AddColumn(0, kInf, 6);
  lp.AddRow({{0, 1, 2, 3}, {0.25, -60, -0.04, 9}}, -kInf, 0);
  lp.AddRow({{0, 1, 2, 3}, {0.5, -90, -0.02, 3}}, -kInf, 0);
  lp.AddRow({{2}, {1}}, -kInf, 1);
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_NEAR(s.objective, -0.05, 1e-9);
}

TEST(SimplexTest, BackendRejectsPsdCone) {
  Model model;
  std::vector<VariableRef> m = model.AddVariables(2);
  model.AddConstraint(std::vector<std::vector<AffExpr>>{{AffExpr(m[0]), AffExpr(m[1])},
                                                        {AffExpr(m[1]), AffExpr(m[0])}},
                      PsdCone{2});
  SimplexBackend backend;
  EXPECT_ERROR(backend.Load(model.image()), ErrorCode::kUnsupportedConstraint);
}

TEST(SimplexTest, BackendAcceptsEmptyModel) {
  SimplexBackend backend;
  backend.Load(ModelImage());
  backend.Optimize();
  EXPECT_EQ(backend.results().termination, TerminationStatus::kOptimal);
  EXPECT_EQ(backend.results().primal[0].objective, 0.0);
}

TEST(SimplexTest, BackendApplyEqualsLoad) {
  Model staged;
  BuildTwoVariableLp(staged);
  SimplexBackend incremental;
  incremental.Load(ModelImage());
  incremental.Apply(AddVariableDelta{{0, kInf, Integrality::kContinuous, "x"}});
  incremental.Apply(AddVariableDelta{{0, 3, Integrality::kContinuous, "y"}});
  ObjectiveData objective;
  objective.function.affine.terms = {{0, 12}, {1, 20}};
  incremental.Apply(SetObjectiveDelta{objective});
  incremental.Apply(AddConstraintDelta{{ScalarAffineFunction{{{0, 6}, {1, 8}}, 0},
                                        GreaterEqual{100}, "c1"}});
  incremental.Apply(AddConstraintDelta{{ScalarAffineFunction{{{0, 7}, {1, 12}}, 0},
                                        GreaterEqual{120}, "c2"}});
  SimplexBackend loaded;
  loaded.Load(staged.image());
  EXPECT_EQ(incremental.StateDigest(), loaded.StateDigest());
  EXPECT_ERROR(incremental.Apply(DeleteConstraintDelta{7}),
               ErrorCode::kStaleReference);
}

std::vector<std::vector<int>> Sorted(std::vector<std::vector<int>> sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

// Members are the rows of `lp`; variable bounds are left infinite.
std::vector<Member> RowMembers(const LpData& lp) {
  std::vector<Member> members;
  for (std::int32_t i = 0; i < lp.num_rows(); ++i) {
    std::vector<double> a(lp.num_cols, 0.0);
    for (std::size_t k = 0; k < lp.rows[i].columns.size(); ++k) {
      a[lp.rows[i].columns[k]] = lp.rows[i].values[k];
    }
    Member m;
    if (std::isfinite(lp.row_upper[i])) m.rows.push_back({a, lp.row_upper[i]});
    if (std::isfinite(lp.row_lower[i])) {
      std::vector<double> neg(a.size());
      std::transform(a.begin(), a.end(), neg.begin(), [](double v) { return -v; });
      m.rows.push_back({neg, -lp.row_lower[i]});
    }
    members.push_back(std::move(m));
  }
  return members;
}

void ExpectIisIsEnumeratedMinimal(const LpData& lp) {
  LpIis iis = ComputeLpIis(lp);
  EXPECT_TRUE(iis.bounds.empty());
  std::vector<int> got(iis.rows.begin(), iis.rows.end());
  std::sort(got.begin(), got.end());
  const auto minimal = Sorted(MinimalInfeasibleSubsets(RowMembers(lp), lp.num_cols));
  EXPECT_NE(std::find(minimal.begin(), minimal.end(), got), minimal.end());
  // Dropping any single member restores feasibility.
  for (std::size_t drop = 0; drop < got.size(); ++drop) {
    LpData reduced;
    reduced.num_cols = lp.num_cols;
    reduced.objective.assign(lp.num_cols, 0.0);
    reduced.col_lower = lp.col_lower;
    reduced.col_upper = lp.col_upper;
    for (std::size_t k = 0; k < got.size(); ++k) {
      if (k != drop) reduced.AddRow(lp.rows[got[k]], lp.row_lower[got[k]], lp.row_upper[got[k]]);
    }
    EXPECT_EQ(SolveLp(reduced).status, LpStatus::kOptimal) << "drop " << drop;
  }
}

TEST(SimplexTest, IisOfContradictoryBounds) {
  LpData lp;
  lp.AddColumn(-kInf, kInf, 0);
  lp.AddColumn(-kInf, kInf, 0);
  lp.AddRow({{0}, {1}}, 1, kInf);
  lp.AddRow({{0}, {1}}, -kInf, 0);
  lp.AddRow({{1}, {1}}, 0, kInf);
  ExpectIisIsEnumeratedMinimal(lp);
  EXPECT_EQ(ComputeLpIis(lp).rows.size(), 2u);
}

TEST(SimplexTest, IisOfCoveringRow) {
  LpData lp;
  lp.AddColumn(-kInf, kInf, 0);
  lp.AddColumn(-kInf, kInf, 0);
  lp.AddRow({{0, 1}, {1, 1}}, 3, kInf);
  lp.AddRow({{0}, {1}}, -kInf, 1);
  lp.AddRow({{1}, {1}}, -kInf, 1);
  lp.AddRow({{0}, {1}}, 0, kInf);
  ExpectIisIsEnumeratedMinimal(lp);
  EXPECT_EQ(ComputeLpIis(lp).rows.size(), 3u);
}

TEST(SimplexTest, IisIncludesBounds) {
  LpData lp;
  lp.AddColumn(0, 1, 0);
  lp.AddColumn(0, 1, 0);
  lp.AddRow({{0, 1}, {1, 1}}, 3, kInf);
  LpIis iis = ComputeLpIis(lp);
  EXPECT_EQ(iis.rows, std::vector<std::int32_t>{0});
  ASSERT_EQ(iis.bounds.size(), 2u);
  for (const auto& [column, upper] : iis.bounds) EXPECT_TRUE(upper) << column;
}

TEST(SimplexTest, IisOfFeasibleRaises) {
  EXPECT_ERROR(ComputeLpIis(TwoVariableLpData()), ErrorCode::kNotInfeasible);
}

// Random infeasible systems: the returned set is one of the enumerated
// minimal infeasible subsets.
TEST(SimplexTest, PropertyIisOnRandomSystems) {
  Rng rng(41);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    LpData lp;
    const int n = static_cast<int>(rng.Int(1, 3));
    for (int j = 0; j < n; ++j) lp.AddColumn(-kInf, kInf, 0);
    const int m = static_cast<int>(rng.Int(2, 5));
    for (int i = 0; i < m; ++i) {
      SparseRow row;
      for (int j = 0; j < n; ++j) {
        const double v = static_cast<double>(rng.Int(-2, 2));
        if (v != 0) {
          row.columns.push_back(j);
          row.values.push_back(v);
        }
      }
      if (row.columns.empty()) continue;
      const double rhs = static_cast<double>(rng.Int(-3, 3));
      if (rng.Bernoulli(0.5)) {
        lp.AddRow(std::move(row), -kInf, rhs);
      } else {
        lp.AddRow(std::move(row), rhs, kInf);
      }
    }
    if (SolveLp(lp).status != LpStatus::kInfeasible) continue;
    ++checked;
    ExpectIisIsEnumeratedMinimal(lp);
  }
  EXPECT_GE(checked, 10);
}

}  // namespace
}  // namespace amodel
