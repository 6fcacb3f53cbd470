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

#include "amodel/qp.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "amodel/model.h"
#include "expect_error.h"
#include "fixtures.h"
#include "oracles.h"

namespace amodel {
namespace {

using ::amodel::testing::BuildRegressionModel;
using ::amodel::testing::MakeRegressionData;
using ::amodel::testing::RegressionData;
using ::amodel::testing::Rng;
using ::amodel::testing::SimplexLeastSquares;

TEST(QpTest, ValidatePsdExamples) {
  EXPECT_TRUE(ValidatePsd({1, 0, 0, 1}, 2));
  EXPECT_FALSE(ValidatePsd({0, 1, 1, 0}, 2));
  EXPECT_TRUE(ValidatePsd({0, 0, 0, 0}, 2));
  EXPECT_ERROR(ValidatePsd({1, 2, 0, 1}, 2), ErrorCode::kNotSymmetric);
}

TEST(QpTest, PropertyGramMatricesArePsd) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.Int(1, 6));
    const int m = static_cast<int>(rng.Int(1, 6));
    std::vector<double> a(static_cast<std::size_t>(m) * n);
    for (double& v : a) v = rng.Uniform(-1, 1);
    std::vector<double> gram(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) gram[i * n + j] += a[k * n + i] * a[k * n + j];
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) gram[i * n + j] = gram[j * n + i];
    }
    EXPECT_TRUE(ValidatePsd(gram, n));
  }
}

TEST(QpTest, SquareOnIntervalStopsAtVertex) {
  Model model(QpOptimizer());
  VariableRef x = model.AddVariable(1, 2, Integrality::kContinuous, "x");
  model.SetObjective(ObjectiveSense::kMinimize, x * x);
  model.Optimize();
  ASSERT_EQ(model.termination_status(), TerminationStatus::kLocallySolved);
  EXPECT_NEAR(model.Value(x), 1.0, 1e-12);
  EXPECT_NEAR(model.ObjectiveValue(), 1.0, 1e-12);
  EXPECT_EQ(model.raw_status(), "frank-wolfe gap 0");
}

TEST(QpTest, SymmetricSimplexProblem) {
  Model model(QpOptimizer());
  VariableRef x = model.AddVariable(0, kInf);
  VariableRef y = model.AddVariable(0, kInf);
  model.AddConstraint(x + y, EqualTo{1});
  QuadExpr f = Multiply(x - 0.3, x - 0.3) + Multiply(y - 0.3, y - 0.3);
  model.SetObjective(ObjectiveSense::kMinimize, f);
  model.Optimize();
  ASSERT_EQ(model.termination_status(), TerminationStatus::kLocallySolved);
  EXPECT_NEAR(model.Value(x), 0.5, 1e-6);
  EXPECT_NEAR(model.Value(y), 0.5, 1e-6);
}

TEST(QpTest, MaximizeConcave) {
  Model model(QpOptimizer());
  VariableRef x = model.AddVariable(0, 4);
  model.SetObjective(ObjectiveSense::kMaximize, 4 * x - x * x);
  model.Optimize();
  ASSERT_EQ(model.termination_status(), TerminationStatus::kLocallySolved);
  EXPECT_NEAR(model.Value(x), 2.0, 1e-4);
  EXPECT_NEAR(model.ObjectiveValue(), 4.0, 1e-7);
}

TEST(QpTest, NonConvexRejected) {
  Model model(QpOptimizer());
  VariableRef x = model.AddVariable(0, 1);
  VariableRef y = model.AddVariable(0, 1);
  model.SetObjective(ObjectiveSense::kMinimize, x * y);
  EXPECT_ERROR(model.Optimize(), ErrorCode::kNotConvex);
}

TEST(QpTest, UnboundedDomainRejected) {
  Model model(QpOptimizer());
  VariableRef x = model.AddVariable(0, kInf);
  model.SetObjective(ObjectiveSense::kMinimize, x * x);
  EXPECT_ERROR(model.Optimize(), ErrorCode::kUnboundedDomain);
}

TEST(QpTest, InfeasibleDomain) {
  Model model(QpOptimizer());
  VariableRef x = model.AddVariable(0, 1);
  model.AddConstraint(AffExpr(x), GreaterEqual{2});
  model.SetObjective(ObjectiveSense::kMinimize, x * x);
  model.Optimize();
  EXPECT_EQ(model.termination_status(), TerminationStatus::kInfeasible);
  EXPECT_EQ(model.result_count(), 0);
}

TEST(QpTest, IterationAndTimeLimits) {
  const RegressionData data = MakeRegressionData(30, 20, testing::kRegressionSeed);
  {
    Model model(OptimizerWithAttributes(QpOptimizer(), {{"max_iter", std::int64_t{3}}}));
    BuildRegressionModel(model, data);
    model.Optimize();
    EXPECT_EQ(model.termination_status(), TerminationStatus::kIterationLimit);
    EXPECT_EQ(model.result_count(), 1);
  }
  {
    Model model(OptimizerWithAttributes(QpOptimizer(), {{"time_limit", 0.0}}));
    BuildRegressionModel(model, data);
    model.Optimize();
    EXPECT_EQ(model.termination_status(), TerminationStatus::kTimeLimit);
    EXPECT_EQ(model.result_count(), 0);
  }
}

// Builds the simplex least-squares problem directly for trace access.
QpProblem LeastSquaresProblem(const RegressionData& d) {
  QpProblem p;
  LpData& lp = p.polytope;
  for (int j = 0; j < d.cols; ++j) lp.AddColumn(0, 1, 0);
  SparseRow sum;
  for (int j = 0; j < d.cols; ++j) {
    sum.columns.push_back(j);
    sum.values.push_back(1);
  }
  lp.AddRow(sum, 1, 1);
  // f(x) = x'(A'A)x - 2 (A'y)'x + y'y, so Q = 2 A'A and c = -2 A'y.
  p.c.assign(d.cols, 0.0);
  p.c0 = 0.0;
  for (int i = 0; i < d.rows; ++i) p.c0 += d.y[i] * d.y[i];
  for (int j = 0; j < d.cols; ++j) {
    for (int i = 0; i < d.rows; ++i) p.c[j] -= 2 * d.a[i * d.cols + j] * d.y[i];
    for (int k = j; k < d.cols; ++k) {
      double g = 0.0;
      for (int i = 0; i < d.rows; ++i) g += d.a[i * d.cols + j] * d.a[i * d.cols + k];
      p.q.push_back({j, k, 2 * g});
    }
  }
  return p;
}

// Monotone objective, gap bounding suboptimality, and feasible output on
// random instances, checked against the projected-gradient oracle.
TEST(QpTest, PropertyDescentAndGapSoundness) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const RegressionData d = MakeRegressionData(8, 5, seed);
    const auto oracle = SimplexLeastSquares(d.rows, d.cols, d.a, d.y, 1e-13);
    FwOptions options;
    options.record_trace = true;
    options.tolerance = 1e-6;
    const FwResult r = SolveFrankWolfe(LeastSquaresProblem(d), options);
    ASSERT_TRUE(r.status == FwStatus::kConverged || r.status == FwStatus::kIterationLimit)
        << seed;
    if (r.status == FwStatus::kConverged) {
      EXPECT_LE(r.gap, options.tolerance) << seed;
    }
    for (std::size_t k = 1; k < r.objective_trace.size(); ++k) {
      EXPECT_LE(r.objective_trace[k], r.objective_trace[k - 1] + 1e-12) << seed;
    }
    for (std::size_t k = 0; k < r.gap_trace.size(); ++k) {
      EXPECT_GE(r.gap_trace[k], r.objective_trace[k] - oracle.objective - 1e-9)
          << "seed " << seed << " iteration " << k;
    }
    EXPECT_NEAR(std::accumulate(r.x.begin(), r.x.end(), 0.0), 1.0, 1e-8);
    for (double v : r.x) {
      EXPECT_GE(v, -1e-8);
      EXPECT_LE(v, 1 + 1e-8);
    }
    EXPECT_LE(r.objective - oracle.objective, r.gap + 1e-9) << seed;
    EXPECT_GE(r.objective - oracle.objective, -1e-9) << seed;
  }
}

TEST(QpTest, RegressionMatchesProjectedGradient) {
  const RegressionData data = MakeRegressionData(30, 20, testing::kRegressionSeed);
  Model model(QpOptimizer());
  testing::RegressionModel vars = BuildRegressionModel(model, data);
  model.Optimize();
  ASSERT_EQ(model.termination_status(), TerminationStatus::kLocallySolved);
  const auto oracle = SimplexLeastSquares(data.rows, data.cols, data.a, data.y, 1e-12);
  EXPECT_NEAR(model.ObjectiveValue(), oracle.objective, 1e-5 * oracle.objective);
  double total = 0.0;
  for (VariableRef v : vars.x) {
    const double value = model.Value(v);
    total += value;
    EXPECT_GE(value, -1e-8);
    EXPECT_LE(value, 1 + 1e-8);
  }
  EXPECT_NEAR(total, 1.0, 1e-8);
  EXPECT_LE(model.SolveTime(), 60.0);
}

}  // namespace
}  // namespace amodel
