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

#include "amodel/milp.h"

#include <gtest/gtest.h>

#include "amodel/model.h"
#include "amodel/simplex.h"
#include "expect_error.h"
#include "fixtures.h"

namespace amodel {
namespace {

using ::amodel::testing::BuildTwoVariableLp;

TEST(MilpTest, KnapsackOptimum) {
  Model model(MilpOptimizer());
  std::vector<VariableRef> v = model.AddVariables(3, 0, 1, Integrality::kBinary, "v");
  model.SetObjective(ObjectiveSense::kMaximize, 5 * v[0] + 4 * v[1] + 3 * v[2]);
  model.AddConstraint(2 * v[0] + 3 * v[1] + 4 * v[2], LessEqual{6});
  model.Optimize();
  ASSERT_EQ(model.termination_status(), TerminationStatus::kOptimal);
  EXPECT_NEAR(model.ObjectiveValue(1), 9.0, 1e-9);
  EXPECT_NEAR(model.Value(v[0]), 1.0, 1e-9);
  EXPECT_NEAR(model.Value(v[1]), 1.0, 1e-9);
  EXPECT_NEAR(model.Value(v[2]), 0.0, 1e-9);
  EXPECT_NEAR(model.ObjectiveBound(), 9.0, 1e-6);
}

TEST(MilpTest, PoolIsBestFirst) {
  Model model(MilpOptimizer());
  VariableRef x = model.AddVariable(0, 3, Integrality::kInteger, "x");
  model.SetObjective(ObjectiveSense::kMaximize, AffExpr(x));
  model.Optimize();
  ASSERT_GE(model.result_count(), 1);
  EXPECT_NEAR(model.Value(x, 1), 3.0, 1e-9);
  EXPECT_NEAR(model.ObjectiveValue(1), 3.0, 1e-9);
  for (std::int64_t r = 2; r <= model.result_count(); ++r) {
    EXPECT_LE(model.ObjectiveValue(r), model.ObjectiveValue(r - 1));
  }
  EXPECT_ERROR(model.Value(x, model.result_count() + 1),
               ErrorCode::kResultIndexOutOfRange);
}

TEST(MilpTest, PoolHoldsEarlierIncumbents) {
  Model model(MilpOptimizer());
  std::vector<VariableRef> v = model.AddVariables(4, 0, 1, Integrality::kBinary);
  model.SetObjective(ObjectiveSense::kMaximize,
                     7 * v[0] + 6 * v[1] + 5 * v[2] + 4 * v[3]);
  model.AddConstraint(3 * v[0] + 4 * v[1] + 3 * v[2] + 2 * v[3], LessEqual{7});
  model.Optimize();
  ASSERT_EQ(model.termination_status(), TerminationStatus::kOptimal);
  // Items 0 and 1 fill the capacity exactly.
  EXPECT_NEAR(model.ObjectiveValue(), 13.0, 1e-9);
  for (std::int64_t r = 1; r <= model.result_count(); ++r) {
    EXPECT_EQ(model.primal_status(r), ResultStatus::kFeasiblePoint);
    std::vector<double> x;
    for (VariableRef var : v) x.push_back(model.Value(var, r));
    EXPECT_LE(3 * x[0] + 4 * x[1] + 3 * x[2] + 2 * x[3], 7 + 1e-9);
  }
}

TEST(MilpTest, PureLpMatchesSimplex) {
  Model lp(SimplexOptimizer());
  Model mip(MilpOptimizer());
  BuildTwoVariableLp(lp);
  BuildTwoVariableLp(mip);
  lp.Optimize();
  mip.Optimize();
  EXPECT_EQ(mip.termination_status(), TerminationStatus::kOptimal);
  EXPECT_NEAR(mip.ObjectiveValue(), lp.ObjectiveValue(), 1e-9);
  EXPECT_EQ(dynamic_cast<const MilpBackend&>(mip.backend()).node_log().size(), 1u);
}

TEST(MilpTest, TimeLimitZero) {
  Model model(OptimizerWithAttributes(MilpOptimizer(), {{"time_limit", 0.0}}));
  VariableRef x = model.AddVariable(0, 3, Integrality::kInteger);
  model.SetObjective(ObjectiveSense::kMaximize, AffExpr(x));
  model.Optimize();
  EXPECT_EQ(model.termination_status(), TerminationStatus::kTimeLimit);
  EXPECT_EQ(model.result_count(), 0);
}

TEST(MilpTest, InfeasibleInteger) {
  Model model(MilpOptimizer());
  VariableRef x = model.AddVariable(0, 3, Integrality::kInteger);
  model.AddConstraint(2 * x, EqualTo{3});
  model.Optimize();
  EXPECT_EQ(model.termination_status(), TerminationStatus::kInfeasible);
  EXPECT_EQ(model.result_count(), 0);
}

TEST(MilpTest, NodeLimitStopsSearch) {
  Model model(OptimizerWithAttributes(MilpOptimizer(), {{"node_limit", std::int64_t{1}}}));
  std::vector<VariableRef> v = model.AddVariables(3, 0, 1, Integrality::kBinary);
  model.SetObjective(ObjectiveSense::kMaximize, 5 * v[0] + 4 * v[1] + 3 * v[2]);
  model.AddConstraint(2 * v[0] + 3 * v[1] + 4 * v[2], LessEqual{6});
  model.Optimize();
  EXPECT_EQ(model.termination_status(), TerminationStatus::kNodeLimit);
}

// Both variables are fractional at the root, x more so (1/2 against 1/3).
std::vector<std::int64_t> BranchOrder(bool prioritize_y) {
  Model model(MilpOptimizer());
  VariableRef x = model.AddVariable(0, 5, Integrality::kInteger, "x");
  VariableRef y = model.AddVariable(0, 5, Integrality::kInteger, "y");
  model.SetObjective(ObjectiveSense::kMaximize, x + y);
  model.AddConstraint(2 * x, LessEqual{1});
  model.AddConstraint(3 * y, LessEqual{1});
  if (prioritize_y) {
    model.SetAttribute(VariableAttribute("branch_priority"), y, 1.0);
  }
  model.Optimize();
  EXPECT_EQ(model.termination_status(), TerminationStatus::kOptimal);
  EXPECT_NEAR(model.ObjectiveValue(), 0.0, 1e-9);
  std::vector<std::int64_t> order;
  for (const NodeLogEntry& e :
       dynamic_cast<const MilpBackend&>(model.backend()).node_log()) {
    if (e.outcome == "branched") order.push_back(e.branch_variable);
  }
  return order;
}

TEST(MilpTest, BranchPriorityChangesBranchOrder) {
  const std::vector<std::int64_t> plain = BranchOrder(false);
  const std::vector<std::int64_t> prioritized = BranchOrder(true);
  ASSERT_FALSE(plain.empty());
  ASSERT_FALSE(prioritized.empty());
  EXPECT_EQ(plain.front(), 0);
  EXPECT_EQ(prioritized.front(), 1);
}

TEST(MilpTest, NodeLogRecordsRoot) {
  Model model(MilpOptimizer());
  VariableRef x = model.AddVariable(0, 3, Integrality::kInteger);
  model.AddConstraint(2 * x, LessEqual{5});
  model.SetObjective(ObjectiveSense::kMaximize, AffExpr(x));
  model.Optimize();
  const auto& log = dynamic_cast<const MilpBackend&>(model.backend()).node_log();
  ASSERT_FALSE(log.empty());
  EXPECT_EQ(log.front().depth, 0);
  EXPECT_NEAR(log.front().lp_objective, 2.5, 1e-9);
  EXPECT_NEAR(model.ObjectiveValue(), 2.0, 1e-9);
}

}  // namespace
}  // namespace amodel
