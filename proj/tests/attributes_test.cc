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

#include <gtest/gtest.h>

#include "amodel/errors.h"
#include "amodel/extensions.h"
#include "amodel/milp.h"
#include "amodel/model.h"
#include "amodel/qp.h"
#include "amodel/simplex.h"
#include "expect_error.h"
#include "fixtures.h"

namespace amodel {
namespace {

TEST(AttributesTest, OptimizerAttributeRoundTrips) {
  Model model(QpOptimizer());
  model.SetOptimizerAttribute("max_iter", std::int64_t{10});
  EXPECT_EQ(AsInt(model.GetAttribute(OptimizerAttribute("max_iter"))), 10);
  model.SetOptimizerAttribute("tol", 1e-6);
  EXPECT_EQ(AsReal(model.GetAttribute(OptimizerAttribute("tol"))), 1e-6);
}

TEST(AttributesTest, IntegerLiteralPromotesForRealKeys) {
  Model model(SimplexOptimizer());
  model.SetOptimizerAttribute("time_limit", std::int64_t{5});
  EXPECT_EQ(AsReal(model.GetAttribute(OptimizerAttribute("time_limit"))), 5.0);
}

TEST(AttributesTest, TypeMismatchRejected) {
  Model model(SimplexOptimizer());
  EXPECT_ERROR(model.SetOptimizerAttribute("time_limit", std::string("soon")),
               ErrorCode::kTypeMismatch);
}

TEST(AttributesTest, UnknownAttributeRejected) {
  Model model(SimplexOptimizer());
  EXPECT_ERROR(model.SetOptimizerAttribute("no_such_param", std::int64_t{1}),
               ErrorCode::kUnknownAttribute);
  EXPECT_ERROR(model.GetAttribute(OptimizerAttribute("no_such_param")),
               ErrorCode::kUnknownAttribute);
}

TEST(AttributesTest, UnsetAttributeRaises) {
  Model model(SimplexOptimizer());
  EXPECT_ERROR(model.GetAttribute(OptimizerAttribute("time_limit")),
               ErrorCode::kInvalidArgument);
}

TEST(AttributesTest, BackendWithoutKeyRejectsIt) {
  Model model(SimplexOptimizer());
  VariableRef x = model.AddVariable(0, 1);
  EXPECT_ERROR(model.SetAttribute(VariableAttribute("branch_priority"), x, 1.0),
               ErrorCode::kUnsupportedByBackend);
}

TEST(AttributesTest, VariableAttributeRoundTripsOnMilp) {
  Model model(MilpOptimizer());
  VariableRef x = model.AddVariable(0, 1, Integrality::kInteger);
  model.SetAttribute(VariableAttribute("branch_priority"), x, 1.0);
  EXPECT_EQ(AsReal(model.GetAttribute(VariableAttribute("branch_priority"), x)),
            1.0);
  // Stored on the model, so it survives a reattachment.
  model.SetOptimizer(MilpOptimizer());
  EXPECT_EQ(AsReal(model.GetAttribute(VariableAttribute("branch_priority"), x)),
            1.0);
}

TEST(AttributesTest, ModelAttributeIsNotForwarded) {
  Model model(SimplexOptimizer());
  model.SetAttribute(ModelAttribute("name"), std::string("diet"));
  EXPECT_EQ(std::get<std::string>(model.GetAttribute(ModelAttribute("name"))),
            "diet");
}

TEST(AttributesTest, CustomAttributeRegistration) {
  const AttributeKey key = ConstraintAttribute("test_color");
  RegisterAttribute(key, PayloadType::kString);
  EXPECT_ERROR(RegisterAttribute(key, PayloadType::kString),
               ErrorCode::kDuplicateRegistration);
  Model model(SimplexOptimizer());
  VariableRef x = model.AddVariable(0, 1);
  ConstraintRef c = model.AddConstraint(AffExpr(x), LessEqual{1});
  model.SetAttribute(key, c, std::string("red"));
  EXPECT_EQ(std::get<std::string>(model.GetAttribute(key, c)), "red");
}

TEST(AttributesTest, FactoryAttributesApplyOnAttach) {
  Model model(OptimizerWithAttributes(SimplexOptimizer(), {{"time_limit", 0.0}}));
  testing::BuildTwoVariableLp(model);
  model.Optimize();
  EXPECT_EQ(model.termination_status(), TerminationStatus::kTimeLimit);
  EXPECT_EQ(model.result_count(), 0);
}

TEST(AttributesTest, FactoryCopiesAreIndependent) {
  OptimizerFactory base = MilpOptimizer();
  OptimizerFactory loose = OptimizerWithAttributes(base, {{"gap_tol", 0.1}});
  OptimizerFactory exact = OptimizerWithAttributes(base, {{"gap_tol", 0.0}});
  Model a(loose);
  Model b(exact);
  EXPECT_EQ(AsReal(a.GetAttribute(OptimizerAttribute("gap_tol"))), 0.1);
  EXPECT_EQ(AsReal(b.GetAttribute(OptimizerAttribute("gap_tol"))), 0.0);
  EXPECT_EQ(AsReal(*a.backend().GetAttribute(OptimizerAttribute("gap_tol"), -1)),
            0.1);
  EXPECT_EQ(AsReal(*b.backend().GetAttribute(OptimizerAttribute("gap_tol"), -1)),
            0.0);
  EXPECT_TRUE(base.attributes().empty());
}

TEST(AttributesTest, UnknownFactoryAttributeFailsOnAttach) {
  Model model;
  EXPECT_ERROR(model.SetOptimizer(OptimizerWithAttributes(
                   SimplexOptimizer(), {{"no_such_param", 1.0}})),
               ErrorCode::kUnknownAttribute);
  EXPECT_FALSE(model.has_optimizer());
}

}  // namespace
}  // namespace amodel
