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

#include "amodel/expr.h"

#include <gtest/gtest.h>

#include <cmath>

#include "amodel/errors.h"
#include "amodel/model.h"
#include "fixtures.h"

namespace amodel {
namespace {

using ::amodel::testing::Rng;

class ExprTest : public ::testing::Test {
 protected:
  ExprTest() {
    x = model.AddVariable(-kInf, kInf, Integrality::kContinuous, "x");
    y = model.AddVariable(-kInf, kInf, Integrality::kContinuous, "y");
    z = model.AddVariable(-kInf, kInf, Integrality::kContinuous, "z");
  }
  Model model;
  VariableRef x, y, z;
};

TEST_F(ExprTest, AddZeroExpressions) {
  AffExpr e = Add(AffExpr(), AffExpr());
  EXPECT_EQ(e.constant(), 0.0);
  EXPECT_EQ(e.num_terms(), 0u);
}

TEST_F(ExprTest, AddMergesCoefficients) {
  AffExpr e = Canonical((1 + 2 * x) + (3 + 4 * x + y));
  EXPECT_EQ(e.constant(), 4.0);
  EXPECT_EQ(e.coefficient(x), 6.0);
  EXPECT_EQ(e.coefficient(y), 1.0);
  EXPECT_EQ(e.num_terms(), 2u);
}

TEST_F(ExprTest, CancellationLeavesNoTerms) {
  AffExpr e = Canonical(2 * x + (-2) * x);
  EXPECT_EQ(e.num_terms(), 0u);
  EXPECT_EQ(e.constant(), 0.0);
}

TEST_F(ExprTest, ScaleByZeroAndOne) {
  AffExpr e = 5 + 3 * x;
  AffExpr zero = Canonical(Scale(0.0, e));
  EXPECT_EQ(zero.num_terms(), 0u);
  EXPECT_EQ(zero.constant(), 0.0);
  EXPECT_TRUE(StructurallyEqual(Scale(1.0, e), e));
  AffExpr tenth = Scale(0.1, 10 * x);
  EXPECT_EQ(tenth.coefficient(x), 1.0);
}

TEST_F(ExprTest, MultiplyProducesQuadraticTerms) {
  QuadExpr sq = x * x;
  EXPECT_EQ(sq.coefficient(x, x), 1.0);
  QuadExpr diff = Canonical(Multiply(x + 1, x - 1));
  EXPECT_EQ(diff.coefficient(x, x), 1.0);
  EXPECT_EQ(diff.affine().num_terms(), 0u);
  EXPECT_EQ(diff.constant(), -1.0);
  QuadExpr mixed = Multiply(2 * x + y, AffExpr(y));
  EXPECT_EQ(mixed.coefficient(x, y), 2.0);
  EXPECT_EQ(mixed.coefficient(y, x), 2.0);
  EXPECT_EQ(mixed.coefficient(y, y), 1.0);
  EXPECT_EQ(Evaluate(mixed, Assignment{{x, 1.0}, {y, 3.0}}), 15.0);
}

TEST_F(ExprTest, EvaluateExamples) {
  EXPECT_EQ(Evaluate(AffExpr(), Assignment{}), 0.0);
  EXPECT_EQ(Evaluate(12 * x + 20 * y, Assignment{{x, 15.0}, {y, 1.25}}), 205.0);
  EXPECT_EQ(Evaluate(x * x, Assignment{{x, 3.0}}), 9.0);
}

TEST_F(ExprTest, EvaluateMissingValueRaises) {
  try {
    Evaluate(x + y, Assignment{{x, 1.0}});
    FAIL() << "expected MissingValue";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingValue);
  }
}

TEST_F(ExprTest, MixingModelsRaises) {
  Model other;
  VariableRef w = other.AddVariable();
  try {
    AffExpr e = x + w;
    FAIL() << "expected MixedModels";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedModels);
  }
}

TEST_F(ExprTest, CanonicalFormIsSortedAndZeroFree) {
  AffExpr e = 3 * z + 0 * y + 2 * x;
  Canonical(e);
  e.Canonicalize();
  ASSERT_TRUE(e.IsCanonical());
  ASSERT_EQ(e.num_terms(), 2u);
  EXPECT_EQ(e.terms()[0].key, x);
  EXPECT_EQ(e.terms()[1].key, z);
}

TEST_F(ExprTest, ToStringIsReadable) {
  EXPECT_FALSE(ToString(Canonical(2 * x + 1)).empty());
}

// Random linear combinations agree with pointwise arithmetic.
TEST_F(ExprTest, PropertyArithmeticMatchesEvaluation) {
  Rng rng(7);
  const VariableRef vars[] = {x, y, z};
  auto random_aff = [&] {
    AffExpr e(rng.Uniform(-5, 5));
    const int terms = static_cast<int>(rng.Int(0, 6));
    for (int k = 0; k < terms; ++k) {
      e.AddTerm(rng.Uniform(-5, 5), vars[rng.Int(0, 2)]);
    }
    return e;
  };
  for (int trial = 0; trial < 500; ++trial) {
    const AffExpr a = random_aff();
    const AffExpr b = random_aff();
    const double s = rng.Uniform(-3, 3);
    const Assignment point{{x, rng.Uniform(-2, 2)},
                           {y, rng.Uniform(-2, 2)},
                           {z, rng.Uniform(-2, 2)}};
    const double va = Evaluate(a, point);
    const double vb = Evaluate(b, point);
    EXPECT_NEAR(Evaluate(a + b, point), va + vb, 1e-9);
    EXPECT_NEAR(Evaluate(a - b, point), va - vb, 1e-9);
    EXPECT_NEAR(Evaluate(Scale(s, a), point), s * va, 1e-9);
    EXPECT_NEAR(Evaluate(Multiply(a, b), point), va * vb, 1e-8);
    EXPECT_NEAR(Evaluate(Canonical(a), point), va, 1e-9);
    EXPECT_TRUE(Canonical(Canonical(a) + b).IsCanonical());
    EXPECT_TRUE(StructurallyEqual(Canonical(a + b), Canonical(b + a)));
  }
}

TEST_F(ExprTest, PropertyLargeSumsStayLinear) {
  std::vector<VariableRef> many = model.AddVariables(200);
  AffExpr e;
  for (int round = 0; round < 3; ++round) {
    for (VariableRef v : many) e.AddTerm(1.0, v);
  }
  EXPECT_EQ(e.num_terms(), 200u);
  for (VariableRef v : many) EXPECT_EQ(e.coefficient(v), 3.0);
}

}  // namespace
}  // namespace amodel
