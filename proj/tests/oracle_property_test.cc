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

// Library solvers against brute-force oracles on random small instances.

#include <gtest/gtest.h>

#include <cmath>

#include "amodel/milp.h"
#include "amodel/model.h"
#include "amodel/simplex.h"
#include "fixtures.h"
#include "oracles.h"

namespace amodel {
namespace {

using ::amodel::testing::DenseFeasible;
using ::amodel::testing::DenseLp;
using ::amodel::testing::EnumerateIntegerPoints;
using ::amodel::testing::EnumerateVertices;
using ::amodel::testing::LoadDenseLp;
using ::amodel::testing::OracleResult;
using ::amodel::testing::OracleStatus;
using ::amodel::testing::RandomBoxedLp;
using ::amodel::testing::Rng;

std::vector<double> Values(const Model& model, const std::vector<VariableRef>& x) {
  std::vector<double> out;
  for (VariableRef v : x) out.push_back(model.Value(v));
  return out;
}

TEST(OraclePropertyTest, RandomLpsMatchVertexEnumeration) {
  Rng rng(1001);
  int optimal = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const DenseLp lp = RandomBoxedLp(rng, /*integer=*/false);
    const OracleResult oracle = EnumerateVertices(lp);
    Model model(SimplexOptimizer());
    const std::vector<VariableRef> x = LoadDenseLp(model, lp, false);
    model.Optimize();
    if (oracle.status == OracleStatus::kInfeasible) {
      EXPECT_EQ(model.termination_status(), TerminationStatus::kInfeasible) << trial;
      ++infeasible;
      continue;
    }
    ++optimal;
    ASSERT_EQ(model.termination_status(), TerminationStatus::kOptimal) << trial;
    EXPECT_NEAR(model.ObjectiveValue(), oracle.objective, 1e-8) << trial;
    EXPECT_TRUE(DenseFeasible(lp, Values(model, x), 1e-8)) << trial;
  }
  EXPECT_GT(optimal, 20);
  EXPECT_GT(infeasible, 5);
}

TEST(OraclePropertyTest, RandomIpsMatchExhaustiveEnumeration) {
  Rng rng(2002);
  int optimal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const DenseLp lp = RandomBoxedLp(rng, /*integer=*/true);
    const OracleResult oracle = EnumerateIntegerPoints(lp);
    Model model(MilpOptimizer());
    const std::vector<VariableRef> x = LoadDenseLp(model, lp, true);
    model.Optimize();
    if (oracle.status == OracleStatus::kInfeasible) {
      EXPECT_EQ(model.termination_status(), TerminationStatus::kInfeasible) << trial;
      continue;
    }
    ++optimal;
    ASSERT_EQ(model.termination_status(), TerminationStatus::kOptimal) << trial;
    // Integer data: optimal objectives are integers.
    EXPECT_EQ(std::round(model.ObjectiveValue()), oracle.objective) << trial;
    EXPECT_NEAR(model.ObjectiveValue(), oracle.objective, 1e-9) << trial;
    const std::vector<double> values = Values(model, x);
    EXPECT_TRUE(DenseFeasible(lp, values, 1e-9)) << trial;
    for (double v : values) EXPECT_EQ(v, std::round(v)) << trial;
  }
  EXPECT_GT(optimal, 20);
}

// On a pure LP the branch-and-bound root is the simplex answer.
TEST(OraclePropertyTest, MilpWithoutIntegersEqualsSimplex) {
  Rng rng(3003);
  for (int trial = 0; trial < 40; ++trial) {
    const DenseLp lp = RandomBoxedLp(rng, false);
    Model a(SimplexOptimizer());
    Model b(MilpOptimizer());
    LoadDenseLp(a, lp, false);
    LoadDenseLp(b, lp, false);
    a.Optimize();
    b.Optimize();
    ASSERT_EQ(a.termination_status(), b.termination_status());
    if (a.result_count() > 0) {
      EXPECT_NEAR(a.ObjectiveValue(), b.ObjectiveValue(), 1e-9);
    }
  }
}

}  // namespace
}  // namespace amodel
