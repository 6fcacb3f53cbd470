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

// Shared models and deterministic generators for tests and the acceptance
// binary.

#ifndef AMODEL_TESTS_SUPPORT_FIXTURES_H_
#define AMODEL_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "amodel/model.h"
#include "oracles.h"

namespace amodel::testing {

// Uniform double in [0, 1) from the top 53 bits of a 64-bit Mersenne
// Twister draw. Unlike std::uniform_real_distribution the sequence is
// identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Integer in [lo, hi].
  std::int64_t Int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    Uniform() * static_cast<double>(hi - lo + 1));
  }
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// min 12x + 20y  s.t.  c1: 6x + 8y >= 100,  c2: 7x + 12y >= 120,
// x >= 0, 0 <= y <= 3.
struct TwoVariableLp {
  VariableRef x;
  VariableRef y;
  ConstraintRef c1;
  ConstraintRef c2;
};
TwoVariableLp BuildTwoVariableLp(Model& model);

// max x2 over integer x in [0, 2.5]^2 with no constraints; the lazy
// callback from MakeLazyGridCallback enforces x2 - x1 <= 1 and
// x1 + x2 <= 3.
std::vector<VariableRef> BuildLazyGridModel(Model& model);
struct LazyGridStats {
  std::int64_t invocations = 0;
  std::int64_t submissions = 0;
  std::int64_t non_integer_invocations = 0;
};
ModelCallback MakeLazyGridCallback(const std::vector<VariableRef>& x,
                                   LazyGridStats* stats);

// Data of the constrained regression: A is rows x cols, row major.
struct RegressionData {
  std::int32_t rows = 0;
  std::int32_t cols = 0;
  std::vector<double> a;
  std::vector<double> y;
};
// Entries of A and y are Rng(seed).Uniform() in row-major order, A first.
RegressionData MakeRegressionData(std::int32_t rows, std::int32_t cols,
                                  std::uint64_t seed);
inline constexpr std::uint64_t kRegressionSeed = 20260101;
// min sum_i r_i^2  s.t.  r = A x - y,  sum(x) = 1,  0 <= x <= 1.
struct RegressionModel {
  std::vector<VariableRef> x;
  std::vector<VariableRef> residuals;
};
RegressionModel BuildRegressionModel(Model& model, const RegressionData& data);

// Small random LP with every variable boxed, so the feasible set is a
// bounded polytope (or empty).
DenseLp RandomBoxedLp(Rng& rng, bool integer);
// Loads `lp` into `model`, with integer variables when `integer`.
std::vector<VariableRef> LoadDenseLp(Model& model, const DenseLp& lp,
                                     bool integer);

// Random model using every feature of the LP file dialect: all bound
// shapes, integer and binary variables, constants in rows, deleted rows,
// and a convex or indefinite quadratic objective in either sense.
void BuildRandomFileModel(Model& model, Rng& rng);

}  // namespace amodel::testing

#endif  // AMODEL_TESTS_SUPPORT_FIXTURES_H_
