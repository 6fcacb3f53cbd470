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

// Convex quadratic programs over a bounded polytope, solved by Frank-Wolfe
// with exact line search. The linear minimization oracle is the simplex
// solver, warm-started from the previous oracle call.

#ifndef AMODEL_QP_H_
#define AMODEL_QP_H_

#include <cstdint>
#include <vector>

#include "amodel/backend.h"
#include "amodel/simplex.h"

namespace amodel {

// Entry of a symmetric matrix; only i <= j is stored.
struct SymmetricEntry {
  std::int32_t row;
  std::int32_t col;
  double value;
};

// minimize 0.5 x'Qx + c'x + c0 over {x : polytope rows and bounds}.
struct QpProblem {
  LpData polytope;  // objective of the polytope is ignored
  std::vector<SymmetricEntry> q;
  std::vector<double> c;
  double c0 = 0.0;

  double Objective(const std::vector<double>& x) const;
  // Qx + c
  std::vector<double> Gradient(const std::vector<double>& x) const;
  // d'Qd
  double Curvature(const std::vector<double>& d) const;
};

// Dense row-major symmetric matrix from its upper triangle.
std::vector<double> DenseMatrix(const std::vector<SymmetricEntry>& q,
                                std::int32_t n);

// True iff the Cholesky factorization of Q + 1e-10 I succeeds. Raises
// NotSymmetric for a non-symmetric dense matrix.
bool ValidatePsd(const std::vector<double>& dense, std::int32_t n);

struct FwOptions {
  double tolerance = 1e-7;
  std::int64_t max_iterations = 50000;
  double time_limit = kInf;
  bool record_trace = false;
};

enum class FwStatus { kConverged, kIterationLimit, kTimeLimit, kInfeasible };

struct FwResult {
  FwStatus status = FwStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  double gap = kInf;  // Frank-Wolfe gap at x
  std::int64_t iterations = 0;
  std::vector<double> objective_trace;  // f(x_k) when record_trace is set
  std::vector<double> gap_trace;
};

// Validates convexity (NotConvex) and boundedness of the polytope
// (UnboundedDomain) before iterating.
FwResult SolveFrankWolfe(const QpProblem& problem, const FwOptions& options);

class QpBackend : public ImageBackend {
 public:
  QpBackend();

  std::string name() const override { return "frank-wolfe"; }
  const BackendCapabilities& capabilities() const override {
    return capabilities_;
  }

 protected:
  SolveResults Solve() override;

 private:
  BackendCapabilities capabilities_;
};

OptimizerFactory QpOptimizer();

}  // namespace amodel

#endif  // AMODEL_QP_H_
