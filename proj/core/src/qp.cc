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

#include <algorithm>
#include <cmath>
#include <iostream>

#include "amodel/errors.h"

namespace amodel {

double QpProblem::Objective(const std::vector<double>& x) const {
  double total = c0;
  for (std::size_t j = 0; j < c.size(); ++j) total += c[j] * x[j];
  for (const SymmetricEntry& e : q) {
    const double w = e.row == e.col ? 0.5 : 1.0;
    total += w * e.value * x[e.row] * x[e.col];
  }
  return total;
}

std::vector<double> QpProblem::Gradient(const std::vector<double>& x) const {
  std::vector<double> g = c;
  for (const SymmetricEntry& e : q) {
    g[e.row] += e.value * x[e.col];
    if (e.row != e.col) g[e.col] += e.value * x[e.row];
  }
  return g;
}

double QpProblem::Curvature(const std::vector<double>& d) const {
  double total = 0.0;
  for (const SymmetricEntry& e : q) {
    const double w = e.row == e.col ? 1.0 : 2.0;
    total += w * e.value * d[e.row] * d[e.col];
  }
  return total;
}

std::vector<double> DenseMatrix(const std::vector<SymmetricEntry>& q,
                                std::int32_t n) {
  std::vector<double> dense(static_cast<std::size_t>(n) * n, 0.0);
  for (const SymmetricEntry& e : q) {
    dense[static_cast<std::size_t>(e.row) * n + e.col] += e.value;
    if (e.row != e.col) dense[static_cast<std::size_t>(e.col) * n + e.row] += e.value;
  }
  return dense;
}

bool ValidatePsd(const std::vector<double>& dense, std::int32_t n) {
  const std::size_t m = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (dense[i * m + j] != dense[j * m + i]) {
        throw Error(ErrorCode::kNotSymmetric,
                    "entries (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") differ");
      }
    }
  }
  std::vector<double> l = dense;
  for (std::size_t i = 0; i < m; ++i) l[i * m + i] += 1e-10;
  for (std::size_t j = 0; j < m; ++j) {
    double d = l[j * m + j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j * m + k] * l[j * m + k];
    if (!(d > 0.0)) return false;
    d = std::sqrt(d);
    l[j * m + j] = d;
    for (std::size_t i = j + 1; i < m; ++i) {
      double s = l[i * m + j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i * m + k] * l[j * m + k];
      l[i * m + j] = s / d;
    }
  }
  return true;
}

namespace {

// Every column with an infinite bound must stay bounded over the polytope.
// Returns false when the polytope is empty.
bool ProbeDomain(const LpData& polytope, const Deadline& deadline,
                 double time_limit) {
  LpData probe = polytope;
  std::fill(probe.objective.begin(), probe.objective.end(), 0.0);
  probe.objective_offset = 0.0;
  LpOptions options;
  options.time_limit = time_limit;
  if (SolveLp(probe, options).status == LpStatus::kInfeasible) return false;
  for (std::int32_t j = 0; j < probe.num_cols; ++j) {
    for (double direction : {1.0, -1.0}) {
      const double bound = direction > 0 ? probe.col_lower[j] : probe.col_upper[j];
      if (std::isfinite(bound)) continue;
      probe.objective[j] = direction;
      options.time_limit = time_limit - deadline.Elapsed();
      if (std::isinf(time_limit)) options.time_limit = kInf;
      LpSolution s = SolveLp(probe, options);
      probe.objective[j] = 0.0;
      if (s.status == LpStatus::kUnbounded) {
        throw Error(ErrorCode::kUnboundedDomain,
                    "column " + std::to_string(j) + " is unbounded " +
                        (direction > 0 ? "below" : "above") +
                        " over the feasible set");
      }
    }
  }
  return true;
}

}  // namespace

FwResult SolveFrankWolfe(const QpProblem& problem, const FwOptions& options) {
  const std::int32_t n = problem.polytope.num_cols;
  if (!ValidatePsd(DenseMatrix(problem.q, n), n)) {
    throw Error(ErrorCode::kNotConvex,
                "quadratic objective is not positive semidefinite");
  }
  Deadline deadline(options.time_limit);
  FwResult out;
  if (deadline.immediate()) {
    out.status = FwStatus::kTimeLimit;
    return out;
  }
  if (!ProbeDomain(problem.polytope, deadline, options.time_limit)) {
    out.status = FwStatus::kInfeasible;
    return out;
  }

  LpData lmo = problem.polytope;
  LpBasis basis;
  LpOptions lp_options;
  auto oracle = [&](const std::vector<double>& direction) {
    lmo.objective = direction;
    lp_options.warm_start = basis.status.empty() ? nullptr : &basis;
    LpSolution s = SolveLp(lmo, lp_options);
    if (s.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kNumericalFailure,
                  "linear minimization oracle returned " +
                      std::string(ToString(s.status)));
    }
    basis = std::move(s.basis);
    return std::move(s.x);
  };

  std::vector<double> x = oracle(problem.c);
  std::vector<double> d(n);
  out.status = FwStatus::kIterationLimit;
  for (;;) {
    const std::vector<double> g = problem.Gradient(x);
    if (options.record_trace) {
      out.objective_trace.push_back(problem.Objective(x));
    }
    const std::vector<double> s = oracle(g);
    double gap = 0.0;
    for (std::int32_t j = 0; j < n; ++j) {
      d[j] = s[j] - x[j];
      gap -= g[j] * d[j];
    }
    out.gap = gap;
    if (options.record_trace) out.gap_trace.push_back(gap);
    if (gap <= options.tolerance) {
      out.status = FwStatus::kConverged;
      break;
    }
    if (out.iterations >= options.max_iterations) break;
    if (deadline.Expired()) {
      out.status = FwStatus::kTimeLimit;
      break;
    }
    const double curvature = problem.Curvature(d);
    const double step = curvature > 0.0 ? std::min(gap / curvature, 1.0) : 1.0;
    for (std::int32_t j = 0; j < n; ++j) x[j] += step * d[j];
    ++out.iterations;
  }
  out.objective = problem.Objective(x);
  out.x = std::move(x);
  return out;
}

QpBackend::QpBackend() {
  capabilities_.incremental = true;
  capabilities_.supports_constraint = [](FunctionKind kind,
                                         const ConstraintSet& set) {
    return kind == FunctionKind::kScalarAffine && IsLinearSet(TagOf(set));
  };
  capabilities_.supports_attribute = [](const AttributeKey& key) {
    return key.scope == AttributeScope::kOptimizer &&
           (key.name == "tol" || key.name == "max_iter" ||
            key.name == "time_limit" || key.name == "verbose");
  };
  capabilities_.quadratic_objective = true;
  capabilities_.provides_duals = false;
  capabilities_.max_results = 1;
}

SolveResults QpBackend::Solve() {
  SolveResults out;
  FwOptions options;
  options.time_limit = RealOption("time_limit", kInf);
  if (options.time_limit <= 0.0) {
    out.termination = TerminationStatus::kTimeLimit;
    out.raw_status = "time limit reached before the first iteration";
    return out;
  }
  options.tolerance = RealOption("tol", options.tolerance);
  options.max_iterations = IntOption("max_iter", options.max_iterations);

  QpProblem problem;
  LpMapping map;
  problem.polytope = BuildLp(image_, &map);
  const double sign = map.maximize ? -1.0 : 1.0;
  problem.c = problem.polytope.objective;
  problem.c0 = problem.polytope.objective_offset;
  for (const QuadraticTerm& t : image_.objective().function.quadratic) {
    const std::int32_t a = map.variable_column[t.first];
    const std::int32_t b = map.variable_column[t.second];
    const double v = sign * t.coefficient;
    problem.q.push_back({a, b, a == b ? 2.0 * v : v});
  }

  FwResult r = SolveFrankWolfe(problem, options);
  out.iterations = r.iterations;
  switch (r.status) {
    case FwStatus::kConverged:
      out.termination = TerminationStatus::kLocallySolved;
      break;
    case FwStatus::kIterationLimit:
      out.termination = TerminationStatus::kIterationLimit;
      break;
    case FwStatus::kTimeLimit:
      out.termination = TerminationStatus::kTimeLimit;
      break;
    case FwStatus::kInfeasible:
      out.termination = TerminationStatus::kInfeasible;
      break;
  }
  out.raw_status = "frank-wolfe gap " + FormatNumber(r.gap);
  if (!r.x.empty()) {
    PrimalResult primal;
    primal.values.assign(image_.variable_slots(), 0.0);
    for (std::size_t j = 0; j < r.x.size(); ++j) {
      primal.values[map.column_variable[j]] = r.x[j];
    }
    primal.objective = sign * r.objective;
    primal.status = ResultStatus::kFeasiblePoint;
    out.primal.push_back(std::move(primal));
    out.objective_bound = sign * (r.objective - r.gap);
  }
  if (BoolOption("verbose", false)) {
    std::clog << "frank-wolfe: " << out.raw_status << " after "
              << r.iterations << " iterations\n";
  }
  return out;
}

OptimizerFactory QpOptimizer() {
  return OptimizerFactory([] { return std::make_unique<QpBackend>(); });
}

}  // namespace amodel
