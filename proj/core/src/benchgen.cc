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

#include "amodel/benchgen.h"

#include <string>
#include <vector>

#include "amodel/errors.h"

namespace amodel {
namespace {

std::string Label(const char* base, std::int64_t a) {
  return std::string(base) + "[" + std::to_string(a) + "]";
}

std::string Label(const char* base, std::int64_t a, std::int64_t b) {
  return std::string(base) + "[" + std::to_string(a) + "," +
         std::to_string(b) + "]";
}

std::string Label(const char* base, std::int64_t a, std::int64_t b,
                  std::int64_t c) {
  return std::string(base) + "[" + std::to_string(a) + "," +
         std::to_string(b) + "," + std::to_string(c) + "]";
}

std::string Label(const char* base, std::int64_t a, std::int64_t b,
                  std::int64_t c, std::int64_t d) {
  return std::string(base) + "[" + std::to_string(a) + "," +
         std::to_string(b) + "," + std::to_string(c) + "," +
         std::to_string(d) + "]";
}

AffExpr Linear(std::initializer_list<std::pair<double, VariableRef>> terms) {
  AffExpr e;
  e.reserve(terms.size());
  for (const auto& [c, v] : terms) e.AddTerm(c, v);
  return e;
}

}  // namespace

std::int64_t FacVariableCount(std::int64_t g) {
  return 4 * (g + 1) * (g + 1) * g + 2 * g + 1;
}

std::int64_t FacConstraintCount(std::int64_t g) {
  return (g + 1) * (g + 1) * (7 * g + 1);
}

std::int64_t LqcpVariableCount(std::int64_t n) {
  return (n + 1) * (n + 1) + n;
}

std::int64_t LqcpConstraintCount(std::int64_t n) {
  return n * (n - 1) + (n + 1) + 2 * n;
}

double LqcpTarget(double x) { return 0.5 * (1.0 - x * x); }

void GenerateFac(Model& model, std::int64_t g) {
  if (g < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "fac needs G >= 1, got " + std::to_string(g));
  }
  const std::int64_t facilities = g;
  const VariableRef s = model.AddVariable(-kInf, kInf,
                                          Integrality::kContinuous, "s");
  std::vector<VariableRef> y;
  y.reserve(2 * facilities);
  for (std::int64_t f = 1; f <= facilities; ++f) {
    for (std::int64_t k = 1; k <= 2; ++k) {
      y.push_back(model.AddVariable(0.0, 1.0, Integrality::kContinuous,
                                    Label("y", f, k)));
    }
  }
  model.SetObjective(ObjectiveSense::kMinimize, QuadExpr(s));

  for (std::int64_t i = 0; i <= g; ++i) {
    for (std::int64_t j = 0; j <= g; ++j) {
      const double p[2] = {static_cast<double>(i) / static_cast<double>(g),
                           static_cast<double>(j) / static_cast<double>(g)};
      AffExpr assigned;
      assigned.reserve(facilities);
      for (std::int64_t f = 1; f <= facilities; ++f) {
        const VariableRef zf = model.AddVariable(
            0.0, 1.0, Integrality::kBinary, Label("z", i, j, f));
        const VariableRef d = model.AddVariable(
            0.0, kInf, Integrality::kContinuous, Label("d", i, j, f));
        VariableRef r[2];
        for (std::int64_t k = 1; k <= 2; ++k) {
          r[k - 1] = model.AddVariable(-kInf, kInf, Integrality::kContinuous,
                                       Label("r", i, j, f, k));
          model.AddConstraint(
              Linear({{1.0, r[k - 1]}, {-1.0, y[2 * (f - 1) + (k - 1)]}}),
              EqualTo{-p[k - 1]});
        }
        for (double s1 : {1.0, -1.0}) {
          for (double s2 : {1.0, -1.0}) {
            model.AddConstraint(Linear({{1.0, d}, {-s1, r[0]}, {-s2, r[1]}}),
                                GreaterEqual{0.0});
          }
        }
        model.AddConstraint(Linear({{1.0, s}, {-1.0, d}, {-2.0, zf}}),
                            GreaterEqual{-2.0});
        assigned.AddTerm(1.0, zf);
      }
      model.AddConstraint(assigned, EqualTo{1.0});
    }
  }
}

void GenerateLqcp(Model& model, std::int64_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "lqcp needs N >= 2, got " + std::to_string(n));
  }
  const std::int64_t m = n;
  const double dt = 1.0 / static_cast<double>(m);
  const double dx = 1.0 / static_cast<double>(n);
  const double h = 0.5 / (dx * dx);

  std::vector<std::vector<VariableRef>> y(m + 1);
  for (std::int64_t i = 0; i <= m; ++i) {
    y[i].reserve(n + 1);
    for (std::int64_t j = 0; j <= n; ++j) {
      y[i].push_back(model.AddVariable(-kInf, kInf, Integrality::kContinuous,
                                       Label("y", i, j)));
    }
  }
  std::vector<VariableRef> u(m + 1);
  for (std::int64_t i = 1; i <= m; ++i) {
    u[i] = model.AddVariable(-1.0, 1.0, Integrality::kContinuous,
                             Label("u", i));
  }

  QuadExpr objective;
  for (std::int64_t j = 0; j <= n; ++j) {
    const double weight = 0.25 * dx * (j == 0 || j == n ? 1.0 : 2.0);
    const double target = LqcpTarget(static_cast<double>(j) * dx);
    const VariableRef v = y[m][j];
    objective.AddQuadTerm(weight, v, v);
    objective.mutable_affine().AddTerm(-2.0 * weight * target, v);
    objective.mutable_affine().set_constant(objective.constant() +
                                            weight * target * target);
  }
  for (std::int64_t i = 1; i <= m; ++i) {
    objective.AddQuadTerm(0.25 * kLqcpControlWeight * dt * 2.0, u[i], u[i]);
  }
  model.SetObjective(ObjectiveSense::kMinimize, objective);

  for (std::int64_t i = 0; i < m; ++i) {
    for (std::int64_t j = 1; j < n; ++j) {
      AffExpr e;
      e.reserve(6);
      e.AddTerm(1.0 / dt + 2.0 * h, y[i + 1][j]);
      e.AddTerm(-1.0 / dt + 2.0 * h, y[i][j]);
      e.AddTerm(-h, y[i][j - 1]);
      e.AddTerm(-h, y[i][j + 1]);
      e.AddTerm(-h, y[i + 1][j - 1]);
      e.AddTerm(-h, y[i + 1][j + 1]);
      model.AddConstraint(e, EqualTo{0.0});
    }
  }
  for (std::int64_t j = 0; j <= n; ++j) {
    model.AddConstraint(AffExpr(y[0][j]), EqualTo{0.0});
  }
  for (std::int64_t i = 1; i <= m; ++i) {
    model.AddConstraint(Linear({{1.0, y[i][1]}, {-1.0, y[i][0]}}),
                        EqualTo{0.0});
    model.AddConstraint(Linear({{1.0 + dx, y[i][n]},
                                {-1.0, y[i][n - 1]},
                                {-dx, u[i]}}),
                        EqualTo{0.0});
  }
}

}  // namespace amodel
