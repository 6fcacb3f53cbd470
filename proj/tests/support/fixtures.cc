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

#include "fixtures.h"

#include <cmath>
#include <string>

namespace amodel::testing {

TwoVariableLp BuildTwoVariableLp(Model& model) {
  TwoVariableLp lp;
  lp.x = model.AddVariable(0.0, kInf, Integrality::kContinuous, "x");
  lp.y = model.AddVariable(0.0, 3.0, Integrality::kContinuous, "y");
  model.SetObjective(ObjectiveSense::kMinimize, 12 * lp.x + 20 * lp.y);
  lp.c1 = model.AddConstraint(6 * lp.x + 8 * lp.y, GreaterEqual{100}, "c1");
  lp.c2 = model.AddConstraint(7 * lp.x + 12 * lp.y, GreaterEqual{120}, "c2");
  return lp;
}

std::vector<VariableRef> BuildLazyGridModel(Model& model) {
  std::vector<VariableRef> x =
      model.AddVariables(2, 0.0, 2.5, Integrality::kInteger, "x");
  model.SetObjective(ObjectiveSense::kMaximize, 1.0 * x[1]);
  return x;
}

ModelCallback MakeLazyGridCallback(const std::vector<VariableRef>& x,
                                   LazyGridStats* stats) {
  return [x, stats](CallbackContext context) {
    ++stats->invocations;
    if (context.node_status() != NodeStatus::kInteger) {
      ++stats->non_integer_invocations;
      return;
    }
    const double x1 = context.Value(x[0]);
    const double x2 = context.Value(x[1]);
    if (x2 - x1 > 1 + 1e-6) {
      context.SubmitLazyConstraint(x[1] - x[0], LessEqual{1});
      ++stats->submissions;
    }
    if (x1 + x2 > 3 + 1e-6) {
      context.SubmitLazyConstraint(x[0] + x[1], LessEqual{3});
      ++stats->submissions;
    }
  };
}

RegressionData MakeRegressionData(std::int32_t rows, std::int32_t cols,
                                  std::uint64_t seed) {
  Rng rng(seed);
  RegressionData data;
  data.rows = rows;
  data.cols = cols;
  data.a.resize(static_cast<std::size_t>(rows) * cols);
  for (double& v : data.a) v = rng.Uniform();
  data.y.resize(rows);
  for (double& v : data.y) v = rng.Uniform();
  return data;
}

RegressionModel BuildRegressionModel(Model& model, const RegressionData& data) {
  RegressionModel out;
  out.x = model.AddVariables(data.cols, 0.0, 1.0, Integrality::kContinuous, "x");
  out.residuals = model.AddVariables(data.rows, -kInf, kInf,
                                     Integrality::kContinuous, "residuals");
  for (std::int32_t i = 0; i < data.rows; ++i) {
    AffExpr row = -1.0 * out.residuals[i];
    for (std::int32_t j = 0; j < data.cols; ++j) {
      row.AddTerm(data.a[static_cast<std::size_t>(i) * data.cols + j], out.x[j]);
    }
    model.AddConstraint(row, EqualTo{data.y[i]});
  }
  AffExpr total;
  for (VariableRef v : out.x) total.AddTerm(1.0, v);
  model.AddConstraint(total, EqualTo{1.0});
  QuadExpr objective;
  for (VariableRef r : out.residuals) objective.AddQuadTerm(1.0, r, r);
  model.SetObjective(ObjectiveSense::kMinimize, objective);
  return out;
}

DenseLp RandomBoxedLp(Rng& rng, bool integer) {
  DenseLp lp;
  lp.n = static_cast<int>(rng.Int(1, 3));
  const int m = static_cast<int>(rng.Int(1, 4));
  lp.c.resize(lp.n);
  lp.lower.resize(lp.n);
  lp.upper.resize(lp.n);
  std::vector<double> anchor(lp.n);
  for (int j = 0; j < lp.n; ++j) {
    lp.c[j] = static_cast<double>(rng.Int(-5, 5));
    lp.lower[j] = static_cast<double>(rng.Int(-4, 0));
    lp.upper[j] = lp.lower[j] + static_cast<double>(rng.Int(0, 5));
    anchor[j] = integer ? static_cast<double>(rng.Int(static_cast<std::int64_t>(lp.lower[j]),
                                                      static_cast<std::int64_t>(lp.upper[j])))
                        : rng.Uniform(lp.lower[j], lp.upper[j]);
  }
  lp.offset = static_cast<double>(rng.Int(-3, 3));
  for (int i = 0; i < m; ++i) {
    std::vector<double> a(lp.n);
    double activity = 0.0;
    for (int j = 0; j < lp.n; ++j) {
      a[j] = static_cast<double>(rng.Int(-5, 5));
      activity += a[j] * anchor[j];
    }
    // A negative shift makes the anchor infeasible, so some instances are.
    const double rhs = std::round(activity) + static_cast<double>(rng.Int(-2, 3));
    const double kind = rng.Uniform();
    double lo = -kInf;
    double hi = kInf;
    if (kind < 0.4) {
      hi = rhs;
    } else if (kind < 0.8) {
      lo = std::round(activity) - static_cast<double>(rng.Int(-2, 3));
    } else if (kind < 0.9) {
      lo = hi = std::round(activity);
    } else {
      lo = std::round(activity) - static_cast<double>(rng.Int(0, 2));
      hi = lo + static_cast<double>(rng.Int(0, 3));
    }
    lp.a.push_back(std::move(a));
    lp.row_lower.push_back(lo);
    lp.row_upper.push_back(hi);
  }
  return lp;
}

std::vector<VariableRef> LoadDenseLp(Model& model, const DenseLp& lp,
                                     bool integer) {
  std::vector<VariableRef> x;
  for (int j = 0; j < lp.n; ++j) {
    x.push_back(model.AddVariable(
        lp.lower[j], lp.upper[j],
        integer ? Integrality::kInteger : Integrality::kContinuous,
        "x" + std::to_string(j + 1)));
  }
  AffExpr objective(lp.offset);
  for (int j = 0; j < lp.n; ++j) objective.AddTerm(lp.c[j], x[j]);
  model.SetObjective(ObjectiveSense::kMinimize, objective);
  for (std::size_t i = 0; i < lp.a.size(); ++i) {
    AffExpr row;
    for (int j = 0; j < lp.n; ++j) row.AddTerm(lp.a[i][j], x[j]);
    const double lo = lp.row_lower[i];
    const double hi = lp.row_upper[i];
    ConstraintSet set = LessEqual{hi};
    if (lo == hi) {
      set = EqualTo{lo};
    } else if (std::isinf(hi)) {
      set = GreaterEqual{lo};
    } else if (!std::isinf(lo)) {
      set = Interval{lo, hi};
    }
    model.AddConstraint(row, set);
  }
  return x;
}

void BuildRandomFileModel(Model& model, Rng& rng) {
  const int n = static_cast<int>(rng.Int(1, 8));
  std::vector<VariableRef> vars;
  for (int j = 0; j < n; ++j) {
    const double kind = rng.Uniform();
    double lo = static_cast<double>(rng.Int(-5, 2));
    double hi = lo + static_cast<double>(rng.Int(0, 6));
    if (kind < 0.15) lo = -kInf;
    if (kind > 0.85) hi = kInf;
    Integrality integrality = Integrality::kContinuous;
    if (rng.Bernoulli(0.2)) integrality = Integrality::kInteger;
    if (rng.Bernoulli(0.1)) {
      integrality = Integrality::kBinary;
      lo = 0;
      hi = 1;
    }
    std::string name = rng.Bernoulli(0.5) ? "v" + std::to_string(j) : "";
    vars.push_back(model.AddVariable(lo, hi, integrality, name));
  }
  const int m = static_cast<int>(rng.Int(0, 6));
  std::vector<ConstraintRef> rows;
  for (int i = 0; i < m; ++i) {
    AffExpr row(rng.Bernoulli(0.3) ? rng.Uniform(-2, 2) : 0.0);
    for (VariableRef v : vars) {
      if (rng.Bernoulli(0.5)) row.AddTerm(std::round(rng.Uniform(-9, 9) * 8) / 8, v);
    }
    const double rhs = rng.Uniform(-10, 10);
    const double sense = rng.Uniform();
    ConstraintSet set = sense < 0.4 ? ConstraintSet(LessEqual{rhs})
                        : sense < 0.8 ? ConstraintSet(GreaterEqual{rhs})
                                      : ConstraintSet(EqualTo{rhs});
    rows.push_back(model.AddConstraint(row, set));
  }
  if (!rows.empty() && rng.Bernoulli(0.3)) model.Delete(rows.front());
  QuadExpr objective(rng.Uniform(-3, 3));
  for (VariableRef v : vars) {
    if (rng.Bernoulli(0.6)) objective.mutable_affine().AddTerm(rng.Uniform(-5, 5), v);
    if (rng.Bernoulli(0.2)) objective.AddQuadTerm(rng.Uniform(0, 3), v, v);
  }
  if (n >= 2 && rng.Bernoulli(0.3)) objective.AddQuadTerm(rng.Uniform(-1, 1), vars[0], vars[1]);
  model.SetObjective(rng.Bernoulli(0.5) ? ObjectiveSense::kMinimize
                                        : ObjectiveSense::kMaximize,
                     objective);
}

}  // namespace amodel::testing
