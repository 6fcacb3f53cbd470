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

#include "amodel/model_image.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "amodel/errors.h"

namespace amodel {
namespace {

std::string Describe(std::int64_t index, std::string_view what) {
  return std::string(what) + " " + std::to_string(index);
}

bool IsBinaryLike(const ModelImage& image, std::int64_t variable) {
  Integrality kind = image.EffectiveIntegrality(variable);
  if (kind == Integrality::kBinary) return true;
  if (kind != Integrality::kInteger) return false;
  auto [lo, hi] = image.EffectiveBounds(variable);
  return lo >= 0.0 && hi <= 1.0;
}

// Cholesky of (M + shift I); false if a pivot is not positive.
bool CholeskySucceeds(std::vector<double> m, std::int64_t n, double shift) {
  for (std::int64_t i = 0; i < n; ++i) m[i * n + i] += shift;
  for (std::int64_t j = 0; j < n; ++j) {
    double d = m[j * n + j];
    for (std::int64_t k = 0; k < j; ++k) d -= m[j * n + k] * m[j * n + k];
    if (!(d > 0.0)) return false;
    d = std::sqrt(d);
    m[j * n + j] = d;
    for (std::int64_t i = j + 1; i < n; ++i) {
      double s = m[i * n + j];
      for (std::int64_t k = 0; k < j; ++k) s -= m[i * n + k] * m[j * n + k];
      m[i * n + j] = s / d;
    }
  }
  return true;
}

void RenderAffine(std::ostringstream& out, const ScalarAffineFunction& f,
                  const std::vector<std::int64_t>& ordinal, bool with_constant) {
  out << "[";
  if (with_constant) out << FormatNumber(f.constant) << ";";
  for (const LinearTerm& t : f.terms) {
    out << " " << ordinal[t.variable] << ":" << FormatNumber(t.coefficient);
  }
  out << "]";
}

void RenderSet(std::ostringstream& out, const ConstraintSet& set) {
  out << SetName(set);
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LessEqual>) {
          out << "(" << FormatNumber(s.upper) << ")";
        } else if constexpr (std::is_same_v<T, GreaterEqual>) {
          out << "(" << FormatNumber(s.lower) << ")";
        } else if constexpr (std::is_same_v<T, EqualTo>) {
          out << "(" << FormatNumber(s.value) << ")";
        } else if constexpr (std::is_same_v<T, Interval>) {
          out << "(" << FormatNumber(s.lower) << "," << FormatNumber(s.upper)
              << ")";
        } else if constexpr (std::is_same_v<T, Indicator>) {
          out << "(" << (s.activate_on ? 1 : 0) << ",";
          if (const auto* le = std::get_if<LessEqual>(&s.inner)) {
            out << "<=" << FormatNumber(le->upper);
          } else {
            out << ">=" << FormatNumber(std::get<GreaterEqual>(s.inner).lower);
          }
          out << ")";
        } else if constexpr (std::is_same_v<T, PsdCone>) {
          out << "(" << s.side << ")";
        } else if constexpr (std::is_same_v<T, UserSet>) {
          out << "(";
          for (double p : s.payload) out << FormatNumber(p) << ",";
          out << ")";
        }
      },
      set);
}

}  // namespace

std::string_view DeltaName(const Delta& delta) {
  static constexpr std::string_view kNames[] = {
      "add_variable",      "add_constraint", "delete_variable",
      "delete_constraint", "set_coefficient", "set_variable_bounds",
      "set_objective",     "set_attribute"};
  return kNames[delta.index()];
}

std::optional<std::int64_t> SingleVariable(const ScalarAffineFunction& f) {
  if (f.constant != 0.0 || f.terms.size() != 1 ||
      f.terms[0].coefficient != 1.0) {
    return std::nullopt;
  }
  return f.terms[0].variable;
}

void ModelImage::Reserve(std::int64_t variables, std::int64_t constraints) {
  variables_.reserve(variables);
  variable_live_.reserve(variables);
  variable_uses_.reserve(variables);
  integer_records_.reserve(variables);
  binary_records_.reserve(variables);
  constraints_.reserve(constraints);
}

std::int64_t ModelImage::AddVariable(VariableData variable) {
  if (std::isnan(variable.lower) || std::isnan(variable.upper) ||
      variable.lower > variable.upper) {
    throw Error(ErrorCode::kInvalidBounds,
                "variable bounds [" + FormatNumber(variable.lower) + ", " +
                    FormatNumber(variable.upper) + "]");
  }
  variables_.push_back(std::move(variable));
  variable_live_.push_back(1);
  variable_uses_.push_back(0);
  integer_records_.push_back(0);
  binary_records_.push_back(0);
  ++live_variables_;
  return variable_slots() - 1;
}

bool ModelImage::IsVariableLive(std::int64_t variable) const {
  return variable >= 0 && variable < variable_slots() &&
         variable_live_[variable] != 0;
}

bool ModelImage::IsConstraintLive(std::int64_t constraint) const {
  return constraint >= 0 && constraint < constraint_slots() &&
         constraints_[constraint].has_value();
}

void ModelImage::CheckVariable(std::int64_t variable) const {
  if (!IsVariableLive(variable)) {
    throw Error(ErrorCode::kStaleReference,
                Describe(variable, "variable") + " is not live");
  }
}

void ModelImage::CheckConstraint(std::int64_t constraint) const {
  if (!IsConstraintLive(constraint)) {
    throw Error(ErrorCode::kStaleReference,
                Describe(constraint, "constraint") + " is not live");
  }
}

const VariableData& ModelImage::variable(std::int64_t variable) const {
  CheckVariable(variable);
  return variables_[variable];
}

const ConstraintData& ModelImage::constraint(std::int64_t constraint) const {
  CheckConstraint(constraint);
  return *constraints_[constraint];
}

void ModelImage::set_variable_name(std::int64_t variable, std::string name) {
  CheckVariable(variable);
  variables_[variable].name = std::move(name);
}

void ModelImage::set_constraint_name(std::int64_t constraint,
                                     std::string name) {
  CheckConstraint(constraint);
  constraints_[constraint]->name = std::move(name);
}

Integrality ModelImage::EffectiveIntegrality(std::int64_t variable) const {
  CheckVariable(variable);
  if (binary_records_[variable] > 0 ||
      variables_[variable].integrality == Integrality::kBinary) {
    return Integrality::kBinary;
  }
  if (integer_records_[variable] > 0 ||
      variables_[variable].integrality == Integrality::kInteger) {
    return Integrality::kInteger;
  }
  return Integrality::kContinuous;
}

std::pair<double, double> ModelImage::EffectiveBounds(
    std::int64_t variable) const {
  const VariableData& v = this->variable(variable);
  if (EffectiveIntegrality(variable) == Integrality::kBinary) {
    return {std::max(v.lower, 0.0), std::min(v.upper, 1.0)};
  }
  return {v.lower, v.upper};
}

bool ModelImage::HasIntegerVariables() const {
  for (std::int64_t j = 0; j < variable_slots(); ++j) {
    if (variable_live_[j] &&
        EffectiveIntegrality(j) != Integrality::kContinuous) {
      return true;
    }
  }
  return false;
}

std::int32_t ModelImage::UseCount(std::int64_t variable) const {
  CheckVariable(variable);
  return variable_uses_[variable];
}

void ModelImage::ValidateConstraint(const ConstraintData& c) const {
  ForEachVariable(c.function, [this](std::int64_t v) { CheckVariable(v); });

  const SetTag tag = TagOf(c.set);
  const FunctionKind kind = KindOf(c.function);
  auto mismatch = [&](const std::string& why) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(FunctionKindName(kind)) + " in " +
                    SetName(c.set) + ": " + why);
  };

  if (IsLinearSet(tag)) {
    if (kind != FunctionKind::kScalarAffine &&
        kind != FunctionKind::kScalarQuadratic) {
      mismatch("scalar set requires a scalar function");
    }
    if (const auto* s = std::get_if<Interval>(&c.set)) {
      if (!(s->lower <= s->upper)) {
        throw Error(ErrorCode::kInvalidBounds,
                    "interval [" + FormatNumber(s->lower) + ", " +
                        FormatNumber(s->upper) + "]");
      }
    }
    return;
  }
  if (IsIntegralitySet(tag)) {
    const auto* f = std::get_if<ScalarAffineFunction>(&c.function);
    if (f == nullptr || !SingleVariable(*f).has_value()) {
      mismatch("integrality applies to a single variable");
    }
    return;
  }
  switch (tag) {
    case SetTag::kIndicator: {
      const auto* f = std::get_if<VectorAffineFunction>(&c.function);
      if (f == nullptr || f->rows.size() != 2) {
        mismatch("indicator requires [z; a'x + b]");
      }
      std::optional<std::int64_t> z = SingleVariable(f->rows[0]);
      if (!z.has_value()) mismatch("first row must be the binary variable");
      if (!IsBinaryLike(*this, *z)) {
        mismatch(Describe(*z, "activation variable") + " is not binary");
      }
      return;
    }
    case SetTag::kComplements: {
      const auto* f = std::get_if<VectorAffineFunction>(&c.function);
      if (f == nullptr || f->rows.size() != 2) {
        mismatch("complements requires [f; x]");
      }
      std::optional<std::int64_t> x = SingleVariable(f->rows[1]);
      if (!x.has_value()) mismatch("second row must be a single variable");
      auto [lo, hi] = EffectiveBounds(*x);
      if (std::isinf(lo) && std::isinf(hi)) {
        throw Error(ErrorCode::kUnboundedComplementsVariable,
                    Describe(*x, "complemented variable") +
                        " has no finite bound");
      }
      return;
    }
    case SetTag::kPsdCone: {
      const auto* f = std::get_if<MatrixAffineFunction>(&c.function);
      const auto& cone = std::get<PsdCone>(c.set);
      if (f == nullptr || f->side != cone.side || cone.side <= 0) {
        mismatch("PSD cone requires a square matrix of matching side");
      }
      if (!f->IsSymmetric()) mismatch("matrix is not symmetric");
      return;
    }
    case SetTag::kUserSet: {
      const auto& user = std::get<UserSet>(c.set);
      auto registration = LookupSet(user.key);
      if (registration == nullptr) {
        throw Error(ErrorCode::kInvalidArgument,
                    "set \"" + user.key + "\" is not registered");
      }
      if (registration->validator &&
          !registration->validator(c.function, user)) {
        mismatch("rejected by the registered validator");
      }
      return;
    }
    default:
      return;
  }
}

void ModelImage::AdjustUses(const ConstraintFunction& f, int delta) {
  ForEachVariable(f, [&](std::int64_t v) { variable_uses_[v] += delta; });
}

void ModelImage::AdjustUses(const ScalarQuadraticFunction& f, int delta) {
  for (const LinearTerm& t : f.affine.terms) variable_uses_[t.variable] += delta;
  for (const QuadraticTerm& q : f.quadratic) {
    variable_uses_[q.first] += delta;
    variable_uses_[q.second] += delta;
  }
}

void ModelImage::AdjustIntegrality(const ConstraintData& c, int delta) {
  const SetTag tag = TagOf(c.set);
  if (!IsIntegralitySet(tag)) return;
  std::int64_t v = *SingleVariable(std::get<ScalarAffineFunction>(c.function));
  auto& records = tag == SetTag::kBinary ? binary_records_ : integer_records_;
  records[v] = static_cast<std::uint16_t>(records[v] + delta);
}

std::int64_t ModelImage::AddConstraint(ConstraintData constraint) {
  ValidateConstraint(constraint);
  AdjustUses(constraint.function, +1);
  AdjustIntegrality(constraint, +1);
  constraints_.push_back(std::move(constraint));
  ++live_constraints_;
  return constraint_slots() - 1;
}

void ModelImage::DeleteConstraint(std::int64_t constraint) {
  CheckConstraint(constraint);
  AdjustUses(constraints_[constraint]->function, -1);
  AdjustIntegrality(*constraints_[constraint], -1);
  constraints_[constraint].reset();
  --live_constraints_;
}

std::vector<std::int64_t> ModelImage::DeleteVariable(std::int64_t variable,
                                                     bool cascade) {
  CheckVariable(variable);
  std::vector<std::int64_t> removed;
  if (variable_uses_[variable] > 0) {
    if (!cascade) {
      throw Error(ErrorCode::kVariableInUse,
                  Describe(variable, "variable") + " is referenced by " +
                      std::to_string(variable_uses_[variable]) +
                      " term(s); delete with cascade to remove them");
    }
    for (std::int64_t c = 0; c < constraint_slots(); ++c) {
      if (!constraints_[c].has_value()) continue;
      ConstraintData& data = *constraints_[c];
      bool referenced = false;
      ForEachVariable(data.function, [&](std::int64_t v) {
        referenced = referenced || v == variable;
      });
      if (!referenced) continue;
      const SetTag tag = TagOf(data.set);
      bool keyed = IsIntegralitySet(tag);
      if (tag == SetTag::kIndicator || tag == SetTag::kComplements) {
        const auto& rows = std::get<VectorAffineFunction>(data.function).rows;
        const auto& key_row = tag == SetTag::kIndicator ? rows[0] : rows[1];
        keyed = SingleVariable(key_row) == variable;
      }
      if (keyed) {
        DeleteConstraint(c);
        removed.push_back(c);
        continue;
      }
      AdjustUses(data.function, -1);
      std::visit(
          [variable](auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, ScalarAffineFunction> ||
                          std::is_same_v<T, ScalarQuadraticFunction>) {
              f.RemoveVariable(variable);
            } else if constexpr (std::is_same_v<T, VectorAffineFunction>) {
              for (auto& row : f.rows) row.RemoveVariable(variable);
            } else {
              for (auto& e : f.entries) e.RemoveVariable(variable);
            }
          },
          data.function);
      AdjustUses(data.function, +1);
    }
    AdjustUses(objective_.function, -1);
    objective_.function.RemoveVariable(variable);
    AdjustUses(objective_.function, +1);
  }
  variable_live_[variable] = 0;
  --live_variables_;
  return removed;
}

void ModelImage::SetCoefficient(std::int64_t constraint, std::int64_t variable,
                                double coefficient) {
  CheckConstraint(constraint);
  CheckVariable(variable);
  ConstraintData& data = *constraints_[constraint];
  ScalarAffineFunction* affine = nullptr;
  if (auto* f = std::get_if<ScalarAffineFunction>(&data.function)) {
    affine = f;
  } else if (auto* q = std::get_if<ScalarQuadraticFunction>(&data.function)) {
    affine = &q->affine;
  } else {
    throw Error(ErrorCode::kUnsupportedModification,
                "coefficient modification of a " +
                    std::string(FunctionKindName(KindOf(data.function))) +
                    " constraint");
  }
  if (IsIntegralitySet(TagOf(data.set))) {
    throw Error(ErrorCode::kUnsupportedModification,
                "coefficient modification of an integrality constraint");
  }
  const bool before = affine->References(variable);
  affine->SetCoefficient(variable, coefficient);
  const bool after = affine->References(variable);
  variable_uses_[variable] += static_cast<int>(after) - static_cast<int>(before);
}

void ModelImage::SetVariableBounds(std::int64_t variable, double lower,
                                   double upper) {
  CheckVariable(variable);
  if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
    throw Error(ErrorCode::kInvalidBounds,
                "variable bounds [" + FormatNumber(lower) + ", " +
                    FormatNumber(upper) + "]");
  }
  variables_[variable].lower = lower;
  variables_[variable].upper = upper;
}

void ModelImage::SetObjective(ObjectiveData objective) {
  const auto& f = objective.function;
  for (const LinearTerm& t : f.affine.terms) CheckVariable(t.variable);
  for (const QuadraticTerm& q : f.quadratic) {
    CheckVariable(q.first);
    CheckVariable(q.second);
  }
  AdjustUses(objective_.function, -1);
  objective_ = std::move(objective);
  AdjustUses(objective_.function, +1);
}

std::int64_t ModelImage::Apply(const Delta& delta) {
  return std::visit(
      [this](const auto& d) -> std::int64_t {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, AddVariableDelta>) {
          return AddVariable(d.variable);
        } else if constexpr (std::is_same_v<T, AddConstraintDelta>) {
          return AddConstraint(d.constraint);
        } else if constexpr (std::is_same_v<T, DeleteVariableDelta>) {
          DeleteVariable(d.variable, d.cascade);
          return -1;
        } else if constexpr (std::is_same_v<T, DeleteConstraintDelta>) {
          DeleteConstraint(d.constraint);
          return -1;
        } else if constexpr (std::is_same_v<T, SetCoefficientDelta>) {
          SetCoefficient(d.constraint, d.variable, d.coefficient);
          return -1;
        } else if constexpr (std::is_same_v<T, SetVariableBoundsDelta>) {
          SetVariableBounds(d.variable, d.lower, d.upper);
          return -1;
        } else if constexpr (std::is_same_v<T, SetObjectiveDelta>) {
          SetObjective(d.objective);
          return -1;
        } else {
          throw Error(ErrorCode::kInvalidArgument,
                      "attribute deltas are not structural changes");
        }
      },
      delta);
}

std::vector<std::int64_t> ModelImage::LiveVariables() const {
  std::vector<std::int64_t> out;
  out.reserve(live_variables_);
  for (std::int64_t j = 0; j < variable_slots(); ++j) {
    if (variable_live_[j]) out.push_back(j);
  }
  return out;
}

std::vector<std::int64_t> ModelImage::LiveConstraints() const {
  std::vector<std::int64_t> out;
  out.reserve(live_constraints_);
  for (std::int64_t c = 0; c < constraint_slots(); ++c) {
    if (constraints_[c].has_value()) out.push_back(c);
  }
  return out;
}

std::string ModelImage::Digest() const {
  std::vector<std::int64_t> ordinal(variables_.size(), -1);
  std::int64_t next = 0;
  for (std::int64_t j = 0; j < variable_slots(); ++j) {
    if (variable_live_[j]) ordinal[j] = next++;
  }

  std::ostringstream out;
  out << "sense "
      << (objective_.sense == ObjectiveSense::kMinimize ? "MIN" : "MAX")
      << "\n";
  out << "objective ";
  RenderAffine(out, objective_.function.affine, ordinal, true);
  out << " {";
  for (const QuadraticTerm& q : objective_.function.quadratic) {
    out << " " << ordinal[q.first] << "," << ordinal[q.second] << ":"
        << FormatNumber(q.coefficient);
  }
  out << " }\n";

  static constexpr char kIntegrality[] = {'C', 'I', 'B'};
  for (std::int64_t j = 0; j < variable_slots(); ++j) {
    if (!variable_live_[j]) continue;
    auto [lo, hi] = EffectiveBounds(j);
    out << "var " << ordinal[j] << " " << FormatNumber(lo) << " "
        << FormatNumber(hi) << " "
        << kIntegrality[static_cast<int>(EffectiveIntegrality(j))] << "\n";
  }

  std::int64_t row = 0;
  for (std::int64_t c = 0; c < constraint_slots(); ++c) {
    if (!constraints_[c].has_value()) continue;
    const ConstraintData& data = *constraints_[c];
    const SetTag tag = TagOf(data.set);
    if (IsIntegralitySet(tag)) continue;
    out << "con " << row++ << " " << FunctionKindName(KindOf(data.function))
        << " ";
    if (IsLinearSet(tag)) {
      const ScalarAffineFunction* affine = nullptr;
      const ScalarQuadraticFunction* quad = nullptr;
      if (const auto* f = std::get_if<ScalarAffineFunction>(&data.function)) {
        affine = f;
      } else {
        quad = &std::get<ScalarQuadraticFunction>(data.function);
        affine = &quad->affine;
      }
      RenderAffine(out, *affine, ordinal, false);
      if (quad != nullptr) {
        out << " {";
        for (const QuadraticTerm& q : quad->quadratic) {
          out << " " << ordinal[q.first] << "," << ordinal[q.second] << ":"
              << FormatNumber(q.coefficient);
        }
        out << " }";
      }
      out << " ";
      RenderSet(out, ShiftSet(data.set, affine->constant));
    } else {
      std::visit(
          [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, VectorAffineFunction>) {
              for (const auto& r : f.rows) RenderAffine(out, r, ordinal, true);
            } else if constexpr (std::is_same_v<T, MatrixAffineFunction>) {
              out << f.side;
              for (const auto& e : f.entries) RenderAffine(out, e, ordinal, true);
            } else if constexpr (std::is_same_v<T, ScalarAffineFunction>) {
              RenderAffine(out, f, ordinal, true);
            } else {
              RenderAffine(out, f.affine, ordinal, true);
            }
          },
          data.function);
      out << " ";
      RenderSet(out, data.set);
    }
    out << "\n";
  }
  return out.str();
}

double ObjectiveValue(const ModelImage& image, std::span<const double> x) {
  return Evaluate(image.objective().function, x);
}

FeasibilityReport CheckFeasibility(const ModelImage& image,
                                   std::span<const double> x,
                                   double tolerance) {
  FeasibilityReport report;
  auto fail = [&report](std::string why) {
    report.feasible = false;
    report.violation = std::move(why);
    return report;
  };
  if (static_cast<std::int64_t>(x.size()) < image.variable_slots()) {
    return fail("point has fewer entries than variable slots");
  }
  for (std::int64_t j : image.LiveVariables()) {
    if (!std::isfinite(x[j])) {
      return fail(Describe(j, "variable") + " has no finite value");
    }
    auto [lo, hi] = image.EffectiveBounds(j);
    if (x[j] < lo - tolerance || x[j] > hi + tolerance) {
      return fail(Describe(j, "variable") + " violates its bounds");
    }
    if (image.EffectiveIntegrality(j) != Integrality::kContinuous &&
        std::abs(x[j] - std::round(x[j])) > tolerance) {
      return fail(Describe(j, "variable") + " is not integral");
    }
  }
  for (std::int64_t c : image.LiveConstraints()) {
    const ConstraintData& data = image.constraint(c);
    const SetTag tag = TagOf(data.set);
    const std::string what = Describe(c, "constraint");
    if (IsIntegralitySet(tag)) continue;
    if (IsLinearSet(tag)) {
      double value = 0.0;
      if (const auto* f = std::get_if<ScalarAffineFunction>(&data.function)) {
        value = Evaluate(*f, x);
      } else {
        value = Evaluate(std::get<ScalarQuadraticFunction>(data.function), x);
      }
      if (value < SetLower(data.set) - tolerance ||
          value > SetUpper(data.set) + tolerance) {
        return fail(what + " is violated");
      }
      continue;
    }
    switch (tag) {
      case SetTag::kIndicator: {
        const auto& rows = std::get<VectorAffineFunction>(data.function).rows;
        const auto& set = std::get<Indicator>(data.set);
        const double z = Evaluate(rows[0], x);
        const bool active = std::abs(z - (set.activate_on ? 1.0 : 0.0)) <= tolerance;
        if (!active) break;
        const double value = Evaluate(rows[1], x);
        if (const auto* le = std::get_if<LessEqual>(&set.inner)) {
          if (value > le->upper + tolerance) return fail(what + " is violated");
        } else if (value < std::get<GreaterEqual>(set.inner).lower - tolerance) {
          return fail(what + " is violated");
        }
        break;
      }
      case SetTag::kComplements: {
        const auto& rows = std::get<VectorAffineFunction>(data.function).rows;
        const double f = Evaluate(rows[0], x);
        const std::int64_t xi = *SingleVariable(rows[1]);
        auto [lo, hi] = image.EffectiveBounds(xi);
        const bool at_lower = std::abs(x[xi] - lo) <= tolerance;
        const bool at_upper = std::abs(x[xi] - hi) <= tolerance;
        bool ok = true;
        if (at_lower && at_upper) {
          ok = true;
        } else if (at_lower) {
          ok = f >= -tolerance;
        } else if (at_upper) {
          ok = f <= tolerance;
        } else {
          ok = std::abs(f) <= tolerance;
        }
        if (!ok) return fail(what + " is violated");
        break;
      }
      case SetTag::kPsdCone: {
        const auto& m = std::get<MatrixAffineFunction>(data.function);
        std::vector<double> values(m.entries.size());
        for (std::size_t k = 0; k < values.size(); ++k) {
          values[k] = Evaluate(m.entries[k], x);
        }
        if (!CholeskySucceeds(std::move(values), m.side, tolerance)) {
          return fail(what + " is not positive semidefinite");
        }
        break;
      }
      case SetTag::kUserSet: {
        const auto& user = std::get<UserSet>(data.set);
        auto registration = LookupSet(user.key);
        if (registration == nullptr || !registration->contains) break;
        std::vector<double> rows;
        std::visit(
            [&](const auto& f) {
              using T = std::decay_t<decltype(f)>;
              if constexpr (std::is_same_v<T, ScalarAffineFunction>) {
                rows.push_back(Evaluate(f, x));
              } else if constexpr (std::is_same_v<T, ScalarQuadraticFunction>) {
                rows.push_back(Evaluate(f, x));
              } else if constexpr (std::is_same_v<T, VectorAffineFunction>) {
                for (const auto& r : f.rows) rows.push_back(Evaluate(r, x));
              } else {
                for (const auto& e : f.entries) rows.push_back(Evaluate(e, x));
              }
            },
            data.function);
        if (!registration->contains(rows, user)) {
          return fail(what + " is outside set " + user.key);
        }
        break;
      }
      default:
        break;
    }
  }
  return report;
}

}  // namespace amodel
