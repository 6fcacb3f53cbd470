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

#include "amodel/functions.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "amodel/errors.h"

namespace amodel {
namespace {

auto FindTerm(std::vector<LinearTerm>& terms, std::int64_t variable) {
  return std::lower_bound(
      terms.begin(), terms.end(), variable,
      [](const LinearTerm& t, std::int64_t v) { return t.variable < v; });
}

}  // namespace

double ScalarAffineFunction::coefficient(std::int64_t variable) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), variable,
      [](const LinearTerm& t, std::int64_t v) { return t.variable < v; });
  return (it != terms.end() && it->variable == variable) ? it->coefficient
                                                         : 0.0;
}

void ScalarAffineFunction::SetCoefficient(std::int64_t variable,
                                          double value) {
  auto it = FindTerm(terms, variable);
  const bool present = it != terms.end() && it->variable == variable;
  if (value == 0.0) {
    if (present) terms.erase(it);
  } else if (present) {
    it->coefficient = value;
  } else {
    terms.insert(it, {variable, value});
  }
}

bool ScalarAffineFunction::References(std::int64_t variable) const {
  return coefficient(variable) != 0.0;
}

void ScalarAffineFunction::RemoveVariable(std::int64_t variable) {
  SetCoefficient(variable, 0.0);
}

bool ScalarQuadraticFunction::References(std::int64_t variable) const {
  if (affine.References(variable)) return true;
  return std::any_of(quadratic.begin(), quadratic.end(),
                     [variable](const QuadraticTerm& q) {
                       return q.first == variable || q.second == variable;
                     });
}

void ScalarQuadraticFunction::RemoveVariable(std::int64_t variable) {
  affine.RemoveVariable(variable);
  std::erase_if(quadratic, [variable](const QuadraticTerm& q) {
    return q.first == variable || q.second == variable;
  });
}

bool MatrixAffineFunction::IsSymmetric() const {
  if (static_cast<std::int64_t>(entries.size()) != side * side) return false;
  for (std::int64_t i = 0; i < side; ++i) {
    for (std::int64_t j = i + 1; j < side; ++j) {
      if (!(at(i, j) == at(j, i))) return false;
    }
  }
  return true;
}

std::string_view FunctionKindName(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::kScalarAffine: return "ScalarAffine";
    case FunctionKind::kScalarQuadratic: return "ScalarQuadratic";
    case FunctionKind::kVectorAffine: return "VectorAffine";
    case FunctionKind::kMatrixAffine: return "MatrixAffine";
  }
  return "?";
}

FunctionKind KindOf(const ConstraintFunction& f) {
  return static_cast<FunctionKind>(f.index());
}

SetTag TagOf(const ConstraintSet& set) {
  return static_cast<SetTag>(set.index());
}

std::string_view SetTagName(SetTag tag) {
  switch (tag) {
    case SetTag::kLessEqual: return "LessEqual";
    case SetTag::kGreaterEqual: return "GreaterEqual";
    case SetTag::kEqualTo: return "EqualTo";
    case SetTag::kInterval: return "Interval";
    case SetTag::kInteger: return "Integer";
    case SetTag::kBinary: return "Binary";
    case SetTag::kIndicator: return "Indicator";
    case SetTag::kComplements: return "Complements";
    case SetTag::kPsdCone: return "PSDCone";
    case SetTag::kUserSet: return "UserSet";
  }
  return "?";
}

std::string SetName(const ConstraintSet& set) {
  if (const auto* user = std::get_if<UserSet>(&set)) return user->key;
  return std::string(SetTagName(TagOf(set)));
}

bool IsLinearSet(SetTag tag) {
  return tag == SetTag::kLessEqual || tag == SetTag::kGreaterEqual ||
         tag == SetTag::kEqualTo || tag == SetTag::kInterval;
}

bool IsIntegralitySet(SetTag tag) {
  return tag == SetTag::kInteger || tag == SetTag::kBinary;
}

ConstraintSet ShiftSet(const ConstraintSet& set, double offset) {
  if (offset == 0.0) return set;
  if (const auto* s = std::get_if<LessEqual>(&set)) {
    return LessEqual{s->upper - offset};
  }
  if (const auto* s = std::get_if<GreaterEqual>(&set)) {
    return GreaterEqual{s->lower - offset};
  }
  if (const auto* s = std::get_if<EqualTo>(&set)) {
    return EqualTo{s->value - offset};
  }
  if (const auto* s = std::get_if<Interval>(&set)) {
    return Interval{s->lower - offset, s->upper - offset};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "cannot shift non-linear set " + SetName(set));
}

double SetLower(const ConstraintSet& set) {
  if (const auto* s = std::get_if<GreaterEqual>(&set)) return s->lower;
  if (const auto* s = std::get_if<EqualTo>(&set)) return s->value;
  if (const auto* s = std::get_if<Interval>(&set)) return s->lower;
  return -kInf;
}

double SetUpper(const ConstraintSet& set) {
  if (const auto* s = std::get_if<LessEqual>(&set)) return s->upper;
  if (const auto* s = std::get_if<EqualTo>(&set)) return s->value;
  if (const auto* s = std::get_if<Interval>(&set)) return s->upper;
  return kInf;
}

ScalarAffineFunction ToFunction(const AffExpr& e) {
  AffExpr c = Canonical(e);
  ScalarAffineFunction f;
  f.constant = c.constant();
  f.terms.reserve(c.num_terms());
  for (const auto& t : c.terms()) {
    f.terms.push_back({t.key.index(), t.coefficient});
  }
  return f;
}

ScalarQuadraticFunction ToFunction(const QuadExpr& e) {
  QuadExpr c = Canonical(e);
  ScalarQuadraticFunction f;
  f.affine = ToFunction(c.affine());
  f.quadratic.reserve(c.num_qterms());
  for (const auto& t : c.qterms()) {
    f.quadratic.push_back(
        {t.key.first.index(), t.key.second.index(), t.coefficient});
  }
  return f;
}

double Evaluate(const ScalarAffineFunction& f, std::span<const double> x) {
  double total = f.constant;
  for (const LinearTerm& t : f.terms) {
    total += t.coefficient * x[static_cast<std::size_t>(t.variable)];
  }
  return total;
}

double Evaluate(const ScalarQuadraticFunction& f, std::span<const double> x) {
  double total = Evaluate(f.affine, x);
  for (const QuadraticTerm& q : f.quadratic) {
    total += q.coefficient * x[static_cast<std::size_t>(q.first)] *
             x[static_cast<std::size_t>(q.second)];
  }
  return total;
}

std::string FormatNumber(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

}  // namespace amodel
