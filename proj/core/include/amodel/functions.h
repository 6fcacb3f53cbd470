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

// Solver-facing functions and constraint sets. Unlike AffExpr/QuadExpr these
// carry no model identity: variables are plain integer columns in whatever
// index space the owning image uses (model cache or a backend).

#ifndef AMODEL_FUNCTIONS_H_
#define AMODEL_FUNCTIONS_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amodel/expr.h"

namespace amodel {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct LinearTerm {
  std::int64_t variable;
  double coefficient;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

struct QuadraticTerm {
  std::int64_t first;  // first <= second
  std::int64_t second;
  double coefficient;  // contributes coefficient * x[first] * x[second]

  friend bool operator==(const QuadraticTerm&, const QuadraticTerm&) = default;
};

// Terms sorted by strictly increasing variable, no zero coefficients.
struct ScalarAffineFunction {
  std::vector<LinearTerm> terms;
  double constant = 0.0;

  double coefficient(std::int64_t variable) const;
  void SetCoefficient(std::int64_t variable, double coefficient);
  bool References(std::int64_t variable) const;
  void RemoveVariable(std::int64_t variable);

  friend bool operator==(const ScalarAffineFunction&,
                         const ScalarAffineFunction&) = default;
};

struct ScalarQuadraticFunction {
  ScalarAffineFunction affine;
  std::vector<QuadraticTerm> quadratic;  // sorted by (first, second)

  bool References(std::int64_t variable) const;
  void RemoveVariable(std::int64_t variable);

  friend bool operator==(const ScalarQuadraticFunction&,
                         const ScalarQuadraticFunction&) = default;
};

struct VectorAffineFunction {
  std::vector<ScalarAffineFunction> rows;

  friend bool operator==(const VectorAffineFunction&,
                         const VectorAffineFunction&) = default;
};

// Square matrix of affine functions in row-major order.
struct MatrixAffineFunction {
  std::int64_t side = 0;
  std::vector<ScalarAffineFunction> entries;

  const ScalarAffineFunction& at(std::int64_t i, std::int64_t j) const {
    return entries[static_cast<std::size_t>(i * side + j)];
  }
  bool IsSymmetric() const;

  friend bool operator==(const MatrixAffineFunction&,
                         const MatrixAffineFunction&) = default;
};

enum class FunctionKind {
  kScalarAffine,
  kScalarQuadratic,
  kVectorAffine,
  kMatrixAffine,
};

std::string_view FunctionKindName(FunctionKind kind);

using ConstraintFunction =
    std::variant<ScalarAffineFunction, ScalarQuadraticFunction,
                 VectorAffineFunction, MatrixAffineFunction>;

FunctionKind KindOf(const ConstraintFunction& f);

// Visits every variable referenced by f (with repetition).
template <typename Fn>
void ForEachVariable(const ConstraintFunction& f, Fn&& fn);

// --- constraint sets -------------------------------------------------------

struct LessEqual {
  double upper;
  friend bool operator==(const LessEqual&, const LessEqual&) = default;
};
struct GreaterEqual {
  double lower;
  friend bool operator==(const GreaterEqual&, const GreaterEqual&) = default;
};
struct EqualTo {
  double value;
  friend bool operator==(const EqualTo&, const EqualTo&) = default;
};
struct Interval {
  double lower;
  double upper;
  friend bool operator==(const Interval&, const Interval&) = default;
};
struct Integer {
  friend bool operator==(const Integer&, const Integer&) = default;
};
struct Binary {
  friend bool operator==(const Binary&, const Binary&) = default;
};
// Paired with a 2-row vector function [z; a'x + b]: when z equals
// activate_on (1 or 0) the second row must lie in `inner`.
struct Indicator {
  bool activate_on = true;
  std::variant<LessEqual, GreaterEqual> inner = LessEqual{0.0};
  friend bool operator==(const Indicator&, const Indicator&) = default;
};
// Paired with a 2-row vector function [f; x] where x is a single variable.
struct Complements {
  friend bool operator==(const Complements&, const Complements&) = default;
};
// Paired with a side x side symmetric matrix function.
struct PsdCone {
  std::int64_t side = 0;
  friend bool operator==(const PsdCone&, const PsdCone&) = default;
};
// A set registered at run time through RegisterSet().
struct UserSet {
  std::string key;
  std::vector<double> payload;
  friend bool operator==(const UserSet&, const UserSet&) = default;
};

using ConstraintSet =
    std::variant<LessEqual, GreaterEqual, EqualTo, Interval, Integer, Binary,
                 Indicator, Complements, PsdCone, UserSet>;

enum class SetTag {
  kLessEqual,
  kGreaterEqual,
  kEqualTo,
  kInterval,
  kInteger,
  kBinary,
  kIndicator,
  kComplements,
  kPsdCone,
  kUserSet,
};

SetTag TagOf(const ConstraintSet& set);
std::string_view SetTagName(SetTag tag);
// Tag name, or the registration key for user sets.
std::string SetName(const ConstraintSet& set);

bool IsLinearSet(SetTag tag);  // LessEqual, GreaterEqual, EqualTo, Interval
bool IsIntegralitySet(SetTag tag);

// Returns the set shifted so that the function's constant can be dropped:
// (a'x + b in S) == (a'x in S - b). Only defined for the four linear sets.
ConstraintSet ShiftSet(const ConstraintSet& set, double offset);

// Lower / upper limits of a linear set (+-inf for open sides).
double SetLower(const ConstraintSet& set);
double SetUpper(const ConstraintSet& set);

// --- conversions and evaluation ---------------------------------------------

// Canonicalizes and strips model identity.
ScalarAffineFunction ToFunction(const AffExpr& e);
ScalarQuadraticFunction ToFunction(const QuadExpr& e);

double Evaluate(const ScalarAffineFunction& f, std::span<const double> x);
double Evaluate(const ScalarQuadraticFunction& f, std::span<const double> x);

// Shortest decimal text that parses back to the same double; "inf"/"-inf"
// for infinities.
std::string FormatNumber(double value);

// --- template implementation -----------------------------------------------

template <typename Fn>
void ForEachVariable(const ConstraintFunction& f, Fn&& fn) {
  auto affine = [&](const ScalarAffineFunction& a) {
    for (const LinearTerm& t : a.terms) fn(t.variable);
  };
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, ScalarAffineFunction>) {
          affine(g);
        } else if constexpr (std::is_same_v<T, ScalarQuadraticFunction>) {
          affine(g.affine);
          for (const QuadraticTerm& q : g.quadratic) {
            fn(q.first);
            fn(q.second);
          }
        } else if constexpr (std::is_same_v<T, VectorAffineFunction>) {
          for (const auto& row : g.rows) affine(row);
        } else {
          for (const auto& e : g.entries) affine(e);
        }
      },
      f);
}

}  // namespace amodel

#endif  // AMODEL_FUNCTIONS_H_
