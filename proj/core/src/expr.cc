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

#include <sstream>

#include "amodel/errors.h"

namespace amodel {
namespace {

ModelId MergeModels(ModelId a, ModelId b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw Error(ErrorCode::kMixedModels,
              "expression combines variables of model " + std::to_string(a) +
                  " and model " + std::to_string(b));
}

VariablePair MakePair(VariableRef a, VariableRef b) {
  if (b.index() < a.index()) std::swap(a, b);
  return {a, b};
}

std::string VariableLabel(VariableRef v) {
  return "v" + std::to_string(v.index());
}

}  // namespace

AffExpr::AffExpr(VariableRef variable) { AddTerm(1.0, variable); }

void AffExpr::AdoptModel(ModelId id) { model_id_ = MergeModels(model_id_, id); }

double AffExpr::coefficient(VariableRef variable) const {
  return terms_.Get(variable);
}

void AffExpr::AddTerm(double coefficient, VariableRef variable) {
  AdoptModel(variable.model_id());
  terms_.Add(variable, coefficient);
}

void AffExpr::SetCoefficient(VariableRef variable, double coefficient) {
  AdoptModel(variable.model_id());
  terms_.Set(variable, coefficient);
}

AffExpr& AffExpr::Canonicalize() {
  terms_.Canonicalize();
  return *this;
}

AffExpr& AffExpr::operator+=(const AffExpr& other) {
  AdoptModel(other.model_id_);
  constant_ += other.constant_;
  for (const Term& t : other.terms()) terms_.Add(t.key, t.coefficient);
  return *this;
}

AffExpr& AffExpr::operator-=(const AffExpr& other) {
  AdoptModel(other.model_id_);
  constant_ -= other.constant_;
  for (const Term& t : other.terms()) terms_.Add(t.key, -t.coefficient);
  return *this;
}

AffExpr& AffExpr::operator*=(double factor) {
  constant_ *= factor;
  terms_.Scale(factor);
  return *this;
}

AffExpr& AffExpr::operator/=(double divisor) { return *this *= 1.0 / divisor; }

double QuadExpr::coefficient(VariableRef a, VariableRef b) const {
  return qterms_.Get(MakePair(a, b));
}

void QuadExpr::AddQuadTerm(double coefficient, VariableRef a, VariableRef b) {
  affine_.AdoptModel(MergeModels(a.model_id(), b.model_id()));
  qterms_.Add(MakePair(a, b), coefficient);
}

QuadExpr& QuadExpr::Canonicalize() {
  affine_.Canonicalize();
  qterms_.Canonicalize();
  return *this;
}

bool QuadExpr::IsCanonical() const {
  return affine_.IsCanonical() && qterms_.IsCanonical();
}

QuadExpr& QuadExpr::operator+=(const QuadExpr& other) {
  affine_ += other.affine_;
  for (const Term& t : other.qterms()) qterms_.Add(t.key, t.coefficient);
  return *this;
}

QuadExpr& QuadExpr::operator-=(const QuadExpr& other) {
  affine_ -= other.affine_;
  for (const Term& t : other.qterms()) qterms_.Add(t.key, -t.coefficient);
  return *this;
}

QuadExpr& QuadExpr::operator*=(double factor) {
  affine_ *= factor;
  qterms_.Scale(factor);
  return *this;
}

QuadExpr& QuadExpr::operator/=(double divisor) {
  return *this *= 1.0 / divisor;
}

AffExpr Add(const AffExpr& a, const AffExpr& b) {
  AffExpr r = a;
  r += b;
  return r;
}

AffExpr Scale(double factor, const AffExpr& a) {
  AffExpr r = a;
  r *= factor;
  return r;
}

QuadExpr Multiply(const AffExpr& a, const AffExpr& b) {
  MergeModels(a.model_id(), b.model_id());
  // a0*b0 + a0*sum(b) + b0*sum(a) + sum(a)*sum(b)
  AffExpr affine(a.constant() * b.constant());
  affine.reserve(a.num_terms() + b.num_terms());
  for (const auto& t : b.terms()) affine.AddTerm(a.constant() * t.coefficient, t.key);
  for (const auto& t : a.terms()) affine.AddTerm(b.constant() * t.coefficient, t.key);
  QuadExpr r(std::move(affine));
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      r.AddQuadTerm(ta.coefficient * tb.coefficient, ta.key, tb.key);
    }
  }
  return r;
}

AffExpr Canonical(AffExpr e) { return std::move(e.Canonicalize()); }
QuadExpr Canonical(QuadExpr e) { return std::move(e.Canonicalize()); }

bool StructurallyEqual(const AffExpr& a, const AffExpr& b) {
  AffExpr ca = Canonical(a);
  AffExpr cb = Canonical(b);
  if (ca.constant() != cb.constant()) return false;
  auto ta = ca.terms();
  auto tb = cb.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].key != tb[i].key || ta[i].coefficient != tb[i].coefficient) {
      return false;
    }
  }
  return true;
}

bool StructurallyEqual(const QuadExpr& a, const QuadExpr& b) {
  if (!StructurallyEqual(a.affine(), b.affine())) return false;
  QuadExpr ca = Canonical(a);
  QuadExpr cb = Canonical(b);
  auto ta = ca.qterms();
  auto tb = cb.qterms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].key != tb[i].key || ta[i].coefficient != tb[i].coefficient) {
      return false;
    }
  }
  return true;
}

double Evaluate(const AffExpr& e,
                const std::function<double(VariableRef)>& lookup) {
  double total = e.constant();
  for (const auto& t : e.terms()) total += t.coefficient * lookup(t.key);
  return total;
}

double Evaluate(const QuadExpr& e,
                const std::function<double(VariableRef)>& lookup) {
  double total = Evaluate(e.affine(), lookup);
  for (const auto& t : e.qterms()) {
    total += t.coefficient * lookup(t.key.first) * lookup(t.key.second);
  }
  return total;
}

namespace {
std::function<double(VariableRef)> MapLookup(const Assignment& values) {
  return [&values](VariableRef v) {
    auto it = values.find(v);
    if (it == values.end()) {
      throw Error(ErrorCode::kMissingValue,
                  "no value for variable " + VariableLabel(v));
    }
    return it->second;
  };
}
}  // namespace

double Evaluate(const AffExpr& e, const Assignment& values) {
  return Evaluate(e, MapLookup(values));
}

double Evaluate(const QuadExpr& e, const Assignment& values) {
  return Evaluate(e, MapLookup(values));
}

std::string ToString(const AffExpr& e) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : e.terms()) {
    if (!first) out << " + ";
    out << t.coefficient << " " << VariableLabel(t.key);
    first = false;
  }
  if (first || e.constant() != 0.0) {
    if (!first) out << " + ";
    out << e.constant();
  }
  return out.str();
}

std::string ToString(const QuadExpr& e) {
  std::ostringstream out;
  out << ToString(e.affine());
  for (const auto& t : e.qterms()) {
    out << " + " << t.coefficient << " " << VariableLabel(t.key.first) << "*"
        << VariableLabel(t.key.second);
  }
  return out.str();
}

}  // namespace amodel
