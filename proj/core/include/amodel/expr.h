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

// Variable references and sparse affine / quadratic expressions.
//
// Expressions are builders: terms are kept in insertion order and duplicate
// keys are folded on insert (an insertion-ordered hash map, the same layout
// an OrderedDict uses). Zero coefficients are tolerated while building and
// only removed by Canonicalize(), which also sorts the terms by variable
// index. Appending a term is amortized O(1), so building a sum over n
// distinct variables is linear in n.

#ifndef AMODEL_EXPR_H_
#define AMODEL_EXPR_H_

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace amodel {

using ModelId = std::uint64_t;

class VariableRef {
 public:
  VariableRef() = default;
  VariableRef(ModelId model_id, std::int64_t index)
      : model_id_(model_id), index_(index) {}

  ModelId model_id() const { return model_id_; }
  std::int64_t index() const { return index_; }

  friend bool operator==(const VariableRef&, const VariableRef&) = default;
  friend auto operator<=>(const VariableRef&, const VariableRef&) = default;

 private:
  ModelId model_id_ = 0;
  std::int64_t index_ = -1;
};

struct VariableRefHash {
  std::size_t operator()(const VariableRef& v) const {
    return std::hash<std::int64_t>()(v.index()) ^
           (std::hash<ModelId>()(v.model_id()) << 1);
  }
};

// Canonical key of a quadratic term: first.index() <= second.index().
struct VariablePair {
  VariableRef first;
  VariableRef second;

  friend bool operator==(const VariablePair&, const VariablePair&) = default;
  friend auto operator<=>(const VariablePair&, const VariablePair&) = default;
};

struct VariablePairHash {
  std::size_t operator()(const VariablePair& p) const {
    VariableRefHash h;
    return h(p.first) * 1000003u ^ h(p.second);
  }
};

namespace internal {

// Insertion-ordered map from Key to coefficient with O(1) amortized folding.
// The hash index is only materialized once the map grows past a handful of
// entries; small maps use a linear scan.
template <typename Key, typename Hash>
class OrderedTermMap {
 public:
  struct Entry {
    Key key;
    double coefficient;
  };

  OrderedTermMap() = default;
  OrderedTermMap(const OrderedTermMap& other) : entries_(other.entries_) {}
  OrderedTermMap& operator=(const OrderedTermMap& other) {
    if (this != &other) {
      entries_ = other.entries_;
      index_.reset();
    }
    return *this;
  }
  OrderedTermMap(OrderedTermMap&&) noexcept = default;
  OrderedTermMap& operator=(OrderedTermMap&&) noexcept = default;

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  void reserve(std::size_t n) { entries_.reserve(n); }

  void Add(const Key& key, double coefficient) {
    if (Entry* e = Find(key)) {
      e->coefficient += coefficient;
      return;
    }
    Append(key, coefficient);
  }

  void Set(const Key& key, double coefficient) {
    if (Entry* e = Find(key)) {
      e->coefficient = coefficient;
      return;
    }
    Append(key, coefficient);
  }

  double Get(const Key& key) const {
    const Entry* e = const_cast<OrderedTermMap*>(this)->Find(key);
    return e == nullptr ? 0.0 : e->coefficient;
  }

  void Scale(double factor) {
    for (Entry& e : entries_) e.coefficient *= factor;
  }

  // Sorts by key and drops exact zeros. Idempotent.
  void Canonicalize() {
    std::erase_if(entries_, [](const Entry& e) { return e.coefficient == 0.0; });
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });
    index_.reset();
  }

  bool IsCanonical() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].coefficient == 0.0) return false;
      if (i > 0 && !(entries_[i - 1].key < entries_[i].key)) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kIndexThreshold = 16;

  Entry* Find(const Key& key) {
    if (entries_.size() <= kIndexThreshold) {
      for (Entry& e : entries_) {
        if (e.key == key) return &e;
      }
      return nullptr;
    }
    if (index_ == nullptr) RebuildIndex();
    auto it = index_->find(key);
    return it == index_->end() ? nullptr : &entries_[it->second];
  }

  void Append(const Key& key, double coefficient) {
    entries_.push_back({key, coefficient});
    if (index_ != nullptr) {
      index_->emplace(key, entries_.size() - 1);
    } else if (entries_.size() > kIndexThreshold) {
      RebuildIndex();
    }
  }

  void RebuildIndex() {
    index_ = std::make_unique<std::unordered_map<Key, std::size_t, Hash>>();
    index_->reserve(entries_.size() * 2);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      index_->emplace(entries_[i].key, i);
    }
  }

  std::vector<Entry> entries_;
  std::unique_ptr<std::unordered_map<Key, std::size_t, Hash>> index_;
};

}  // namespace internal

class AffExpr {
 public:
  using TermMap = internal::OrderedTermMap<VariableRef, VariableRefHash>;
  using Term = TermMap::Entry;

  AffExpr() = default;
  AffExpr(double constant) : constant_(constant) {}  // NOLINT
  AffExpr(VariableRef variable);                     // NOLINT

  double constant() const { return constant_; }
  void set_constant(double constant) { constant_ = constant; }

  // Identity of the model the referenced variables belong to; 0 while the
  // expression has no variable terms.
  ModelId model_id() const { return model_id_; }

  std::span<const Term> terms() const { return terms_.entries(); }
  std::size_t num_terms() const { return terms_.size(); }
  void reserve(std::size_t n) { terms_.reserve(n); }

  double coefficient(VariableRef variable) const;

  // Adds coefficient * variable, folding into an existing term.
  void AddTerm(double coefficient, VariableRef variable);
  void SetCoefficient(VariableRef variable, double coefficient);

  AffExpr& Canonicalize();
  bool IsCanonical() const { return terms_.IsCanonical(); }

  AffExpr& operator+=(const AffExpr& other);
  AffExpr& operator-=(const AffExpr& other);
  AffExpr& operator*=(double factor);
  AffExpr& operator/=(double divisor);

 private:
  friend class QuadExpr;
  void AdoptModel(ModelId id);

  ModelId model_id_ = 0;
  double constant_ = 0.0;
  TermMap terms_;
};

class QuadExpr {
 public:
  using TermMap = internal::OrderedTermMap<VariablePair, VariablePairHash>;
  using Term = TermMap::Entry;

  QuadExpr() = default;
  QuadExpr(double constant) : affine_(constant) {}        // NOLINT
  QuadExpr(VariableRef variable) : affine_(variable) {}   // NOLINT
  QuadExpr(AffExpr affine) : affine_(std::move(affine)) {}  // NOLINT

  const AffExpr& affine() const { return affine_; }
  AffExpr& mutable_affine() { return affine_; }
  double constant() const { return affine_.constant(); }

  ModelId model_id() const { return affine_.model_id(); }

  // Quadratic terms keyed by (lo, hi) variable pair; coefficient c on key
  // (x, y) contributes c * x * y.
  std::span<const Term> qterms() const { return qterms_.entries(); }
  std::size_t num_qterms() const { return qterms_.size(); }

  double coefficient(VariableRef a, VariableRef b) const;
  void AddQuadTerm(double coefficient, VariableRef a, VariableRef b);

  QuadExpr& Canonicalize();
  bool IsCanonical() const;

  QuadExpr& operator+=(const QuadExpr& other);
  QuadExpr& operator-=(const QuadExpr& other);
  QuadExpr& operator*=(double factor);
  QuadExpr& operator/=(double divisor);

 private:
  AffExpr affine_;
  TermMap qterms_;
};

// Named forms of the arithmetic. All return new values; operands are
// unchanged. Mixing variables of different models raises MixedModels.
AffExpr Add(const AffExpr& a, const AffExpr& b);
AffExpr Scale(double factor, const AffExpr& a);
QuadExpr Multiply(const AffExpr& a, const AffExpr& b);

// Returns canonical copies.
AffExpr Canonical(AffExpr e);
QuadExpr Canonical(QuadExpr e);

// Structural equality of the canonical forms.
bool StructurallyEqual(const AffExpr& a, const AffExpr& b);
bool StructurallyEqual(const QuadExpr& a, const QuadExpr& b);

using Assignment = std::map<VariableRef, double>;

// Raises MissingValue naming the first uncovered variable.
double Evaluate(const AffExpr& e, const Assignment& values);
double Evaluate(const QuadExpr& e, const Assignment& values);
// Lookup may throw to signal a missing value.
double Evaluate(const AffExpr& e,
                const std::function<double(VariableRef)>& lookup);
double Evaluate(const QuadExpr& e,
                const std::function<double(VariableRef)>& lookup);

std::string ToString(const AffExpr& e);
std::string ToString(const QuadExpr& e);

// Operator overloads. Scalars, VariableRef and AffExpr combine into AffExpr;
// anything involving a QuadExpr or a product of two affine operands yields a
// QuadExpr.
namespace expr_internal {
template <typename T>
using Bare = std::remove_cvref_t<T>;
template <typename T>
concept Scalar = std::is_arithmetic_v<Bare<T>>;
template <typename T>
concept AffineOperand =
    std::same_as<Bare<T>, VariableRef> || std::same_as<Bare<T>, AffExpr>;
template <typename T>
concept AffineLike = Scalar<T> || AffineOperand<T>;
template <typename T>
concept QuadLike = AffineLike<T> || std::same_as<Bare<T>, QuadExpr>;

template <AffineLike T>
AffExpr ToAff(const T& value) {
  if constexpr (Scalar<T>) {
    return AffExpr(static_cast<double>(value));
  } else {
    return AffExpr(value);
  }
}
template <QuadLike T>
QuadExpr ToQuad(const T& value) {
  if constexpr (std::same_as<Bare<T>, QuadExpr>) {
    return value;
  } else {
    return QuadExpr(ToAff(value));
  }
}
}  // namespace expr_internal

template <expr_internal::AffineLike L, expr_internal::AffineLike R>
  requires(expr_internal::AffineOperand<L> || expr_internal::AffineOperand<R>)
AffExpr operator+(const L& a, const R& b) {
  AffExpr r = expr_internal::ToAff(a);
  r += expr_internal::ToAff(b);
  return r;
}

template <expr_internal::AffineLike L, expr_internal::AffineLike R>
  requires(expr_internal::AffineOperand<L> || expr_internal::AffineOperand<R>)
AffExpr operator-(const L& a, const R& b) {
  AffExpr r = expr_internal::ToAff(a);
  r -= expr_internal::ToAff(b);
  return r;
}

template <expr_internal::QuadLike L, expr_internal::QuadLike R>
  requires(std::same_as<expr_internal::Bare<L>, QuadExpr> ||
           std::same_as<expr_internal::Bare<R>, QuadExpr>)
QuadExpr operator+(const L& a, const R& b) {
  QuadExpr r = expr_internal::ToQuad(a);
  r += expr_internal::ToQuad(b);
  return r;
}

template <expr_internal::QuadLike L, expr_internal::QuadLike R>
  requires(std::same_as<expr_internal::Bare<L>, QuadExpr> ||
           std::same_as<expr_internal::Bare<R>, QuadExpr>)
QuadExpr operator-(const L& a, const R& b) {
  QuadExpr r = expr_internal::ToQuad(a);
  r -= expr_internal::ToQuad(b);
  return r;
}

template <expr_internal::Scalar S, expr_internal::AffineOperand T>
AffExpr operator*(S factor, const T& e) {
  return Scale(static_cast<double>(factor), AffExpr(e));
}
template <expr_internal::AffineOperand T, expr_internal::Scalar S>
AffExpr operator*(const T& e, S factor) {
  return Scale(static_cast<double>(factor), AffExpr(e));
}
template <expr_internal::AffineOperand T, expr_internal::Scalar S>
AffExpr operator/(const T& e, S divisor) {
  AffExpr r(e);
  r /= static_cast<double>(divisor);
  return r;
}
template <expr_internal::AffineOperand L, expr_internal::AffineOperand R>
QuadExpr operator*(const L& a, const R& b) {
  return Multiply(AffExpr(a), AffExpr(b));
}

template <expr_internal::Scalar S>
QuadExpr operator*(S factor, QuadExpr e) {
  e *= static_cast<double>(factor);
  return e;
}
template <expr_internal::Scalar S>
QuadExpr operator*(QuadExpr e, S factor) {
  e *= static_cast<double>(factor);
  return e;
}
template <expr_internal::Scalar S>
QuadExpr operator/(QuadExpr e, S divisor) {
  e /= static_cast<double>(divisor);
  return e;
}

inline AffExpr operator-(const VariableRef& v) { return Scale(-1.0, v); }
inline AffExpr operator-(const AffExpr& e) { return Scale(-1.0, e); }
inline QuadExpr operator-(QuadExpr e) {
  e *= -1.0;
  return e;
}

}  // namespace amodel

#endif  // AMODEL_EXPR_H_
