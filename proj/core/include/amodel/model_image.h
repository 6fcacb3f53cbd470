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

// ModelImage is the full problem data in one index space: variables with
// bounds and integrality, (function, set) constraints and the objective.
// The caching layer keeps one as its cache, every reference backend keeps
// one as its internal state, and it doubles as the snapshot type passed to
// Backend::Load.
//
// Indices are dense and stable: deleting leaves a tombstone, so the index of
// every other variable or constraint never changes.

#ifndef AMODEL_MODEL_IMAGE_H_
#define AMODEL_MODEL_IMAGE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amodel/extensions.h"
#include "amodel/functions.h"

namespace amodel {

enum class Integrality { kContinuous, kInteger, kBinary };
enum class ObjectiveSense { kMinimize, kMaximize };

struct VariableData {
  double lower = -kInf;
  double upper = kInf;
  Integrality integrality = Integrality::kContinuous;
  std::string name;
};

struct ConstraintData {
  ConstraintFunction function;
  ConstraintSet set;
  std::string name;
};

struct ObjectiveData {
  ObjectiveSense sense = ObjectiveSense::kMinimize;
  ScalarQuadraticFunction function;
};

// --- deltas ------------------------------------------------------------------
// One incremental modification. Adds return the new index from Apply.

struct AddVariableDelta {
  VariableData variable;
};
struct AddConstraintDelta {
  ConstraintData constraint;
};
struct DeleteVariableDelta {
  std::int64_t variable = -1;
  bool cascade = false;
};
struct DeleteConstraintDelta {
  std::int64_t constraint = -1;
};
struct SetCoefficientDelta {
  std::int64_t constraint = -1;
  std::int64_t variable = -1;
  double coefficient = 0.0;
};
struct SetVariableBoundsDelta {
  std::int64_t variable = -1;
  double lower = -kInf;
  double upper = kInf;
};
struct SetObjectiveDelta {
  ObjectiveData objective;
};
// target is -1 for optimizer/model scope.
struct SetAttributeDelta {
  AttributeKey key;
  std::int64_t target = -1;
  AttributeValue value;
};

using Delta =
    std::variant<AddVariableDelta, AddConstraintDelta, DeleteVariableDelta,
                 DeleteConstraintDelta, SetCoefficientDelta,
                 SetVariableBoundsDelta, SetObjectiveDelta, SetAttributeDelta>;

std::string_view DeltaName(const Delta& delta);

class ModelImage {
 public:
  ModelImage() = default;

  void Reserve(std::int64_t variables, std::int64_t constraints);

  // Raises InvalidBounds when lower > upper or a bound is NaN.
  std::int64_t AddVariable(VariableData variable);

  // Validates references and the (function, set) shape. Raises
  // StaleReference, ShapeMismatch, InvalidBounds or
  // UnboundedComplementsVariable.
  std::int64_t AddConstraint(ConstraintData constraint);

  // Without cascade a variable still referenced by a constraint or the
  // objective raises VariableInUse. With cascade its terms are removed
  // everywhere; constraints keyed on it (integrality records, indicator
  // activation variable, complemented variable) are deleted and returned.
  std::vector<std::int64_t> DeleteVariable(std::int64_t variable,
                                           bool cascade = false);
  void DeleteConstraint(std::int64_t constraint);

  // Sets the coefficient of `variable` in the affine part of a scalar
  // constraint. Vector and matrix constraints raise UnsupportedModification.
  void SetCoefficient(std::int64_t constraint, std::int64_t variable,
                      double coefficient);
  void SetVariableBounds(std::int64_t variable, double lower, double upper);
  void SetObjective(ObjectiveData objective);

  // Replays one delta. SetAttributeDelta is not a structural change and
  // raises InvalidArgument here.
  std::int64_t Apply(const Delta& delta);

  std::int64_t variable_slots() const {
    return static_cast<std::int64_t>(variables_.size());
  }
  std::int64_t constraint_slots() const {
    return static_cast<std::int64_t>(constraints_.size());
  }
  std::int64_t num_variables() const { return live_variables_; }
  std::int64_t num_constraints() const { return live_constraints_; }

  bool IsVariableLive(std::int64_t variable) const;
  bool IsConstraintLive(std::int64_t constraint) const;

  // Raise StaleReference for dead or out-of-range indices.
  const VariableData& variable(std::int64_t variable) const;
  const ConstraintData& constraint(std::int64_t constraint) const;
  const ObjectiveData& objective() const { return objective_; }

  void set_variable_name(std::int64_t variable, std::string name);
  void set_constraint_name(std::int64_t constraint, std::string name);

  // Integrality and bounds after folding Integer/Binary constraints on the
  // variable into its own flag. Binary implies bounds within [0, 1].
  Integrality EffectiveIntegrality(std::int64_t variable) const;
  std::pair<double, double> EffectiveBounds(std::int64_t variable) const;
  bool HasIntegerVariables() const;

  // Number of live constraints and objective terms referencing the variable.
  std::int32_t UseCount(std::int64_t variable) const;

  std::vector<std::int64_t> LiveVariables() const;
  std::vector<std::int64_t> LiveConstraints() const;

  // Canonical text rendering of the problem: live variables and live
  // non-integrality constraints renumbered in index order, scalar constants
  // folded into the set, names excluded. Two images describe the same
  // problem iff their digests are equal.
  std::string Digest() const;

 private:
  void CheckVariable(std::int64_t variable) const;
  void CheckConstraint(std::int64_t constraint) const;
  void ValidateConstraint(const ConstraintData& c) const;
  void AdjustUses(const ConstraintFunction& f, int delta);
  void AdjustUses(const ScalarQuadraticFunction& f, int delta);
  void AdjustIntegrality(const ConstraintData& c, int delta);

  std::vector<VariableData> variables_;
  std::vector<std::uint8_t> variable_live_;
  std::vector<std::int32_t> variable_uses_;
  std::vector<std::uint16_t> integer_records_;
  std::vector<std::uint16_t> binary_records_;
  std::vector<std::optional<ConstraintData>> constraints_;
  ObjectiveData objective_;
  std::int64_t live_variables_ = 0;
  std::int64_t live_constraints_ = 0;
};

// Returns the single variable of f when f is exactly 1 * x + 0.
std::optional<std::int64_t> SingleVariable(const ScalarAffineFunction& f);

struct FeasibilityReport {
  bool feasible = true;
  std::string violation;  // first violation found, for diagnostics
};

// Checks a full primal point against bounds, integrality and every live
// constraint, using the defining semantics of each set (indicator
// implication, complementarity case split, PSD via Cholesky, user sets via
// their registered membership test).
FeasibilityReport CheckFeasibility(const ModelImage& image,
                                   std::span<const double> x,
                                   double tolerance = 1e-6);

double ObjectiveValue(const ModelImage& image, std::span<const double> x);

}  // namespace amodel

#endif  // AMODEL_MODEL_IMAGE_H_
