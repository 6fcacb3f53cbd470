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

#include "amodel/backend.h"

#include <algorithm>

#include "amodel/errors.h"

namespace amodel {

std::string_view ToString(CallbackKind kind) {
  switch (kind) {
    case CallbackKind::kLazyConstraint: return "LazyConstraint";
    case CallbackKind::kUserCut: return "UserCut";
    case CallbackKind::kHeuristic: return "HeuristicSolution";
  }
  return "?";
}

bool BackendCapabilities::Supports(FunctionKind kind,
                                   const ConstraintSet& set) const {
  return supports_constraint && supports_constraint(kind, set);
}

bool BackendCapabilities::SupportsAttribute(const AttributeKey& key) const {
  return supports_attribute && supports_attribute(key);
}

bool BackendCapabilities::SupportsCallback(CallbackKind kind) const {
  return std::find(callbacks.begin(), callbacks.end(), kind) !=
         callbacks.end();
}

IisResult Backend::ComputeIis() {
  throw Error(ErrorCode::kUnsupportedByBackend,
              name() + " does not compute infeasible subsets");
}

void ImageBackend::CheckSupported(const VariableData& variable) const {
  if (variable.integrality == Integrality::kContinuous) return;
  ConstraintSet set = variable.integrality == Integrality::kInteger
                          ? ConstraintSet(Integer{})
                          : ConstraintSet(Binary{});
  if (!capabilities().Supports(FunctionKind::kScalarAffine, set)) {
    throw Error(ErrorCode::kUnsupportedConstraint,
                "ScalarAffine-in-" + SetName(set) + " is not supported by " +
                    name());
  }
}

void ImageBackend::CheckSupported(const ConstraintData& constraint) const {
  const FunctionKind kind = KindOf(constraint.function);
  if (!capabilities().Supports(kind, constraint.set)) {
    throw Error(ErrorCode::kUnsupportedConstraint,
                std::string(FunctionKindName(kind)) + "-in-" +
                    SetName(constraint.set) + " is not supported by " +
                    name());
  }
}

void ImageBackend::CheckSupported(const ObjectiveData& objective) const {
  if (!objective.function.quadratic.empty() &&
      !capabilities().quadratic_objective) {
    throw Error(ErrorCode::kNotLinear,
                name() + " does not accept a quadratic objective");
  }
}

void ImageBackend::CheckSupported(const ModelImage& image) const {
  for (std::int64_t v : image.LiveVariables()) {
    CheckSupported(image.variable(v));
  }
  for (std::int64_t c : image.LiveConstraints()) {
    CheckSupported(image.constraint(c));
  }
  CheckSupported(image.objective());
}

void ImageBackend::Load(ModelImage image) {
  CheckSupported(image);
  image_ = std::move(image);
  results_ = SolveResults{};
}

std::int64_t ImageBackend::Apply(const Delta& delta) {
  if (!capabilities().incremental) {
    throw Error(ErrorCode::kNotIncremental,
                name() + " accepts only a full load");
  }
  if (const auto* a = std::get_if<SetAttributeDelta>(&delta)) {
    SetAttribute(a->key, a->target, a->value);
    return -1;
  }
  if (const auto* a = std::get_if<AddVariableDelta>(&delta)) {
    CheckSupported(a->variable);
  } else if (const auto* a = std::get_if<AddConstraintDelta>(&delta)) {
    CheckSupported(a->constraint);
  } else if (const auto* a = std::get_if<SetObjectiveDelta>(&delta)) {
    CheckSupported(a->objective);
  }
  results_ = SolveResults{};
  return image_.Apply(delta);
}

void ImageBackend::SetAttribute(const AttributeKey& key, std::int64_t target,
                                const AttributeValue& value) {
  AttributeValue checked = CheckAttributeValue(key, value);
  if (!capabilities().SupportsAttribute(key)) {
    throw Error(ErrorCode::kUnsupportedByBackend,
                ToString(key) + " is not supported by " + name());
  }
  attributes_[{key, target}] = std::move(checked);
}

std::optional<AttributeValue> ImageBackend::GetAttribute(
    const AttributeKey& key, std::int64_t target) const {
  auto it = attributes_.find({key, target});
  if (it == attributes_.end()) return std::nullopt;
  return it->second;
}

void ImageBackend::SetCallback(CallbackKind kind, BackendCallback callback) {
  if (!callback) {
    callbacks_.erase(kind);
    return;
  }
  if (!capabilities().SupportsCallback(kind)) {
    throw Error(ErrorCode::kUnsupportedCallback,
                std::string(ToString(kind)) + " callbacks are not supported by " +
                    name());
  }
  callbacks_[kind] = std::move(callback);
}

const BackendCallback* ImageBackend::callback(CallbackKind kind) const {
  auto it = callbacks_.find(kind);
  return it == callbacks_.end() ? nullptr : &it->second;
}

void ImageBackend::Optimize() {
  Deadline clock(kInf);
  results_ = SolveResults{};
  results_ = Solve();
  results_.solve_time = clock.Elapsed();
}

double ImageBackend::RealOption(const std::string& name,
                                double fallback) const {
  auto value = GetAttribute(OptimizerAttribute(name), -1);
  return value ? AsReal(*value) : fallback;
}

std::int64_t ImageBackend::IntOption(const std::string& name,
                                     std::int64_t fallback) const {
  auto value = GetAttribute(OptimizerAttribute(name), -1);
  return value ? AsInt(*value) : fallback;
}

bool ImageBackend::BoolOption(const std::string& name, bool fallback) const {
  auto value = GetAttribute(OptimizerAttribute(name), -1);
  return value ? AsBool(*value) : fallback;
}

double ImageBackend::VariableReal(const std::string& name,
                                  std::int64_t variable,
                                  double fallback) const {
  auto value = GetAttribute(VariableAttribute(name), variable);
  return value ? AsReal(*value) : fallback;
}

Deadline::Deadline(double seconds)
    : start_(std::chrono::steady_clock::now()),
      seconds_(seconds),
      immediate_(seconds <= 0.0) {}

bool Deadline::Expired() const { return immediate_ || Elapsed() >= seconds_; }

double Deadline::Elapsed() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start_)
      .count();
}

std::unique_ptr<Backend> OptimizerFactory::Create() const {
  if (!make_) {
    throw Error(ErrorCode::kNoOptimizerAttached, "empty optimizer factory");
  }
  return make_();
}

OptimizerFactory OptimizerWithAttributes(OptimizerFactory base,
                                         AttributePairs pairs) {
  OptimizerFactory out = std::move(base);
  for (auto& pair : pairs) out.attributes_.push_back(std::move(pair));
  return out;
}

}  // namespace amodel
