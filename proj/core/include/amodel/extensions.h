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

// Attribute keys and the process-wide registries behind the extension
// hooks: user-defined attributes and user-defined constraint sets.

#ifndef AMODEL_EXTENSIONS_H_
#define AMODEL_EXTENSIONS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "amodel/functions.h"

namespace amodel {

class Bridge;

enum class AttributeScope { kOptimizer, kModel, kVariable, kConstraint };

enum class PayloadType { kBool, kInt, kReal, kString };

using AttributeValue = std::variant<bool, std::int64_t, double, std::string>;

struct AttributeKey {
  AttributeScope scope = AttributeScope::kOptimizer;
  std::string name;

  friend bool operator==(const AttributeKey&, const AttributeKey&) = default;
  friend auto operator<=>(const AttributeKey&, const AttributeKey&) = default;
};

inline AttributeKey OptimizerAttribute(std::string name) {
  return {AttributeScope::kOptimizer, std::move(name)};
}
inline AttributeKey ModelAttribute(std::string name) {
  return {AttributeScope::kModel, std::move(name)};
}
inline AttributeKey VariableAttribute(std::string name) {
  return {AttributeScope::kVariable, std::move(name)};
}
inline AttributeKey ConstraintAttribute(std::string name) {
  return {AttributeScope::kConstraint, std::move(name)};
}

struct AttributeInfo {
  PayloadType type = PayloadType::kReal;
  // Forwarded attributes are passed to the attached backend, which must
  // declare support for them. Non-forwarded ones live in the model only.
  bool forwarded = false;
  bool builtin = false;
};

std::string_view ScopeName(AttributeScope scope);
std::string_view PayloadTypeName(PayloadType type);
std::string ToString(const AttributeKey& key);
std::string ToString(const AttributeValue& value);

// Built-in keys are registered on first use of the registry:
//   optimizer: time_limit (real), iteration_limit (int), node_limit (int),
//              gap_tol (real), tol (real), max_iter (int), verbose (bool)
//   model:     name (string)
//   variable:  branch_priority (real)
// Raises DuplicateRegistration if the key exists (built-ins included).
void RegisterAttribute(const AttributeKey& key, PayloadType type,
                       bool forwarded = false);

std::optional<AttributeInfo> LookupAttribute(const AttributeKey& key);

// Validates `value` against the registered payload type. Integers are
// promoted to reals; every other mismatch raises TypeMismatch. Unregistered
// keys raise UnknownAttribute.
AttributeValue CheckAttributeValue(const AttributeKey& key,
                                   const AttributeValue& value);

// Typed accessors for backend code. Raise TypeMismatch.
double AsReal(const AttributeValue& value);
std::int64_t AsInt(const AttributeValue& value);
bool AsBool(const AttributeValue& value);

struct SetRegistration {
  std::string key;
  // Shape check run by add_constraint; false raises ShapeMismatch.
  std::function<bool(const ConstraintFunction&, const UserSet&)> validator;
  // Optional membership test on the evaluated function rows, used by
  // feasibility checks.
  std::function<bool(std::span<const double>, const UserSet&)> contains;
  // Optional rewrite the caching layer may apply for backends that do not
  // support the set natively.
  std::shared_ptr<const Bridge> bridge;
};

// Raises DuplicateRegistration if the key is already registered.
void RegisterSet(SetRegistration registration);

// Returns nullptr for unknown keys.
std::shared_ptr<const SetRegistration> LookupSet(const std::string& key);

}  // namespace amodel

#endif  // AMODEL_EXTENSIONS_H_
