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

#include "amodel/extensions.h"

#include <map>
#include <mutex>

#include "amodel/errors.h"

namespace amodel {
namespace {

struct Registry {
  std::mutex mu;
  std::map<AttributeKey, AttributeInfo> attributes;
  std::map<std::string, std::shared_ptr<const SetRegistration>> sets;

  Registry() {
    auto builtin = [this](AttributeKey key, PayloadType type, bool forwarded) {
      attributes[std::move(key)] = {type, forwarded, true};
    };
    builtin(OptimizerAttribute("time_limit"), PayloadType::kReal, true);
    builtin(OptimizerAttribute("iteration_limit"), PayloadType::kInt, true);
    builtin(OptimizerAttribute("node_limit"), PayloadType::kInt, true);
    builtin(OptimizerAttribute("gap_tol"), PayloadType::kReal, true);
    builtin(OptimizerAttribute("tol"), PayloadType::kReal, true);
    builtin(OptimizerAttribute("max_iter"), PayloadType::kInt, true);
    builtin(OptimizerAttribute("verbose"), PayloadType::kBool, true);
    builtin(ModelAttribute("name"), PayloadType::kString, false);
    builtin(VariableAttribute("branch_priority"), PayloadType::kReal, true);
  }
};

Registry& Global() {
  static Registry* registry = new Registry();
  return *registry;
}

PayloadType TypeOf(const AttributeValue& value) {
  switch (value.index()) {
    case 0: return PayloadType::kBool;
    case 1: return PayloadType::kInt;
    case 2: return PayloadType::kReal;
    default: return PayloadType::kString;
  }
}

}  // namespace

std::string_view ScopeName(AttributeScope scope) {
  switch (scope) {
    case AttributeScope::kOptimizer: return "optimizer";
    case AttributeScope::kModel: return "model";
    case AttributeScope::kVariable: return "variable";
    case AttributeScope::kConstraint: return "constraint";
  }
  return "?";
}

std::string_view PayloadTypeName(PayloadType type) {
  switch (type) {
    case PayloadType::kBool: return "bool";
    case PayloadType::kInt: return "int";
    case PayloadType::kReal: return "real";
    case PayloadType::kString: return "string";
  }
  return "?";
}

std::string ToString(const AttributeKey& key) {
  return std::string(ScopeName(key.scope)) + " attribute \"" + key.name + "\"";
}

std::string ToString(const AttributeValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return FormatNumber(v);
        } else {
          return v;
        }
      },
      value);
}

void RegisterAttribute(const AttributeKey& key, PayloadType type,
                       bool forwarded) {
  Registry& r = Global();
  std::lock_guard<std::mutex> lock(r.mu);
  if (r.attributes.contains(key)) {
    throw Error(ErrorCode::kDuplicateRegistration,
                ToString(key) + " is already registered");
  }
  r.attributes[key] = {type, forwarded, false};
}

std::optional<AttributeInfo> LookupAttribute(const AttributeKey& key) {
  Registry& r = Global();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.attributes.find(key);
  if (it == r.attributes.end()) return std::nullopt;
  return it->second;
}

AttributeValue CheckAttributeValue(const AttributeKey& key,
                                   const AttributeValue& value) {
  std::optional<AttributeInfo> info = LookupAttribute(key);
  if (!info.has_value()) {
    throw Error(ErrorCode::kUnknownAttribute, ToString(key));
  }
  PayloadType given = TypeOf(value);
  if (given == info->type) return value;
  if (info->type == PayloadType::kReal && given == PayloadType::kInt) {
    return static_cast<double>(std::get<std::int64_t>(value));
  }
  throw Error(ErrorCode::kTypeMismatch,
              ToString(key) + " expects " +
                  std::string(PayloadTypeName(info->type)) + ", got " +
                  std::string(PayloadTypeName(given)));
}

double AsReal(const AttributeValue& value) {
  if (const auto* d = std::get_if<double>(&value)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&value)) {
    return static_cast<double>(*i);
  }
  throw Error(ErrorCode::kTypeMismatch, "expected a real attribute value");
}

std::int64_t AsInt(const AttributeValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return *i;
  throw Error(ErrorCode::kTypeMismatch, "expected an integer attribute value");
}

bool AsBool(const AttributeValue& value) {
  if (const auto* b = std::get_if<bool>(&value)) return *b;
  throw Error(ErrorCode::kTypeMismatch, "expected a boolean attribute value");
}

void RegisterSet(SetRegistration registration) {
  Registry& r = Global();
  std::lock_guard<std::mutex> lock(r.mu);
  if (registration.key.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "set key must be non-empty");
  }
  for (int tag = 0; tag <= static_cast<int>(SetTag::kUserSet); ++tag) {
    if (registration.key == SetTagName(static_cast<SetTag>(tag))) {
      throw Error(ErrorCode::kDuplicateRegistration,
                  "set \"" + registration.key + "\" is a built-in set");
    }
  }
  if (r.sets.contains(registration.key)) {
    throw Error(ErrorCode::kDuplicateRegistration,
                "set \"" + registration.key + "\" is already registered");
  }
  std::string key = registration.key;
  r.sets[key] =
      std::make_shared<const SetRegistration>(std::move(registration));
}

std::shared_ptr<const SetRegistration> LookupSet(const std::string& key) {
  Registry& r = Global();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.sets.find(key);
  return it == r.sets.end() ? nullptr : it->second;
}

}  // namespace amodel
