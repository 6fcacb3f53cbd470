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

#include "amodel/one_shot.h"

#include <cmath>
#include <limits>
#include <memory>
#include <system_error>

#include "amodel/errors.h"
#include "amodel/lp_format.h"
#include "amodel/milp.h"
#include "amodel/qp.h"
#include "amodel/simplex.h"

namespace amodel {
namespace {

constexpr const char* kOptions[] = {"time_limit", "iteration_limit",
                                    "node_limit", "gap_tol",
                                    "tol",        "max_iter",
                                    "verbose"};

}  // namespace

OneShotBackend::OneShotBackend(std::filesystem::path directory)
    : directory_(std::move(directory)), file_(directory_ / "model.lp") {
  capabilities_.incremental = false;
  capabilities_.supports_constraint = [](FunctionKind kind,
                                         const ConstraintSet& set) {
    const SetTag tag = TagOf(set);
    return kind == FunctionKind::kScalarAffine &&
           (tag == SetTag::kLessEqual || tag == SetTag::kGreaterEqual ||
            tag == SetTag::kEqualTo || IsIntegralitySet(tag));
  };
  capabilities_.supports_attribute = [](const AttributeKey& key) {
    if (key.scope != AttributeScope::kOptimizer) return false;
    for (const char* name : kOptions) {
      if (key.name == name) return true;
    }
    return false;
  };
  capabilities_.quadratic_objective = true;
  capabilities_.provides_duals = true;
  capabilities_.max_results = kUnlimitedResults;
}

void OneShotBackend::Load(ModelImage image) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec) {
    throw Error(ErrorCode::kIoError,
                "cannot create " + directory_.string() + ": " + ec.message());
  }
  WriteLpFile(image, file_);
  ModelImage parsed = ReadLpFile(file_);
  ImageBackend::Load(std::move(image));

  variable_slot_ = image_.LiveVariables();
  constraint_slot_.clear();
  for (std::int64_t c : image_.LiveConstraints()) {
    if (!IsIntegralitySet(TagOf(image_.constraint(c).set))) {
      constraint_slot_.push_back(c);
    }
  }
  if (parsed.variable_slots() !=
          static_cast<std::int64_t>(variable_slot_.size()) ||
      parsed.constraint_slots() !=
          static_cast<std::int64_t>(constraint_slot_.size())) {
    throw Error(ErrorCode::kIoError,
                file_.string() + " does not describe the loaded problem");
  }
  parsed_ = std::move(parsed);
}

SolveResults OneShotBackend::Solve() {
  std::unique_ptr<ImageBackend> delegate;
  if (!parsed_.objective().function.quadratic.empty()) {
    delegate = std::make_unique<QpBackend>();
  } else if (parsed_.HasIntegerVariables()) {
    delegate = std::make_unique<MilpBackend>();
  } else {
    delegate = std::make_unique<SimplexBackend>();
  }
  delegate_name_ = delegate->name();
  for (const char* option : kOptions) {
    const AttributeKey key = OptimizerAttribute(option);
    std::optional<AttributeValue> value = GetAttribute(key, -1);
    if (value.has_value() && delegate->capabilities().SupportsAttribute(key)) {
      delegate->SetAttribute(key, -1, *value);
    }
  }
  delegate->Load(parsed_);
  delegate->Optimize();
  SolveResults inner = delegate->results();

  SolveResults out = inner;
  out.raw_status = delegate_name_ + ": " + inner.raw_status;
  for (PrimalResult& p : out.primal) {
    std::vector<double> values(image_.variable_slots(), 0.0);
    for (std::size_t j = 0; j < variable_slot_.size(); ++j) {
      values[variable_slot_[j]] = p.values[j];
    }
    p.values = std::move(values);
  }
  auto remap = [](const std::vector<double>& in,
                  const std::vector<std::int64_t>& slots, std::int64_t size) {
    std::vector<double> mapped;
    if (in.empty()) return mapped;
    mapped.assign(size, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t k = 0; k < slots.size() && k < in.size(); ++k) {
      mapped[slots[k]] = in[k];
    }
    return mapped;
  };
  out.duals = remap(inner.duals, constraint_slot_, image_.constraint_slots());
  out.reduced_costs =
      remap(inner.reduced_costs, variable_slot_, image_.variable_slots());
  return out;
}

OptimizerFactory OneShotOptimizer(std::filesystem::path directory) {
  return OptimizerFactory([directory] {
    return std::make_unique<OneShotBackend>(directory);
  });
}

}  // namespace amodel
