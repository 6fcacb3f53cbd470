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

// The interface every solver implements. A backend works in its own index
// space: variable and constraint indices returned by Apply (or present in
// the image given to Load) are the ones it reports results against.

#ifndef AMODEL_BACKEND_H_
#define AMODEL_BACKEND_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amodel/extensions.h"
#include "amodel/model_image.h"
#include "amodel/status.h"

namespace amodel {

enum class CallbackKind { kLazyConstraint, kUserCut, kHeuristic };

std::string_view ToString(CallbackKind kind);

inline constexpr std::int64_t kUnlimitedResults = -1;

struct BackendCapabilities {
  bool incremental = true;
  // Decides whether a (function kind, set) pair is accepted. Integrality of
  // variables is checked as (kScalarAffine, Integer{}) / (kScalarAffine,
  // Binary{}).
  std::function<bool(FunctionKind, const ConstraintSet&)> supports_constraint;
  std::function<bool(const AttributeKey&)> supports_attribute;
  bool quadratic_objective = false;
  bool provides_duals = false;
  std::vector<CallbackKind> callbacks;
  bool supports_iis = false;
  std::int64_t max_results = 1;

  bool Supports(FunctionKind kind, const ConstraintSet& set) const;
  bool SupportsAttribute(const AttributeKey& key) const;
  bool SupportsCallback(CallbackKind kind) const;
};

struct PrimalResult {
  std::vector<double> values;  // indexed by backend variable slot
  double objective = 0.0;
  ResultStatus status = ResultStatus::kNoSolution;
};

struct CallbackCounters {
  std::int64_t lazy_invocations = 0;
  std::int64_t lazy_submitted = 0;
  std::int64_t cut_invocations = 0;
  std::int64_t cuts_submitted = 0;
  std::int64_t heuristic_invocations = 0;
  std::int64_t heuristic_accepted = 0;
  std::int64_t heuristic_rejected = 0;
};

struct SolveResults {
  TerminationStatus termination = TerminationStatus::kOptimizeNotCalled;
  std::string raw_status;
  // Best first. When termination is DUAL_INFEASIBLE the single entry is an
  // improving ray with status INFEASIBILITY_CERTIFICATE.
  std::vector<PrimalResult> primal;
  ResultStatus dual_status = ResultStatus::kNoSolution;
  std::vector<double> duals;          // indexed by backend constraint slot
  std::vector<double> reduced_costs;  // indexed by backend variable slot
  double objective_bound = 0.0;
  double solve_time = 0.0;
  std::int64_t iterations = 0;
  std::int64_t nodes = 0;
  CallbackCounters callbacks;

  std::int64_t result_count() const {
    return static_cast<std::int64_t>(primal.size());
  }
};

// What a backend hands to a callback: the candidate point in backend
// indices and queues the backend drains after the callback returns.
struct CallbackData {
  CallbackKind kind = CallbackKind::kLazyConstraint;
  NodeStatus node_status = NodeStatus::kUnknown;
  std::span<const double> values;
  std::vector<ConstraintData> lazy_constraints;
  std::vector<ConstraintData> user_cuts;
  std::vector<std::vector<double>> heuristic_solutions;
};

using BackendCallback = std::function<void(CallbackData&)>;

struct IisBound {
  std::int64_t variable = -1;
  bool upper = false;

  friend bool operator==(const IisBound&, const IisBound&) = default;
};

struct IisResult {
  std::vector<std::int64_t> constraints;
  std::vector<IisBound> bounds;
};

class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string name() const = 0;
  virtual const BackendCapabilities& capabilities() const = 0;

  // Replaces the whole state. Raises UnsupportedConstraint naming the first
  // offending (function, set) pair.
  virtual void Load(ModelImage image) = 0;

  // Applies one delta; returns the new index for adds, -1 otherwise.
  // One-shot backends raise NotIncremental.
  virtual std::int64_t Apply(const Delta& delta) = 0;

  // target is a variable/constraint index for those scopes, -1 otherwise.
  // Raises UnsupportedByBackend for keys the backend does not declare.
  virtual void SetAttribute(const AttributeKey& key, std::int64_t target,
                            const AttributeValue& value) = 0;
  virtual std::optional<AttributeValue> GetAttribute(
      const AttributeKey& key, std::int64_t target) const = 0;

  // Raises UnsupportedCallback. An empty function removes the callback.
  virtual void SetCallback(CallbackKind kind, BackendCallback callback) = 0;

  virtual void Optimize() = 0;
  virtual const SolveResults& results() const = 0;

  virtual IisResult ComputeIis();

  // The problem the backend currently holds, in its own index space.
  virtual const ModelImage& image() const = 0;

  // Canonical rendering of image(); equal digests mean equal problems.
  virtual std::string StateDigest() const { return image().Digest(); }
};

// Common implementation for backends that keep a ModelImage as their state.
// Subclasses supply capabilities and Solve().
class ImageBackend : public Backend {
 public:
  void Load(ModelImage image) override;
  std::int64_t Apply(const Delta& delta) override;
  void SetAttribute(const AttributeKey& key, std::int64_t target,
                    const AttributeValue& value) override;
  std::optional<AttributeValue> GetAttribute(
      const AttributeKey& key, std::int64_t target) const override;
  void SetCallback(CallbackKind kind, BackendCallback callback) override;
  void Optimize() override;
  const SolveResults& results() const override { return results_; }
  const ModelImage& image() const override { return image_; }

 protected:
  virtual SolveResults Solve() = 0;

  void CheckSupported(const ConstraintData& constraint) const;
  void CheckSupported(const VariableData& variable) const;
  void CheckSupported(const ObjectiveData& objective) const;
  void CheckSupported(const ModelImage& image) const;

  double RealOption(const std::string& name, double fallback) const;
  std::int64_t IntOption(const std::string& name,
                         std::int64_t fallback) const;
  bool BoolOption(const std::string& name, bool fallback) const;
  double VariableReal(const std::string& name, std::int64_t variable,
                      double fallback) const;

  const BackendCallback* callback(CallbackKind kind) const;

  ModelImage image_;

 private:
  std::map<std::pair<AttributeKey, std::int64_t>, AttributeValue> attributes_;
  std::map<CallbackKind, BackendCallback> callbacks_;
  SolveResults results_;
};

// Wall-clock deadline helper shared by the reference solvers.
class Deadline {
 public:
  explicit Deadline(double seconds);
  bool Expired() const;
  bool immediate() const { return immediate_; }
  double Elapsed() const;

 private:
  std::chrono::steady_clock::time_point start_;
  double seconds_;
  bool immediate_;
};

using AttributePairs = std::vector<std::pair<std::string, AttributeValue>>;

// A backend constructor, optionally bundled with optimizer attributes that
// are applied whenever a model attaches it.
class OptimizerFactory {
 public:
  OptimizerFactory() = default;
  explicit OptimizerFactory(std::function<std::unique_ptr<Backend>()> make)
      : make_(std::move(make)) {}

  explicit operator bool() const { return static_cast<bool>(make_); }
  std::unique_ptr<Backend> Create() const;
  const AttributePairs& attributes() const { return attributes_; }

 private:
  friend OptimizerFactory OptimizerWithAttributes(OptimizerFactory base,
                                                  AttributePairs pairs);

  std::function<std::unique_ptr<Backend>()> make_;
  AttributePairs attributes_;
};

// Returns an independent copy of `base` whose attribute list is extended by
// `pairs` (later pairs win).
OptimizerFactory OptimizerWithAttributes(OptimizerFactory base,
                                         AttributePairs pairs);

}  // namespace amodel

#endif  // AMODEL_BACKEND_H_
