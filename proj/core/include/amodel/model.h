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

// The user-facing model.
//
// A Model is attached to a solver in one of two modes:
//   * caching (default): the model keeps its own copy of the problem and
//     synchronizes it with the backend at Optimize(), replaying pending
//     modifications on incremental backends or reloading the whole problem.
//     The solver can be swapped at any time, and constraints the backend
//     cannot take are rewritten by bridges.
//   * direct: every modification is forwarded to the backend immediately
//     and reads go through the backend. There is no copy and no bridge, and
//     the solver cannot be changed.
//
// In both modes a variable or constraint index equals the backend index.

#ifndef AMODEL_MODEL_H_
#define AMODEL_MODEL_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amodel/backend.h"
#include "amodel/bridges.h"
#include "amodel/expr.h"
#include "amodel/model_image.h"
#include "amodel/status.h"

namespace amodel {

class Model;

struct ConstraintRef {
  ModelId model_id = 0;
  std::int64_t index = -1;
  FunctionKind kind = FunctionKind::kScalarAffine;

  friend bool operator==(const ConstraintRef&, const ConstraintRef&) = default;
  friend auto operator<=>(const ConstraintRef&, const ConstraintRef&) = default;
};

enum class AttachmentMode { kCaching, kDirect };
enum class SyncState { kEmpty, kDirty, kInSync };

std::string_view ToString(SyncState state);

struct SyncStats {
  std::int64_t full_loads = 0;
  std::int64_t replayed_deltas = 0;
};

// Handed to user callbacks. Copies share state; every copy expires when the
// invocation that produced it returns, after which any use raises
// ExpiredContext. A default-constructed context is expired.
class CallbackContext {
 public:
  CallbackContext() = default;

  bool alive() const;
  CallbackKind kind() const;
  NodeStatus node_status() const;

  // Candidate value of a model variable.
  double Value(VariableRef variable) const;
  double Value(const AffExpr& expr) const;

  // The constraint is kept for the rest of the search. Raises
  // UnsupportedCallback when the backend does not declare the kind.
  void SubmitLazyConstraint(const AffExpr& f, ConstraintSet set);
  void SubmitUserCut(const AffExpr& f, ConstraintSet set);
  // A full assignment of the model variables. The backend checks it before
  // accepting it; infeasible submissions are discarded and counted.
  void SubmitHeuristicSolution(
      const std::vector<std::pair<VariableRef, double>>& assignment);

  // Solver-specific access during the callback.
  Backend& backend() const;

 private:
  friend class Model;
  struct State {
    bool alive = true;
    CallbackData* data = nullptr;
    const Model* model = nullptr;
    Backend* backend = nullptr;
  };
  explicit CallbackContext(std::shared_ptr<State> state)
      : state_(std::move(state)) {}
  State& Live() const;
  ConstraintData Convert(const AffExpr& f, ConstraintSet set) const;

  std::shared_ptr<State> state_;
};

using ModelCallback = std::function<void(CallbackContext)>;

struct ModelIis {
  std::vector<ConstraintRef> constraints;
  // (variable, true) for an upper bound, (variable, false) for a lower one.
  std::vector<std::pair<VariableRef, bool>> bounds;
};

class Model {
 public:
  // Caching mode without a solver.
  Model();
  // Caching mode with `factory` attached.
  explicit Model(OptimizerFactory factory);

  // Direct mode. Raises NotIncremental for one-shot backends.
  static Model Direct(std::unique_ptr<Backend> backend);
  static Model Direct(const OptimizerFactory& factory);

  Model(Model&&) noexcept;
  Model& operator=(Model&&) noexcept;
  Model(const Model&) = delete;
  Model& operator=(const Model&) = delete;
  ~Model();

  ModelId id() const { return id_; }
  AttachmentMode mode() const { return mode_; }

  // --- variables ----------------------------------------------------------
  VariableRef AddVariable(double lower = -kInf, double upper = kInf,
                          Integrality integrality = Integrality::kContinuous,
                          std::string name = "");
  // Names are "base[1]", "base[2]", ... (no names when base is empty).
  std::vector<VariableRef> AddVariables(
      std::int64_t count, double lower = -kInf, double upper = kInf,
      Integrality integrality = Integrality::kContinuous,
      const std::string& base = "");
  void SetBounds(VariableRef variable, double lower, double upper);

  // --- constraints ----------------------------------------------------------
  ConstraintRef AddConstraint(const AffExpr& f, ConstraintSet set,
                              std::string name = "");
  ConstraintRef AddConstraint(const QuadExpr& f, ConstraintSet set,
                              std::string name = "");
  ConstraintRef AddConstraint(const std::vector<AffExpr>& rows,
                              ConstraintSet set, std::string name = "");
  // Square matrix of expressions, typically paired with PsdCone.
  ConstraintRef AddConstraint(const std::vector<std::vector<AffExpr>>& matrix,
                              ConstraintSet set, std::string name = "");
  // f perp x. Raises UnboundedComplementsVariable when x has no finite bound.
  ConstraintRef AddComplements(const AffExpr& f, VariableRef x,
                               std::string name = "");
  // z == activate_on implies f in inner.
  ConstraintRef AddIndicator(VariableRef z, bool activate_on, const AffExpr& f,
                             std::variant<LessEqual, GreaterEqual> inner,
                             std::string name = "");

  void SetObjective(ObjectiveSense sense, const QuadExpr& f);

  // Raises VariableInUse when the variable is still referenced and cascade
  // is false.
  void Delete(VariableRef variable, bool cascade = false);
  void Delete(ConstraintRef constraint);
  void SetNormalizedCoefficient(ConstraintRef constraint, VariableRef variable,
                                double coefficient);

  // --- queries --------------------------------------------------------------
  std::int64_t num_variables() const;
  std::int64_t num_constraints() const;
  bool IsValid(VariableRef variable) const;
  bool IsValid(ConstraintRef constraint) const;
  std::vector<VariableRef> variables() const;
  std::vector<ConstraintRef> constraints() const;
  VariableRef variable(std::int64_t index) const;
  ConstraintRef constraint(std::int64_t index) const;

  double LowerBound(VariableRef variable) const;
  double UpperBound(VariableRef variable) const;
  Integrality integrality(VariableRef variable) const;
  const std::string& name(VariableRef variable) const;
  const std::string& name(ConstraintRef constraint) const;
  const ConstraintData& data(ConstraintRef constraint) const;
  const ObjectiveData& objective() const;

  // The problem as the model sees it: the cache in caching mode, the
  // backend's state in direct mode.
  const ModelImage& image() const;
  std::string Digest() const { return image().Digest(); }

  // --- attributes -----------------------------------------------------------
  // Raises UnknownAttribute, TypeMismatch, or UnsupportedByBackend when the
  // attached backend does not declare a forwarded key.
  void SetAttribute(const AttributeKey& key, const AttributeValue& value);
  void SetAttribute(const AttributeKey& key, VariableRef variable,
                    const AttributeValue& value);
  void SetAttribute(const AttributeKey& key, ConstraintRef constraint,
                    const AttributeValue& value);
  AttributeValue GetAttribute(const AttributeKey& key) const;
  AttributeValue GetAttribute(const AttributeKey& key,
                              VariableRef variable) const;
  AttributeValue GetAttribute(const AttributeKey& key,
                              ConstraintRef constraint) const;
  void SetOptimizerAttribute(const std::string& name,
                             const AttributeValue& value) {
    SetAttribute(OptimizerAttribute(name), value);
  }

  // --- solver attachment ----------------------------------------------------
  // Replaces the backend and synchronizes the cache into it. Raises
  // SolverChangeInDirectMode in direct mode.
  void SetOptimizer(OptimizerFactory factory);
  bool has_optimizer() const { return backend_ != nullptr; }
  // Raises NoOptimizerAttached.
  Backend& backend() const;
  std::int64_t OptimizerIndex(VariableRef variable) const;
  std::int64_t OptimizerIndex(ConstraintRef constraint) const;
  SyncState sync_state() const { return sync_; }
  const SyncStats& sync_stats() const { return stats_; }
  bool bridges_active() const { return !bridge_records_.empty(); }
  const std::vector<BridgedImage::Record>& bridge_records() const {
    return bridge_records_;
  }

  // An empty callback removes it.
  void SetCallback(CallbackKind kind, ModelCallback callback);

  // --- solving and results --------------------------------------------------
  void Optimize();

  TerminationStatus termination_status() const;
  ResultStatus primal_status(std::int64_t result = 1) const;
  ResultStatus dual_status() const;
  std::int64_t result_count() const;
  std::string raw_status() const;
  double Value(VariableRef variable, std::int64_t result = 1) const;
  double Value(const AffExpr& expr, std::int64_t result = 1) const;
  double Value(const QuadExpr& expr, std::int64_t result = 1) const;
  double ObjectiveValue(std::int64_t result = 1) const;
  double ObjectiveBound() const;
  double Dual(ConstraintRef constraint) const;
  double ReducedCost(VariableRef variable) const;
  double SolveTime() const;
  // Raw results of the last solve, in backend indices.
  const SolveResults& results() const;

  std::string SolutionSummary(bool verbose = false) const;

  // Irreducible infeasible subset of the current problem. Rows added by
  // bridges are reported as the constraint they replace.
  ModelIis ComputeIis();

 private:
  friend class CallbackContext;

  explicit Model(AttachmentMode mode);

  void BeginMutation();
  std::int64_t Mutate(Delta delta);
  void CheckOwner(ModelId id) const;
  void CheckVariable(VariableRef variable) const;
  void CheckConstraint(ConstraintRef constraint) const;
  ScalarAffineFunction Function(const AffExpr& e) const;
  ConstraintRef AddConstraintData(ConstraintData data);
  void ForwardAttribute(const AttributeKey& key, std::int64_t target,
                        const AttributeValue& value);
  void SetAttributeImpl(const AttributeKey& key, std::int64_t target,
                        const AttributeValue& value);
  AttributeValue GetAttributeImpl(const AttributeKey& key,
                                  std::int64_t target) const;
  void ApplyFactoryAttributes(const OptimizerFactory& factory);
  bool CanReplay() const;
  void Sync();
  void FullLoad();
  void InstallCallbacks();
  void RequireResults() const;
  const PrimalResult& Primal(std::int64_t result) const;

  ModelId id_ = 0;
  AttachmentMode mode_ = AttachmentMode::kCaching;
  ModelImage cache_;
  std::unique_ptr<Backend> backend_;
  SyncState sync_ = SyncState::kEmpty;
  std::vector<Delta> journal_;
  bool journal_overflow_ = false;
  std::vector<BridgedImage::Record> bridge_records_;
  SyncStats stats_;
  std::map<std::pair<AttributeKey, std::int64_t>, AttributeValue> attributes_;
  std::map<CallbackKind, ModelCallback> callbacks_;
  bool in_callback_ = false;
  bool has_results_ = false;
  SolveResults results_;
};

}  // namespace amodel

#endif  // AMODEL_MODEL_H_
