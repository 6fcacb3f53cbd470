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

#include "amodel/model.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "amodel/errors.h"

namespace amodel {
namespace {

ModelId NextModelId() {
  static std::atomic<ModelId> next{1};
  return next.fetch_add(1);
}

std::string Summary(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%#.5g", value);
  return buffer;
}

bool Supported(const BackendCapabilities& caps, const Delta& delta) {
  if (const auto* a = std::get_if<AddVariableDelta>(&delta)) {
    switch (a->variable.integrality) {
      case Integrality::kContinuous:
        return true;
      case Integrality::kInteger:
        return caps.Supports(FunctionKind::kScalarAffine, Integer{});
      case Integrality::kBinary:
        return caps.Supports(FunctionKind::kScalarAffine, Binary{});
    }
  }
  if (const auto* a = std::get_if<AddConstraintDelta>(&delta)) {
    return caps.Supports(KindOf(a->constraint.function), a->constraint.set);
  }
  if (const auto* a = std::get_if<SetObjectiveDelta>(&delta)) {
    return caps.quadratic_objective ||
           a->objective.function.quadratic.empty();
  }
  return true;
}

}  // namespace

std::string_view ToString(SyncState state) {
  switch (state) {
    case SyncState::kEmpty:
      return "EMPTY";
    case SyncState::kDirty:
      return "DIRTY";
    case SyncState::kInSync:
      return "IN_SYNC";
  }
  return "UNKNOWN";
}

// --- CallbackContext ---------------------------------------------------------

CallbackContext::State& CallbackContext::Live() const {
  if (state_ == nullptr || !state_->alive) {
    throw Error(ErrorCode::kExpiredContext,
                "callback context used outside its invocation");
  }
  return *state_;
}

bool CallbackContext::alive() const {
  return state_ != nullptr && state_->alive;
}

CallbackKind CallbackContext::kind() const { return Live().data->kind; }

NodeStatus CallbackContext::node_status() const {
  return Live().data->node_status;
}

double CallbackContext::Value(VariableRef variable) const {
  State& s = Live();
  s.model->CheckVariable(variable);
  const std::int64_t j = variable.index();
  if (j >= static_cast<std::int64_t>(s.data->values.size())) {
    throw Error(ErrorCode::kNoResultAvailable,
                "no candidate value for variable " + std::to_string(j));
  }
  return s.data->values[static_cast<std::size_t>(j)];
}

double CallbackContext::Value(const AffExpr& expr) const {
  double total = expr.constant();
  for (const AffExpr::Term& t : expr.terms()) {
    total += t.coefficient * Value(t.key);
  }
  return total;
}

ConstraintData CallbackContext::Convert(const AffExpr& f,
                                        ConstraintSet set) const {
  State& s = Live();
  if (!IsLinearSet(TagOf(set))) {
    throw Error(ErrorCode::kShapeMismatch,
                "callback constraints must use a linear set, got " +
                    SetName(set));
  }
  ConstraintData data;
  data.function = s.model->Function(f);
  data.set = std::move(set);
  return data;
}

void CallbackContext::SubmitLazyConstraint(const AffExpr& f,
                                           ConstraintSet set) {
  State& s = Live();
  if (!s.backend->capabilities().SupportsCallback(
          CallbackKind::kLazyConstraint)) {
    throw Error(ErrorCode::kUnsupportedCallback,
                s.backend->name() + " does not accept lazy constraints");
  }
  s.data->lazy_constraints.push_back(Convert(f, std::move(set)));
}

void CallbackContext::SubmitUserCut(const AffExpr& f, ConstraintSet set) {
  State& s = Live();
  if (!s.backend->capabilities().SupportsCallback(CallbackKind::kUserCut)) {
    throw Error(ErrorCode::kUnsupportedCallback,
                s.backend->name() + " does not accept user cuts");
  }
  s.data->user_cuts.push_back(Convert(f, std::move(set)));
}

void CallbackContext::SubmitHeuristicSolution(
    const std::vector<std::pair<VariableRef, double>>& assignment) {
  State& s = Live();
  if (!s.backend->capabilities().SupportsCallback(CallbackKind::kHeuristic)) {
    throw Error(ErrorCode::kUnsupportedCallback,
                s.backend->name() + " does not accept heuristic solutions");
  }
  const ModelImage& image = s.backend->image();
  std::vector<double> values(static_cast<std::size_t>(image.variable_slots()),
                             std::numeric_limits<double>::quiet_NaN());
  for (const auto& [variable, value] : assignment) {
    s.model->CheckVariable(variable);
    values[static_cast<std::size_t>(variable.index())] = value;
  }
  for (std::int64_t j : s.model->image().LiveVariables()) {
    if (std::isnan(values[static_cast<std::size_t>(j)])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "heuristic solution does not assign variable " +
                      std::to_string(j));
    }
  }
  s.data->heuristic_solutions.push_back(std::move(values));
}

Backend& CallbackContext::backend() const { return *Live().backend; }

// --- construction ------------------------------------------------------------

Model::Model(AttachmentMode mode) : id_(NextModelId()), mode_(mode) {}

Model::Model() : Model(AttachmentMode::kCaching) {}

Model::Model(OptimizerFactory factory) : Model(AttachmentMode::kCaching) {
  SetOptimizer(std::move(factory));
}

Model Model::Direct(std::unique_ptr<Backend> backend) {
  if (backend == nullptr) {
    throw Error(ErrorCode::kNoOptimizerAttached, "null backend");
  }
  if (!backend->capabilities().incremental) {
    throw Error(ErrorCode::kNotIncremental,
                backend->name() +
                    " only accepts whole problems and cannot back a direct "
                    "model");
  }
  Model model(AttachmentMode::kDirect);
  backend->Load(ModelImage());
  model.backend_ = std::move(backend);
  model.sync_ = SyncState::kInSync;
  return model;
}

Model Model::Direct(const OptimizerFactory& factory) {
  Model model = Direct(factory.Create());
  model.ApplyFactoryAttributes(factory);
  return model;
}

Model::Model(Model&&) noexcept = default;
Model& Model::operator=(Model&&) noexcept = default;
Model::~Model() = default;

// --- mutation plumbing -------------------------------------------------------

void Model::BeginMutation() {
  if (in_callback_) {
    throw Error(ErrorCode::kModelMutationInCallback,
                "the model cannot be modified from inside a callback");
  }
  has_results_ = false;
}

std::int64_t Model::Mutate(Delta delta) {
  BeginMutation();
  if (mode_ == AttachmentMode::kDirect) return backend_->Apply(delta);
  const std::int64_t index = cache_.Apply(delta);
  if (backend_ != nullptr && sync_ != SyncState::kEmpty) {
    sync_ = SyncState::kDirty;
    if (!journal_overflow_) {
      const ModelImage& loaded = backend_->image();
      if (static_cast<std::int64_t>(journal_.size()) + 1 >
          loaded.num_variables() + loaded.num_constraints()) {
        journal_overflow_ = true;
        journal_.clear();
        journal_.shrink_to_fit();
      } else {
        journal_.push_back(std::move(delta));
      }
    }
  }
  return index;
}

void Model::CheckOwner(ModelId id) const {
  if (id != 0 && id != id_) {
    throw Error(ErrorCode::kMixedModels,
                "expression refers to variables of another model");
  }
}

void Model::CheckVariable(VariableRef variable) const {
  if (variable.model_id() != id_) {
    throw Error(ErrorCode::kMixedModels,
                "variable belongs to another model");
  }
  if (!image().IsVariableLive(variable.index())) {
    throw Error(ErrorCode::kStaleReference,
                "variable " + std::to_string(variable.index()) +
                    " has been deleted");
  }
}

void Model::CheckConstraint(ConstraintRef constraint) const {
  if (constraint.model_id != id_) {
    throw Error(ErrorCode::kMixedModels,
                "constraint belongs to another model");
  }
  if (!image().IsConstraintLive(constraint.index)) {
    throw Error(ErrorCode::kStaleReference,
                "constraint " + std::to_string(constraint.index) +
                    " has been deleted");
  }
}

ScalarAffineFunction Model::Function(const AffExpr& e) const {
  CheckOwner(e.model_id());
  return ToFunction(e);
}

// --- variables ---------------------------------------------------------------

VariableRef Model::AddVariable(double lower, double upper,
                               Integrality integrality, std::string name) {
  VariableData data;
  data.lower = lower;
  data.upper = upper;
  data.integrality = integrality;
  data.name = std::move(name);
  return VariableRef(id_, Mutate(AddVariableDelta{std::move(data)}));
}

std::vector<VariableRef> Model::AddVariables(std::int64_t count, double lower,
                                             double upper,
                                             Integrality integrality,
                                             const std::string& base) {
  std::vector<VariableRef> out;
  out.reserve(static_cast<std::size_t>(count));
  if (mode_ == AttachmentMode::kCaching) {
    cache_.Reserve(cache_.variable_slots() + count, cache_.constraint_slots());
  }
  for (std::int64_t i = 0; i < count; ++i) {
    out.push_back(AddVariable(
        lower, upper, integrality,
        base.empty() ? std::string() : base + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

void Model::SetBounds(VariableRef variable, double lower, double upper) {
  CheckVariable(variable);
  Mutate(SetVariableBoundsDelta{variable.index(), lower, upper});
}

// --- constraints -------------------------------------------------------------

ConstraintRef Model::AddConstraintData(ConstraintData data) {
  const FunctionKind kind = KindOf(data.function);
  const std::int64_t index = Mutate(AddConstraintDelta{std::move(data)});
  return ConstraintRef{id_, index, kind};
}

ConstraintRef Model::AddConstraint(const AffExpr& f, ConstraintSet set,
                                   std::string name) {
  ConstraintData data;
  data.function = Function(f);
  data.set = std::move(set);
  data.name = std::move(name);
  return AddConstraintData(std::move(data));
}

ConstraintRef Model::AddConstraint(const QuadExpr& f, ConstraintSet set,
                                   std::string name) {
  CheckOwner(f.model_id());
  ConstraintData data;
  ScalarQuadraticFunction q = ToFunction(f);
  if (q.quadratic.empty()) {
    data.function = std::move(q.affine);
  } else {
    data.function = std::move(q);
  }
  data.set = std::move(set);
  data.name = std::move(name);
  return AddConstraintData(std::move(data));
}

ConstraintRef Model::AddConstraint(const std::vector<AffExpr>& rows,
                                   ConstraintSet set, std::string name) {
  VectorAffineFunction f;
  f.rows.reserve(rows.size());
  for (const AffExpr& row : rows) f.rows.push_back(Function(row));
  ConstraintData data;
  data.function = std::move(f);
  data.set = std::move(set);
  data.name = std::move(name);
  return AddConstraintData(std::move(data));
}

ConstraintRef Model::AddConstraint(
    const std::vector<std::vector<AffExpr>>& matrix, ConstraintSet set,
    std::string name) {
  MatrixAffineFunction f;
  f.side = static_cast<std::int64_t>(matrix.size());
  for (const std::vector<AffExpr>& row : matrix) {
    if (static_cast<std::int64_t>(row.size()) != f.side) {
      throw Error(ErrorCode::kShapeMismatch, "matrix is not square");
    }
    for (const AffExpr& e : row) f.entries.push_back(Function(e));
  }
  ConstraintData data;
  data.function = std::move(f);
  data.set = std::move(set);
  data.name = std::move(name);
  return AddConstraintData(std::move(data));
}

ConstraintRef Model::AddComplements(const AffExpr& f, VariableRef x,
                                    std::string name) {
  CheckVariable(x);
  return AddConstraint(std::vector<AffExpr>{f, AffExpr(x)}, Complements{},
                       std::move(name));
}

ConstraintRef Model::AddIndicator(VariableRef z, bool activate_on,
                                  const AffExpr& f,
                                  std::variant<LessEqual, GreaterEqual> inner,
                                  std::string name) {
  CheckVariable(z);
  Indicator set;
  set.activate_on = activate_on;
  set.inner = inner;
  return AddConstraint(std::vector<AffExpr>{AffExpr(z), f}, set,
                       std::move(name));
}

void Model::SetObjective(ObjectiveSense sense, const QuadExpr& f) {
  CheckOwner(f.model_id());
  ObjectiveData data;
  data.sense = sense;
  data.function = ToFunction(f);
  Mutate(SetObjectiveDelta{std::move(data)});
}

void Model::Delete(VariableRef variable, bool cascade) {
  CheckVariable(variable);
  if (!cascade && image().UseCount(variable.index()) > 0) {
    throw Error(ErrorCode::kVariableInUse,
                "variable " + std::to_string(variable.index()) +
                    " is still referenced; delete with cascade to remove its "
                    "terms");
  }
  for (auto it = attributes_.begin(); it != attributes_.end();) {
    if (it->first.first.scope == AttributeScope::kVariable &&
        it->first.second == variable.index()) {
      it = attributes_.erase(it);
    } else {
      ++it;
    }
  }
  Mutate(DeleteVariableDelta{variable.index(), cascade});
}

void Model::Delete(ConstraintRef constraint) {
  CheckConstraint(constraint);
  for (auto it = attributes_.begin(); it != attributes_.end();) {
    if (it->first.first.scope == AttributeScope::kConstraint &&
        it->first.second == constraint.index) {
      it = attributes_.erase(it);
    } else {
      ++it;
    }
  }
  Mutate(DeleteConstraintDelta{constraint.index});
}

void Model::SetNormalizedCoefficient(ConstraintRef constraint,
                                     VariableRef variable,
                                     double coefficient) {
  CheckConstraint(constraint);
  CheckVariable(variable);
  Mutate(SetCoefficientDelta{constraint.index, variable.index(), coefficient});
}

// --- queries -----------------------------------------------------------------

const ModelImage& Model::image() const {
  return mode_ == AttachmentMode::kDirect ? backend_->image() : cache_;
}

std::int64_t Model::num_variables() const { return image().num_variables(); }

std::int64_t Model::num_constraints() const {
  return image().num_constraints();
}

bool Model::IsValid(VariableRef variable) const {
  return variable.model_id() == id_ &&
         image().IsVariableLive(variable.index());
}

bool Model::IsValid(ConstraintRef constraint) const {
  return constraint.model_id == id_ &&
         image().IsConstraintLive(constraint.index);
}

std::vector<VariableRef> Model::variables() const {
  std::vector<VariableRef> out;
  for (std::int64_t j : image().LiveVariables()) out.emplace_back(id_, j);
  return out;
}

std::vector<ConstraintRef> Model::constraints() const {
  std::vector<ConstraintRef> out;
  for (std::int64_t c : image().LiveConstraints()) {
    out.push_back(
        ConstraintRef{id_, c, KindOf(image().constraint(c).function)});
  }
  return out;
}

VariableRef Model::variable(std::int64_t index) const {
  VariableRef ref(id_, index);
  CheckVariable(ref);
  return ref;
}

ConstraintRef Model::constraint(std::int64_t index) const {
  const ConstraintData& c = image().constraint(index);
  return ConstraintRef{id_, index, KindOf(c.function)};
}

double Model::LowerBound(VariableRef variable) const {
  CheckVariable(variable);
  return image().variable(variable.index()).lower;
}

double Model::UpperBound(VariableRef variable) const {
  CheckVariable(variable);
  return image().variable(variable.index()).upper;
}

Integrality Model::integrality(VariableRef variable) const {
  CheckVariable(variable);
  return image().EffectiveIntegrality(variable.index());
}

const std::string& Model::name(VariableRef variable) const {
  CheckVariable(variable);
  return image().variable(variable.index()).name;
}

const std::string& Model::name(ConstraintRef constraint) const {
  CheckConstraint(constraint);
  return image().constraint(constraint.index).name;
}

const ConstraintData& Model::data(ConstraintRef constraint) const {
  CheckConstraint(constraint);
  return image().constraint(constraint.index);
}

const ObjectiveData& Model::objective() const { return image().objective(); }

// --- attributes --------------------------------------------------------------

void Model::ForwardAttribute(const AttributeKey& key, std::int64_t target,
                             const AttributeValue& value) {
  if (backend_ == nullptr) return;
  std::optional<AttributeInfo> info = LookupAttribute(key);
  if (!info.has_value() || !info->forwarded) return;
  backend_->SetAttribute(key, target, value);
}

void Model::SetAttributeImpl(const AttributeKey& key, std::int64_t target,
                             const AttributeValue& value) {
  if (in_callback_) {
    throw Error(ErrorCode::kModelMutationInCallback,
                "attributes cannot be changed from inside a callback");
  }
  AttributeValue checked = CheckAttributeValue(key, value);
  ForwardAttribute(key, target, checked);
  attributes_[{key, target}] = std::move(checked);
}

AttributeValue Model::GetAttributeImpl(const AttributeKey& key,
                                       std::int64_t target) const {
  if (!LookupAttribute(key).has_value()) {
    throw Error(ErrorCode::kUnknownAttribute,
                ToString(key) + " is not registered");
  }
  auto it = attributes_.find({key, target});
  if (it != attributes_.end()) return it->second;
  if (backend_ != nullptr) {
    if (std::optional<AttributeValue> v = backend_->GetAttribute(key, target)) {
      return *v;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, ToString(key) + " has not been set");
}

void Model::SetAttribute(const AttributeKey& key, const AttributeValue& value) {
  if (key.scope == AttributeScope::kVariable ||
      key.scope == AttributeScope::kConstraint) {
    throw Error(ErrorCode::kInvalidArgument,
                ToString(key) + " needs a variable or constraint target");
  }
  SetAttributeImpl(key, -1, value);
}

void Model::SetAttribute(const AttributeKey& key, VariableRef variable,
                         const AttributeValue& value) {
  if (key.scope != AttributeScope::kVariable) {
    throw Error(ErrorCode::kInvalidArgument,
                ToString(key) + " is not a variable attribute");
  }
  CheckVariable(variable);
  SetAttributeImpl(key, variable.index(), value);
}

void Model::SetAttribute(const AttributeKey& key, ConstraintRef constraint,
                         const AttributeValue& value) {
  if (key.scope != AttributeScope::kConstraint) {
    throw Error(ErrorCode::kInvalidArgument,
                ToString(key) + " is not a constraint attribute");
  }
  CheckConstraint(constraint);
  SetAttributeImpl(key, constraint.index, value);
}

AttributeValue Model::GetAttribute(const AttributeKey& key) const {
  return GetAttributeImpl(key, -1);
}

AttributeValue Model::GetAttribute(const AttributeKey& key,
                                   VariableRef variable) const {
  CheckVariable(variable);
  return GetAttributeImpl(key, variable.index());
}

AttributeValue Model::GetAttribute(const AttributeKey& key,
                                   ConstraintRef constraint) const {
  CheckConstraint(constraint);
  return GetAttributeImpl(key, constraint.index);
}

void Model::ApplyFactoryAttributes(const OptimizerFactory& factory) {
  for (const auto& [name, value] : factory.attributes()) {
    SetAttributeImpl(OptimizerAttribute(name), -1, value);
  }
}

// --- attachment --------------------------------------------------------------

void Model::SetOptimizer(OptimizerFactory factory) {
  if (mode_ == AttachmentMode::kDirect) {
    throw Error(ErrorCode::kSolverChangeInDirectMode,
                "the solver of a direct model cannot be changed");
  }
  if (in_callback_) {
    throw Error(ErrorCode::kModelMutationInCallback,
                "the solver cannot be changed from inside a callback");
  }
  std::unique_ptr<Backend> backend = factory.Create();
  for (const auto& [key, value] : attributes_) {
    std::optional<AttributeInfo> info = LookupAttribute(key.first);
    if (info.has_value() && info->forwarded) {
      backend->SetAttribute(key.first, key.second, value);
    }
  }
  backend_ = std::move(backend);
  has_results_ = false;
  sync_ = SyncState::kEmpty;
  journal_.clear();
  journal_overflow_ = false;
  bridge_records_.clear();
  try {
    ApplyFactoryAttributes(factory);
    if (backend_->capabilities().incremental) Sync();
  } catch (...) {
    backend_.reset();
    sync_ = SyncState::kEmpty;
    throw;
  }
}

Backend& Model::backend() const {
  if (backend_ == nullptr) {
    throw Error(ErrorCode::kNoOptimizerAttached, "no optimizer is attached");
  }
  return *backend_;
}

std::int64_t Model::OptimizerIndex(VariableRef variable) const {
  CheckVariable(variable);
  backend();
  if (sync_ != SyncState::kInSync) {
    throw Error(ErrorCode::kNoOptimizerAttached,
                "the optimizer is not synchronized with the model");
  }
  return variable.index();
}

std::int64_t Model::OptimizerIndex(ConstraintRef constraint) const {
  CheckConstraint(constraint);
  backend();
  if (sync_ != SyncState::kInSync) {
    throw Error(ErrorCode::kNoOptimizerAttached,
                "the optimizer is not synchronized with the model");
  }
  for (const BridgedImage::Record& r : bridge_records_) {
    if (r.source == constraint.index) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint " + std::to_string(constraint.index) +
                      " is bridged by " + r.bridge);
    }
  }
  return constraint.index;
}

bool Model::CanReplay() const {
  const BackendCapabilities& caps = backend_->capabilities();
  if (!caps.incremental || !bridge_records_.empty() || journal_overflow_) {
    return false;
  }
  for (const Delta& delta : journal_) {
    if (!Supported(caps, delta)) return false;
  }
  return true;
}

void Model::FullLoad() {
  journal_.clear();
  journal_overflow_ = false;
  bridge_records_.clear();
  sync_ = SyncState::kEmpty;
  const BackendCapabilities& caps = backend_->capabilities();
  if (NeedsBridges(cache_, caps)) {
    BridgedImage bridged = BuildBridgedImage(cache_, caps, backend_->name());
    backend_->Load(std::move(bridged.image));
    bridge_records_ = std::move(bridged.bridged);
  } else {
    backend_->Load(cache_);
  }
  ++stats_.full_loads;
  sync_ = SyncState::kInSync;
}

void Model::Sync() {
  if (mode_ == AttachmentMode::kDirect || sync_ == SyncState::kInSync) return;
  if (sync_ == SyncState::kDirty && CanReplay()) {
    bool consistent = true;
    try {
      for (const Delta& delta : journal_) backend_->Apply(delta);
      stats_.replayed_deltas += static_cast<std::int64_t>(journal_.size());
      const ModelImage& state = backend_->image();
      consistent = state.variable_slots() == cache_.variable_slots() &&
                   state.constraint_slots() == cache_.constraint_slots();
    } catch (const Error&) {
      consistent = false;
    }
    journal_.clear();
    if (consistent) {
      sync_ = SyncState::kInSync;
      return;
    }
  }
  FullLoad();
}

void Model::SetCallback(CallbackKind kind, ModelCallback callback) {
  if (in_callback_) {
    throw Error(ErrorCode::kModelMutationInCallback,
                "callbacks cannot be changed from inside a callback");
  }
  if (!callback) {
    callbacks_.erase(kind);
    return;
  }
  if (backend_ != nullptr && !backend_->capabilities().SupportsCallback(kind)) {
    throw Error(ErrorCode::kUnsupportedCallback,
                std::string(ToString(kind)) + " callbacks are not supported by " +
                    backend_->name());
  }
  callbacks_[kind] = std::move(callback);
}

void Model::InstallCallbacks() {
  for (CallbackKind kind : {CallbackKind::kLazyConstraint,
                            CallbackKind::kUserCut, CallbackKind::kHeuristic}) {
    auto it = callbacks_.find(kind);
    if (it == callbacks_.end()) {
      backend_->SetCallback(kind, nullptr);
      continue;
    }
    ModelCallback* user = &it->second;
    backend_->SetCallback(kind, [this, user](CallbackData& data) {
      auto state = std::make_shared<CallbackContext::State>();
      state->data = &data;
      state->model = this;
      state->backend = backend_.get();
      in_callback_ = true;
      try {
        (*user)(CallbackContext(state));
      } catch (...) {
        state->alive = false;
        in_callback_ = false;
        throw;
      }
      state->alive = false;
      in_callback_ = false;
    });
  }
}

// --- solving -----------------------------------------------------------------

void Model::Optimize() {
  if (in_callback_) {
    throw Error(ErrorCode::kModelMutationInCallback,
                "optimize cannot be called from inside a callback");
  }
  backend();
  has_results_ = false;
  Sync();
  InstallCallbacks();
  backend_->Optimize();
  results_ = backend_->results();
  has_results_ = true;
}

void Model::RequireResults() const {
  if (!has_results_) {
    throw Error(ErrorCode::kNoResultAvailable,
                "optimize has not been called since the last modification");
  }
}

const PrimalResult& Model::Primal(std::int64_t result) const {
  RequireResults();
  if (results_.result_count() == 0) {
    throw Error(ErrorCode::kNoResultAvailable,
                "the solver returned no result (" +
                    std::string(ToString(results_.termination)) + ")");
  }
  if (result < 1 || result > results_.result_count()) {
    throw Error(ErrorCode::kResultIndexOutOfRange,
                "result " + std::to_string(result) + " requested, " +
                    std::to_string(results_.result_count()) + " available");
  }
  return results_.primal[static_cast<std::size_t>(result - 1)];
}

TerminationStatus Model::termination_status() const {
  return has_results_ ? results_.termination
                      : TerminationStatus::kOptimizeNotCalled;
}

ResultStatus Model::primal_status(std::int64_t result) const {
  if (!has_results_ || result < 1 || result > results_.result_count()) {
    return ResultStatus::kNoSolution;
  }
  return results_.primal[static_cast<std::size_t>(result - 1)].status;
}

ResultStatus Model::dual_status() const {
  return has_results_ ? results_.dual_status : ResultStatus::kNoSolution;
}

std::int64_t Model::result_count() const {
  return has_results_ ? results_.result_count() : 0;
}

std::string Model::raw_status() const {
  RequireResults();
  return results_.raw_status;
}

double Model::Value(VariableRef variable, std::int64_t result) const {
  CheckVariable(variable);
  const PrimalResult& p = Primal(result);
  return p.values[static_cast<std::size_t>(variable.index())];
}

double Model::Value(const AffExpr& expr, std::int64_t result) const {
  CheckOwner(expr.model_id());
  double total = expr.constant();
  for (const AffExpr::Term& t : expr.terms()) {
    total += t.coefficient * Value(t.key, result);
  }
  return total;
}

double Model::Value(const QuadExpr& expr, std::int64_t result) const {
  double total = Value(expr.affine(), result);
  for (const QuadExpr::Term& t : expr.qterms()) {
    total += t.coefficient * Value(t.key.first, result) *
             Value(t.key.second, result);
  }
  return total;
}

double Model::ObjectiveValue(std::int64_t result) const {
  return Primal(result).objective;
}

double Model::ObjectiveBound() const {
  RequireResults();
  return results_.objective_bound;
}

double Model::Dual(ConstraintRef constraint) const {
  CheckConstraint(constraint);
  RequireResults();
  const std::size_t c = static_cast<std::size_t>(constraint.index);
  if (results_.dual_status == ResultStatus::kNoSolution ||
      c >= results_.duals.size() || std::isnan(results_.duals[c])) {
    throw Error(ErrorCode::kNoResultAvailable,
                "no dual value for constraint " +
                    std::to_string(constraint.index));
  }
  return results_.duals[c];
}

double Model::ReducedCost(VariableRef variable) const {
  CheckVariable(variable);
  RequireResults();
  const std::size_t j = static_cast<std::size_t>(variable.index());
  if (results_.dual_status == ResultStatus::kNoSolution ||
      j >= results_.reduced_costs.size()) {
    throw Error(ErrorCode::kNoResultAvailable,
                "no reduced cost for variable " +
                    std::to_string(variable.index()));
  }
  return results_.reduced_costs[j];
}

double Model::SolveTime() const {
  RequireResults();
  return results_.solve_time;
}

const SolveResults& Model::results() const {
  RequireResults();
  return results_;
}

std::string Model::SolutionSummary(bool verbose) const {
  RequireResults();
  std::ostringstream out;
  out << "solver_name : " << backend_->name() << "\n";
  out << "termination_status : " << ToString(results_.termination) << "\n";
  out << "primal_status : " << ToString(primal_status(1)) << "\n";
  out << "dual_status : " << ToString(results_.dual_status) << "\n";
  if (results_.result_count() > 0) {
    out << "objective_value : " << Summary(results_.primal[0].objective)
        << "\n";
  }
  out << "result_count : " << results_.result_count() << "\n";
  out << "solve_time : " << Summary(results_.solve_time) << "\n";
  if (verbose && results_.result_count() > 0) {
    out << "variable_values :\n";
    const ModelImage& img = image();
    for (std::int64_t j : img.LiveVariables()) {
      const std::string& label = img.variable(j).name;
      out << "  " << (label.empty() ? "v" + std::to_string(j) : label)
          << " : " << Summary(results_.primal[0].values[j]) << "\n";
    }
  }
  return out.str();
}

ModelIis Model::ComputeIis() {
  if (in_callback_) {
    throw Error(ErrorCode::kModelMutationInCallback,
                "IIS cannot be computed from inside a callback");
  }
  backend();
  Sync();
  IisResult raw = backend_->ComputeIis();
  ModelIis out;
  const std::int64_t slots = image().constraint_slots();
  for (std::int64_t c : raw.constraints) {
    std::int64_t source = -1;
    if (c < slots && image().IsConstraintLive(c)) {
      source = c;
    } else {
      for (const BridgedImage::Record& r : bridge_records_) {
        for (std::int64_t rc : r.constraints) {
          if (rc == c) source = r.source;
        }
      }
    }
    if (source < 0) continue;
    ConstraintRef ref = constraint(source);
    if (std::find(out.constraints.begin(), out.constraints.end(), ref) ==
        out.constraints.end()) {
      out.constraints.push_back(ref);
    }
  }
  for (const IisBound& b : raw.bounds) {
    if (b.variable < image().variable_slots() &&
        image().IsVariableLive(b.variable)) {
      out.bounds.emplace_back(VariableRef(id_, b.variable), b.upper);
    }
  }
  return out;
}

}  // namespace amodel
