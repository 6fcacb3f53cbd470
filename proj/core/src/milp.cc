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

#include "amodel/milp.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <queue>

#include "amodel/errors.h"
#include "amodel/simplex.h"

namespace amodel {
namespace {

constexpr double kIntegrality = 1e-6;
constexpr double kFeasibility = 1e-6;
constexpr double kPruneSlack = 1e-9;
constexpr int kMaxCutRounds = 20;

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  double bound = -kInf;
  std::int32_t depth = 0;
  std::int64_t sequence = 0;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.sequence > b.sequence;
  }
};

struct Incumbent {
  std::vector<double> values;  // variable slots
  double objective = kInf;     // minimization form
};

// Raised to unwind the search when a user callback throws.
struct CallbackFailure {
  std::string message;
};

class Search {
 public:
  Search(const ModelImage& image, const BackendCallback* lazy, const BackendCallback* cut,
         const BackendCallback* heuristic,
         const MilpBackend::IncumbentHook& hook,
         std::vector<NodeLogEntry>& log, double time_limit,
         std::int64_t node_limit, double gap_tol,
         const std::function<double(std::int64_t)>& priority)
      : image_(image),
        lazy_(lazy),
        cut_(cut),
        heuristic_(heuristic),
        hook_(hook),
        log_(log),
        deadline_(time_limit),
        time_limit_(time_limit),
        node_limit_(node_limit),
        gap_tol_(gap_tol) {
    base_ = BuildLp(image, &map_);
    sign_ = map_.maximize ? -1.0 : 1.0;
    const std::int32_t n = base_.num_cols;
    is_integer_.assign(n, false);
    priority_.assign(n, 0.0);
    for (std::int32_t j = 0; j < n; ++j) {
      const std::int64_t v = map_.column_variable[j];
      priority_[j] = priority(v);
      if (image.EffectiveIntegrality(v) == Integrality::kContinuous) continue;
      is_integer_[j] = true;
      has_integers_ = true;
      base_.col_lower[j] = std::ceil(base_.col_lower[j] - kIntegrality);
      base_.col_upper[j] = std::floor(base_.col_upper[j] + kIntegrality);
    }
    base_rows_ = base_.num_rows();
  }

  SolveResults Run();

 private:
  bool Cutoff(double objective) const {
    return objective >= incumbent_objective() - gap_tol_ - kPruneSlack;
  }
  double incumbent_objective() const {
    return pool_.empty() ? kInf : pool_.back().objective;
  }

  std::vector<double> ToSlots(const std::vector<double>& columns) const {
    std::vector<double> values(image_.variable_slots(), 0.0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      values[map_.column_variable[j]] = columns[j];
    }
    return values;
  }

  // Converts a submitted constraint to a global row. Returns its violation
  // at `slots`.
  double AddGlobalRow(const ConstraintData& c,
                      const std::vector<double>& slots);
  double RowViolation(std::int32_t row, const std::vector<double>& slots) const;
  bool SatisfiesGlobalRows(const std::vector<double>& slots) const;

  CallbackData Invoke(const BackendCallback& fn, CallbackKind kind,
                      NodeStatus status, const std::vector<double>& slots);

  // Runs the lazy callback on an integral candidate. Returns true when no
  // submitted constraint cuts it off.
  bool VetCandidate(const std::vector<double>& slots);
  // Returns true when the search must stop.
  bool Offer(std::vector<double> slots, double objective);
  void TryHeuristics(const std::vector<double>& slots);

  const ModelImage& image_;
  const BackendCallback* lazy_;
  const BackendCallback* cut_;
  const BackendCallback* heuristic_;
  const MilpBackend::IncumbentHook& hook_;
  std::vector<NodeLogEntry>& log_;
  Deadline deadline_;
  double time_limit_;
  std::int64_t node_limit_;
  double gap_tol_;

  LpMapping map_;
  LpData base_;
  std::int32_t base_rows_ = 0;
  double sign_ = 1.0;
  std::vector<bool> is_integer_;
  std::vector<double> priority_;
  bool has_integers_ = false;
  bool stop_ = false;
  std::vector<Incumbent> pool_;  // strictly improving, discovery order
  CallbackCounters counters_;
  std::int64_t iterations_ = 0;
};

double Search::RowViolation(std::int32_t row,
                            const std::vector<double>& slots) const {
  const SparseRow& r = base_.rows[row];
  double activity = 0.0;
  for (std::size_t k = 0; k < r.columns.size(); ++k) {
    activity += r.values[k] * slots[map_.column_variable[r.columns[k]]];
  }
  return std::max({0.0, base_.row_lower[row] - activity,
                   activity - base_.row_upper[row]});
}

bool Search::SatisfiesGlobalRows(const std::vector<double>& slots) const {
  for (std::int32_t i = base_rows_; i < base_.num_rows(); ++i) {
    if (RowViolation(i, slots) > kFeasibility) return false;
  }
  return true;
}

double Search::AddGlobalRow(const ConstraintData& c,
                            const std::vector<double>& slots) {
  const auto* f = std::get_if<ScalarAffineFunction>(&c.function);
  if (f == nullptr || !IsLinearSet(TagOf(c.set))) {
    throw CallbackFailure{"submitted constraints must be scalar affine in a "
                          "linear set, got " +
                          std::string(FunctionKindName(KindOf(c.function))) +
                          "-in-" + SetName(c.set)};
  }
  SparseRow row;
  for (const LinearTerm& t : f->terms) {
    if (!image_.IsVariableLive(t.variable)) {
      throw CallbackFailure{"submitted constraint references variable " +
                            std::to_string(t.variable) +
                            ", which is not part of the problem"};
    }
    row.columns.push_back(map_.variable_column[t.variable]);
    row.values.push_back(t.coefficient);
  }
  base_.AddRow(std::move(row), SetLower(c.set) - f->constant,
               SetUpper(c.set) - f->constant);
  return RowViolation(base_.num_rows() - 1, slots);
}

CallbackData Search::Invoke(const BackendCallback& fn, CallbackKind kind,
                            NodeStatus status,
                            const std::vector<double>& slots) {
  CallbackData data;
  data.kind = kind;
  data.node_status = status;
  data.values = slots;
  try {
    fn(data);
  } catch (const std::exception& e) {
    throw CallbackFailure{std::string(ToString(kind)) +
                          " callback raised: " + e.what()};
  } catch (...) {
    throw CallbackFailure{std::string(ToString(kind)) +
                          " callback raised an unknown exception"};
  }
  return data;
}

bool Search::VetCandidate(const std::vector<double>& slots) {
  if (lazy_ == nullptr) return true;
  ++counters_.lazy_invocations;
  CallbackData data =
      Invoke(*lazy_, CallbackKind::kLazyConstraint, NodeStatus::kInteger, slots);
  bool ok = true;
  for (const ConstraintData& c : data.lazy_constraints) {
    ++counters_.lazy_submitted;
    if (AddGlobalRow(c, slots) > kFeasibility) ok = false;
  }
  for (const ConstraintData& c : data.user_cuts) {
    ++counters_.cuts_submitted;
    if (AddGlobalRow(c, slots) > kFeasibility) ok = false;
  }
  return ok;
}

bool Search::Offer(std::vector<double> slots, double objective) {
  if (!(objective < incumbent_objective())) return false;
  pool_.push_back({std::move(slots), objective});
  return hook_ && hook_(pool_.back().values, sign_ * objective);
}

void Search::TryHeuristics(const std::vector<double>& slots) {
  ++counters_.heuristic_invocations;
  CallbackData data =
      Invoke(*heuristic_, CallbackKind::kHeuristic, NodeStatus::kFractional,
             slots);
  for (const ConstraintData& c : data.lazy_constraints) {
    ++counters_.lazy_submitted;
    AddGlobalRow(c, slots);
  }
  for (const ConstraintData& c : data.user_cuts) {
    ++counters_.cuts_submitted;
    AddGlobalRow(c, slots);
  }
  for (std::vector<double>& candidate : data.heuristic_solutions) {
    candidate.resize(image_.variable_slots(), 0.0);
    bool feasible = CheckFeasibility(image_, candidate, kFeasibility).feasible &&
                    SatisfiesGlobalRows(candidate) && VetCandidate(candidate);
    if (!feasible) {
      ++counters_.heuristic_rejected;
      continue;
    }
    ++counters_.heuristic_accepted;
    const double objective = sign_ * ObjectiveValue(image_, candidate);
    if (Offer(std::move(candidate), objective)) {
      stop_ = true;
      return;
    }
  }
}

SolveResults Search::Run() {
  SolveResults out;
  if (deadline_.immediate()) {
    out.termination = TerminationStatus::kTimeLimit;
    out.raw_status = "time limit reached before the root node";
    return out;
  }

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  std::int64_t sequence = 0;
  open.push({base_.col_lower, base_.col_upper, -kInf, 0, sequence++});

  TerminationStatus status = TerminationStatus::kOptimal;
  std::string raw = "tree exhausted";
  std::int64_t nodes = 0;
  LpSolution root_solution;
  bool root_solved = false;

  try {
    while (!open.empty() && !stop_) {
      if (deadline_.Expired()) {
        status = TerminationStatus::kTimeLimit;
        raw = "time limit";
        break;
      }
      if (nodes >= node_limit_) {
        status = TerminationStatus::kNodeLimit;
        raw = "node limit";
        break;
      }
      Node node = open.top();
      open.pop();
      NodeLogEntry entry;
      entry.node = node.sequence;
      entry.depth = node.depth;
      entry.lp_objective = sign_ * node.bound;
      if (Cutoff(node.bound)) {
        entry.outcome = "pruned";
        log_.push_back(entry);
        continue;
      }
      ++nodes;

      int cut_rounds = 0;
      for (;;) {
        LpData lp = base_;
        lp.col_lower = node.lower;
        lp.col_upper = node.upper;
        LpOptions options;
        options.time_limit = time_limit_ - deadline_.Elapsed();
        if (std::isinf(time_limit_)) options.time_limit = kInf;
        LpSolution sol = SolveLp(lp, options);
        iterations_ += sol.iterations;
        if (node.depth == 0) {
          root_solution = sol;
          root_solved = true;
        }
        entry.lp_objective = sign_ * sol.objective;

        if (sol.status == LpStatus::kTimeLimit) {
          status = TerminationStatus::kTimeLimit;
          raw = "time limit";
          stop_ = true;
          break;
        }
        if (sol.status == LpStatus::kIterationLimit) {
          status = TerminationStatus::kIterationLimit;
          raw = "iteration limit in node relaxation";
          stop_ = true;
          break;
        }
        if (sol.status == LpStatus::kInfeasible) {
          entry.outcome = "infeasible";
          break;
        }
        if (sol.status == LpStatus::kUnbounded) {
          status = TerminationStatus::kDualInfeasible;
          raw = "relaxation unbounded";
          stop_ = true;
          if (pool_.empty()) {
            PrimalResult ray;
            ray.values = ToSlots(sol.ray);
            ray.status = ResultStatus::kInfeasibilityCertificate;
            double slope = 0.0;
            for (std::size_t j = 0; j < sol.ray.size(); ++j) {
              slope += base_.objective[j] * sol.ray[j];
            }
            ray.objective = sign_ * slope;
            out.primal.push_back(std::move(ray));
          }
          break;
        }
        if (Cutoff(sol.objective)) {
          entry.outcome = "pruned";
          break;
        }

        std::int32_t branch = -1;
        double best_priority = -kInf;
        double best_fraction = 0.0;
        for (std::int32_t j = 0; j < base_.num_cols; ++j) {
          if (!is_integer_[j]) continue;
          const double f = sol.x[j] - std::floor(sol.x[j]);
          const double fraction = std::min(f, 1.0 - f);
          if (fraction <= kIntegrality) continue;
          if (priority_[j] > best_priority ||
              (priority_[j] == best_priority && fraction > best_fraction + 1e-12)) {
            branch = j;
            best_priority = priority_[j];
            best_fraction = fraction;
          }
        }

        if (branch < 0) {
          std::vector<double> slots = ToSlots(sol.x);
          for (std::int32_t j = 0; j < base_.num_cols; ++j) {
            if (is_integer_[j]) {
              double& v = slots[map_.column_variable[j]];
              v = std::round(v);
            }
          }
          if (!VetCandidate(slots)) continue;  // re-solve with the new rows
          entry.outcome = "integer";
          if (Offer(std::move(slots), sol.objective)) {
            status = TerminationStatus::kInterrupted;
            raw = "stopped by the incumbent hook";
            stop_ = true;
          }
          break;
        }

        std::vector<double> slots = ToSlots(sol.x);
        if (cut_ != nullptr && cut_rounds < kMaxCutRounds) {
          ++counters_.cut_invocations;
          CallbackData data =
              Invoke(*cut_, CallbackKind::kUserCut, NodeStatus::kFractional,
                     slots);
          bool violated = false;
          for (const ConstraintData& c : data.user_cuts) {
            ++counters_.cuts_submitted;
            violated = AddGlobalRow(c, slots) > kFeasibility || violated;
          }
          for (const ConstraintData& c : data.lazy_constraints) {
            ++counters_.lazy_submitted;
            violated = AddGlobalRow(c, slots) > kFeasibility || violated;
          }
          if (violated) {
            ++cut_rounds;
            continue;
          }
        }
        if (heuristic_ != nullptr) {
          TryHeuristics(slots);
          if (stop_) {
            status = TerminationStatus::kInterrupted;
            raw = "stopped by the incumbent hook";
            break;
          }
        }

        entry.outcome = "branched";
        entry.branch_variable = map_.column_variable[branch];
        const double value = sol.x[branch];
        Node down{node.lower, node.upper, sol.objective, node.depth + 1,
                  sequence++};
        down.upper[branch] = std::floor(value);
        Node up{node.lower, node.upper, sol.objective, node.depth + 1,
                sequence++};
        up.lower[branch] = std::ceil(value);
        open.push(std::move(down));
        open.push(std::move(up));
        break;
      }
      log_.push_back(entry);
    }
  } catch (const CallbackFailure& failure) {
    status = TerminationStatus::kOtherError;
    raw = failure.message;
  }

  if (status == TerminationStatus::kOptimal && pool_.empty()) {
    status = TerminationStatus::kInfeasible;
    raw = "no integer feasible point";
  }
  out.termination = status;
  out.raw_status = raw;
  out.nodes = nodes;
  out.iterations = iterations_;
  out.callbacks = counters_;

  double bound = incumbent_objective();
  while (!open.empty()) {
    bound = std::min(bound, open.top().bound);
    open.pop();
  }
  out.objective_bound = sign_ * bound;

  if (status != TerminationStatus::kDualInfeasible) {
    std::vector<Incumbent> sorted = pool_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Incumbent& a, const Incumbent& b) {
                       return a.objective < b.objective;
                     });
    for (Incumbent& inc : sorted) {
      PrimalResult r;
      r.values = std::move(inc.values);
      r.objective = sign_ * inc.objective;
      r.status = ResultStatus::kFeasiblePoint;
      out.primal.push_back(std::move(r));
    }
  }

  // A pure LP solved at the root keeps its duals.
  if (status == TerminationStatus::kOptimal && !has_integers_ &&
      base_.num_rows() == base_rows_ && root_solved &&
      root_solution.status == LpStatus::kOptimal) {
    out.dual_status = ResultStatus::kFeasiblePoint;
    out.duals.assign(image_.constraint_slots(),
                     std::numeric_limits<double>::quiet_NaN());
    for (std::int32_t i = 0; i < base_rows_; ++i) {
      out.duals[map_.row_constraint[i]] = root_solution.duals[i];
    }
    out.reduced_costs = ToSlots(root_solution.reduced_costs);
  }
  return out;
}

}  // namespace

MilpBackend::MilpBackend() {
  capabilities_.incremental = true;
  capabilities_.supports_constraint = [](FunctionKind kind,
                                         const ConstraintSet& set) {
    const SetTag tag = TagOf(set);
    return kind == FunctionKind::kScalarAffine &&
           (IsLinearSet(tag) || IsIntegralitySet(tag));
  };
  capabilities_.supports_attribute = [](const AttributeKey& key) {
    if (key.scope == AttributeScope::kVariable) {
      return key.name == "branch_priority";
    }
    return key.scope == AttributeScope::kOptimizer &&
           (key.name == "time_limit" || key.name == "node_limit" ||
            key.name == "gap_tol" || key.name == "verbose");
  };
  capabilities_.provides_duals = true;
  capabilities_.callbacks = {CallbackKind::kLazyConstraint,
                             CallbackKind::kUserCut, CallbackKind::kHeuristic};
  capabilities_.max_results = kUnlimitedResults;
}

SolveResults MilpBackend::Solve() {
  node_log_.clear();
  if (RealOption("time_limit", kInf) <= 0.0) {
    SolveResults out;
    out.termination = TerminationStatus::kTimeLimit;
    out.raw_status = "time limit reached before the root node";
    return out;
  }
  Search search(
      image_, callback(CallbackKind::kLazyConstraint),
      callback(CallbackKind::kUserCut), callback(CallbackKind::kHeuristic),
      on_incumbent_, node_log_, RealOption("time_limit", kInf),
      IntOption("node_limit", std::numeric_limits<std::int64_t>::max()),
      RealOption("gap_tol", 0.0),
      [this](std::int64_t v) { return VariableReal("branch_priority", v, 0.0); });
  SolveResults out = search.Run();
  if (BoolOption("verbose", false)) {
    std::clog << "milp: " << out.raw_status << ", " << out.nodes
              << " nodes, " << out.result_count() << " solutions\n";
  }
  return out;
}

OptimizerFactory MilpOptimizer() {
  return OptimizerFactory([] { return std::make_unique<MilpBackend>(); });
}

}  // namespace amodel
