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

// LP-based branch and bound.
//
// Nodes are explored best-first on the parent LP bound (deeper nodes first on
// ties, then in creation order). At each node the LP relaxation is solved;
// integral candidates go through the lazy-constraint callback before they can
// become incumbents, fractional nodes run the user-cut and heuristic
// callbacks and then branch on the most fractional variable (highest
// branch_priority first, lowest index on ties), floor child first.
// Submitted lazy constraints and cuts are kept globally for the rest of the
// search.

#ifndef AMODEL_MILP_H_
#define AMODEL_MILP_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "amodel/backend.h"

namespace amodel {

struct NodeLogEntry {
  std::int64_t node = 0;
  std::int32_t depth = 0;
  double lp_objective = 0.0;
  std::string outcome;  // "infeasible", "pruned", "integer", "branched"
  std::int64_t branch_variable = -1;
};

class MilpBackend : public ImageBackend {
 public:
  // Called with each new incumbent (backend variable slots) and its
  // objective. Returning true stops the search with INTERRUPTED.
  using IncumbentHook =
      std::function<bool(std::span<const double> values, double objective)>;

  MilpBackend();

  std::string name() const override { return "milp"; }
  const BackendCapabilities& capabilities() const override {
    return capabilities_;
  }

  void SetIncumbentHook(IncumbentHook hook) { on_incumbent_ = std::move(hook); }
  const std::vector<NodeLogEntry>& node_log() const { return node_log_; }

 protected:
  SolveResults Solve() override;

 private:
  BackendCapabilities capabilities_;
  IncumbentHook on_incumbent_;
  std::vector<NodeLogEntry> node_log_;
};

OptimizerFactory MilpOptimizer();

}  // namespace amodel

#endif  // AMODEL_MILP_H_
