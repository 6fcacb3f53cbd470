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

#include "amodel/status.h"

namespace amodel {

std::string_view ToString(TerminationStatus status) {
  switch (status) {
    case TerminationStatus::kOptimizeNotCalled: return "OPTIMIZE_NOT_CALLED";
    case TerminationStatus::kOptimal: return "OPTIMAL";
    case TerminationStatus::kInfeasible: return "INFEASIBLE";
    case TerminationStatus::kDualInfeasible: return "DUAL_INFEASIBLE";
    case TerminationStatus::kLocallySolved: return "LOCALLY_SOLVED";
    case TerminationStatus::kTimeLimit: return "TIME_LIMIT";
    case TerminationStatus::kNodeLimit: return "NODE_LIMIT";
    case TerminationStatus::kIterationLimit: return "ITERATION_LIMIT";
    case TerminationStatus::kInterrupted: return "INTERRUPTED";
    case TerminationStatus::kUnsupported: return "UNSUPPORTED";
    case TerminationStatus::kOtherError: return "OTHER_ERROR";
  }
  return "?";
}

std::string_view ToString(ResultStatus status) {
  switch (status) {
    case ResultStatus::kNoSolution: return "NO_SOLUTION";
    case ResultStatus::kFeasiblePoint: return "FEASIBLE_POINT";
    case ResultStatus::kNearlyFeasiblePoint: return "NEARLY_FEASIBLE_POINT";
    case ResultStatus::kInfeasiblePoint: return "INFEASIBLE_POINT";
    case ResultStatus::kInfeasibilityCertificate:
      return "INFEASIBILITY_CERTIFICATE";
  }
  return "?";
}

std::string_view ToString(NodeStatus status) {
  switch (status) {
    case NodeStatus::kInteger: return "INTEGER";
    case NodeStatus::kFractional: return "FRACTIONAL";
    case NodeStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

}  // namespace amodel
