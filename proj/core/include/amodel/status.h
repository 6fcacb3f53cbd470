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

#ifndef AMODEL_STATUS_H_
#define AMODEL_STATUS_H_

#include <string_view>

namespace amodel {

// Why the solver stopped. Exactly one per solve.
enum class TerminationStatus {
  kOptimizeNotCalled,
  kOptimal,
  kInfeasible,
  kDualInfeasible,
  kLocallySolved,
  kTimeLimit,
  kNodeLimit,
  kIterationLimit,
  kInterrupted,
  kUnsupported,
  kOtherError,
};

// Quality of one primal or dual result.
enum class ResultStatus {
  kNoSolution,
  kFeasiblePoint,
  kNearlyFeasiblePoint,
  kInfeasiblePoint,
  kInfeasibilityCertificate,
};

enum class NodeStatus { kInteger, kFractional, kUnknown };

// Upper-snake names, e.g. "OPTIMAL", "TIME_LIMIT".
std::string_view ToString(TerminationStatus status);
std::string_view ToString(ResultStatus status);
std::string_view ToString(NodeStatus status);

}  // namespace amodel

#endif  // AMODEL_STATUS_H_
