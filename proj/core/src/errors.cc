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

#include "amodel/errors.h"

namespace amodel {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kMixedModels: return "MixedModels";
    case ErrorCode::kMissingValue: return "MissingValue";
    case ErrorCode::kInvalidBounds: return "InvalidBounds";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kStaleReference: return "StaleReference";
    case ErrorCode::kVariableInUse: return "VariableInUse";
    case ErrorCode::kUnsupportedModification: return "UnsupportedModification";
    case ErrorCode::kUnboundedComplementsVariable:
      return "UnboundedComplementsVariable";
    case ErrorCode::kNoOptimizerAttached: return "NoOptimizerAttached";
    case ErrorCode::kNoResultAvailable: return "NoResultAvailable";
    case ErrorCode::kResultIndexOutOfRange: return "ResultIndexOutOfRange";
    case ErrorCode::kModelMutationInCallback: return "ModelMutationInCallback";
    case ErrorCode::kSolverChangeInDirectMode: return "SolverChangeInDirectMode";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kUnsupportedByBackend: return "UnsupportedByBackend";
    case ErrorCode::kDuplicateRegistration: return "DuplicateRegistration";
    case ErrorCode::kUnsupportedConstraint: return "UnsupportedConstraint";
    case ErrorCode::kNotIncremental: return "NotIncremental";
    case ErrorCode::kExpiredContext: return "ExpiredContext";
    case ErrorCode::kUnsupportedCallback: return "UnsupportedCallback";
    case ErrorCode::kCallbackError: return "CallbackError";
    case ErrorCode::kNotLinear: return "NotLinear";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kNotInfeasible: return "NotInfeasible";
    case ErrorCode::kNotConvex: return "NotConvex";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kUnboundedDomain: return "UnboundedDomain";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnboundedIndicatorBigM: return "UnboundedIndicatorBigM";
    case ErrorCode::kUnboundedComplementsBigM: return "UnboundedComplementsBigM";
    case ErrorCode::kUnsupportedInDialect: return "UnsupportedInDialect";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownSection: return "UnknownSection";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kEmptyReport: return "EmptyReport";
    case ErrorCode::kOutOfMemory: return "OutOfMemory";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(ErrorCode code, int line, int column,
                       const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace amodel
