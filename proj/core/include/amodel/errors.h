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

#ifndef AMODEL_ERRORS_H_
#define AMODEL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace amodel {

// Every failure raised by the library carries one of these codes. Callers
// that need to branch on the failure kind should inspect Error::code()
// rather than parse the message.
enum class ErrorCode {
  kInvalidArgument,
  // expressions
  kMixedModels,
  kMissingValue,
  // model
  kInvalidBounds,
  kShapeMismatch,
  kStaleReference,
  kVariableInUse,
  kUnsupportedModification,
  kUnboundedComplementsVariable,
  kNoOptimizerAttached,
  kNoResultAvailable,
  kResultIndexOutOfRange,
  kModelMutationInCallback,
  kSolverChangeInDirectMode,
  // attributes and extensions
  kUnknownAttribute,
  kTypeMismatch,
  kUnsupportedByBackend,
  kDuplicateRegistration,
  // backends
  kUnsupportedConstraint,
  kNotIncremental,
  kExpiredContext,
  kUnsupportedCallback,
  kCallbackError,
  kNotLinear,
  kNumericalFailure,
  kNotInfeasible,
  kNotConvex,
  kNotSymmetric,
  kUnboundedDomain,
  kInfeasible,
  // bridges
  kUnboundedIndicatorBigM,
  kUnboundedComplementsBigM,
  // file io
  kUnsupportedInDialect,
  kParseError,
  kUnknownSection,
  kIoError,
  // bench
  kEmptyReport,
  kOutOfMemory,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the LP reader. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace amodel

#endif  // AMODEL_ERRORS_H_
