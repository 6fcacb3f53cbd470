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

// Bridges rewrite a constraint the attached backend cannot take into
// constraints it can, possibly adding auxiliary variables. They run only in
// caching mode, when the cache is copied into the backend.

#ifndef AMODEL_BRIDGES_H_
#define AMODEL_BRIDGES_H_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "amodel/backend.h"
#include "amodel/model_image.h"

namespace amodel {

// Sink for the output of a rewrite. Variable indices are those of the
// image being built.
class BridgeBuilder {
 public:
  virtual ~BridgeBuilder() = default;

  virtual std::int64_t AddVariable(VariableData variable) = 0;
  virtual void AddConstraint(ConstraintData constraint) = 0;
  // Effective bounds of a variable of the image being built.
  virtual std::pair<double, double> Bounds(std::int64_t variable) const = 0;
};

class Bridge {
 public:
  virtual ~Bridge() = default;

  virtual std::string name() const = 0;
  virtual void Rewrite(const ConstraintData& constraint,
                       BridgeBuilder& out) const = 0;
};

// z == activate_on implies a'x + b <= c (or >= c), rewritten as one linear
// row with a big-M taken from interval arithmetic over the variable bounds.
// Raises UnboundedIndicatorBigM naming an unbounded variable.
std::shared_ptr<const Bridge> IndicatorBigMBridge();

// f(x) perp x_i with x_i in [l, u]: one binary per finite bound side
// selects "x_i at that bound"; f is forced to zero otherwise and given the
// required sign at the selected bound. Needs a finite range for x_i and the
// relevant finite bounds of f; raises UnboundedComplementsBigM otherwise.
std::shared_ptr<const Bridge> ComplementsBigMBridge();

// Built-in bridge for the set, or the one registered for a user set.
// Returns nullptr when there is none.
std::shared_ptr<const Bridge> FindBridge(const ConstraintSet& set);

// [min, max] of f over the box given by `bounds`.
std::pair<double, double> AffineRange(
    const ScalarAffineFunction& f,
    const std::function<std::pair<double, double>(std::int64_t)>& bounds);

struct BridgedImage {
  // Same variable and constraint slots as the source; bridged constraints
  // are tombstones and their replacements are appended.
  ModelImage image;
  // For every bridged source constraint, the constraints and auxiliary
  // variables that replaced it.
  struct Record {
    std::int64_t source = -1;
    std::string bridge;
    std::vector<std::int64_t> constraints;
    std::vector<std::int64_t> variables;
  };
  std::vector<Record> bridged;
};

// Copies `source`, bridging every constraint `capabilities` rejects. Chains
// are at most two bridges deep. Raises UnsupportedConstraint when a
// constraint cannot be made supported.
BridgedImage BuildBridgedImage(const ModelImage& source,
                               const BackendCapabilities& capabilities,
                               const std::string& backend_name);

bool NeedsBridges(const ModelImage& source,
                  const BackendCapabilities& capabilities);

}  // namespace amodel

#endif  // AMODEL_BRIDGES_H_
