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

// A backend that only accepts whole problems. Load() writes model.lp into
// its directory and parses it back; Optimize() hands the parsed problem to
// the simplex, branch-and-bound or Frank-Wolfe backend depending on its
// content. Apply() raises NotIncremental.

#ifndef AMODEL_ONE_SHOT_H_
#define AMODEL_ONE_SHOT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "amodel/backend.h"

namespace amodel {

class OneShotBackend : public ImageBackend {
 public:
  explicit OneShotBackend(std::filesystem::path directory);

  std::string name() const override { return "oneshot-lp"; }
  const BackendCapabilities& capabilities() const override {
    return capabilities_;
  }

  // Raises UnsupportedInDialect for problems the LP file cannot express
  // and IoError when the file cannot be written or read.
  void Load(ModelImage image) override;

  const std::filesystem::path& file() const { return file_; }
  // Backend that ran the last solve, empty before.
  const std::string& delegate_name() const { return delegate_name_; }

 protected:
  SolveResults Solve() override;

 private:
  BackendCapabilities capabilities_;
  std::filesystem::path directory_;
  std::filesystem::path file_;
  ModelImage parsed_;
  // parsed index -> slot of the loaded image
  std::vector<std::int64_t> variable_slot_;
  std::vector<std::int64_t> constraint_slot_;
  std::string delegate_name_;
};

OptimizerFactory OneShotOptimizer(std::filesystem::path directory);

}  // namespace amodel

#endif  // AMODEL_ONE_SHOT_H_
