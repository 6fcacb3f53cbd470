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

// Build-time benchmark: generate a model, hand it to a backend with a zero
// time limit and measure until Optimize() returns TIME_LIMIT. The clock
// starts before the generator runs; model teardown is not timed.

#ifndef AMODEL_BENCH_H_
#define AMODEL_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "amodel/status.h"

namespace amodel {

enum class BenchFamily { kFac, kLqcp };
enum class BenchMode { kCached, kDirect };
enum class BenchBackend { kInternal, kOneShot };
enum class ReportFormat { kCsv, kTable };

std::string_view ToString(BenchFamily family);
std::string_view ToString(BenchMode mode);
std::string_view ToString(BenchBackend backend);

struct BenchConfig {
  BenchFamily family = BenchFamily::kFac;
  std::int64_t size = 0;
  BenchMode mode = BenchMode::kCached;
  BenchBackend backend = BenchBackend::kInternal;
  int repeats = 3;
  // Where the one-shot backend writes its file.
  std::filesystem::path work_dir;
};

struct BenchRecord {
  BenchFamily family = BenchFamily::kFac;
  std::int64_t size = 0;
  std::int64_t variables = 0;
  BenchMode mode = BenchMode::kCached;
  int run = 0;
  double seconds = 0.0;
  std::int64_t peak_bytes = -1;  // -1 when the platform does not report it
  TerminationStatus status = TerminationStatus::kOptimizeNotCalled;
};

// One record per repeat. Raises NotIncremental for a direct run on the
// one-shot backend, InvalidArgument for bad sizes or repeat counts, and
// OutOfMemory naming the size when allocation fails.
std::vector<BenchRecord> RunBench(const BenchConfig& config);

// csv: header family,size,variables,mode,run,seconds,peak_bytes.
// table: one row per (family, size) with the median seconds of every mode.
// Raises EmptyReport for an empty list.
std::string EmitReport(const std::vector<BenchRecord>& records,
                       ReportFormat format);

double Median(std::vector<double> values);

// Peak resident set size of the process, or -1.
std::int64_t PeakResidentBytes();

}  // namespace amodel

#endif  // AMODEL_BENCH_H_
