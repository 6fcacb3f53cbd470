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

#include "amodel/bench.h"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <new>
#include <sstream>
#include <utility>

#include "amodel/benchgen.h"
#include "amodel/errors.h"
#include "amodel/milp.h"
#include "amodel/model.h"
#include "amodel/one_shot.h"
#include "amodel/qp.h"

namespace amodel {
namespace {

OptimizerFactory Factory(const BenchConfig& config) {
  if (config.backend == BenchBackend::kOneShot) {
    std::filesystem::path dir = config.work_dir;
    if (dir.empty()) dir = std::filesystem::temp_directory_path() / "amodel-bench";
    return OneShotOptimizer(dir);
  }
  return config.family == BenchFamily::kFac ? MilpOptimizer() : QpOptimizer();
}

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

}  // namespace

std::string_view ToString(BenchFamily family) {
  return family == BenchFamily::kFac ? "fac" : "lqcp";
}

std::string_view ToString(BenchMode mode) {
  return mode == BenchMode::kCached ? "cached" : "direct";
}

std::string_view ToString(BenchBackend backend) {
  return backend == BenchBackend::kInternal ? "internal" : "oneshot";
}

std::int64_t PeakResidentBytes() {
  struct rusage usage;
  if (getrusage(RUSAGE_SELF, &usage) != 0) return -1;
  return static_cast<std::int64_t>(usage.ru_maxrss) * 1024;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<BenchRecord> RunBench(const BenchConfig& config) {
  if (config.repeats < 1) {
    throw Error(ErrorCode::kInvalidArgument, "repeats must be at least 1");
  }
  const std::int64_t minimum = config.family == BenchFamily::kFac ? 1 : 2;
  if (config.size < minimum) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(ToString(config.family)) + " needs size >= " +
                    std::to_string(minimum));
  }
  const OptimizerFactory factory =
      OptimizerWithAttributes(Factory(config), {{"time_limit", 0.0}});
  std::vector<BenchRecord> records;
  for (int run = 1; run <= config.repeats; ++run) {
    BenchRecord record;
    record.family = config.family;
    record.size = config.size;
    record.mode = config.mode;
    record.run = run;
    try {
      const auto start = std::chrono::steady_clock::now();
      Model model = config.mode == BenchMode::kDirect ? Model::Direct(factory)
                                                      : Model(factory);
      if (config.family == BenchFamily::kFac) {
        GenerateFac(model, config.size);
      } else {
        GenerateLqcp(model, config.size);
      }
      model.Optimize();
      const auto stop = std::chrono::steady_clock::now();
      record.seconds = std::chrono::duration<double>(stop - start).count();
      record.variables = model.num_variables();
      record.status = model.termination_status();
    } catch (const std::bad_alloc&) {
      throw Error(ErrorCode::kOutOfMemory,
                  "out of memory generating " +
                      std::string(ToString(config.family)) + "-" +
                      std::to_string(config.size));
    }
    if (record.status != TerminationStatus::kTimeLimit) {
      throw Error(ErrorCode::kInvalidArgument,
                  "backend returned " + std::string(ToString(record.status)) +
                      " instead of TIME_LIMIT under a zero time limit");
    }
    record.peak_bytes = PeakResidentBytes();
    records.push_back(record);
  }
  return records;
}

std::string EmitReport(const std::vector<BenchRecord>& records,
                       ReportFormat format) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyReport, "no benchmark records to report");
  }
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << "family,size,variables,mode,run,seconds,peak_bytes\n";
    for (const BenchRecord& r : records) {
      out << ToString(r.family) << "," << r.size << "," << r.variables << ","
          << ToString(r.mode) << "," << r.run << "," << Fixed(r.seconds, 6)
          << ",";
      if (r.peak_bytes >= 0) out << r.peak_bytes;
      out << "\n";
    }
    return out.str();
  }

  struct Row {
    BenchFamily family;
    std::int64_t size;
    std::int64_t variables;
    std::map<BenchMode, std::vector<double>> times;
  };
  std::vector<Row> rows;
  for (const BenchRecord& r : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& row) {
      return row.family == r.family && row.size == r.size;
    });
    if (it == rows.end()) {
      rows.push_back({r.family, r.size, r.variables, {}});
      it = rows.end() - 1;
    }
    it->times[r.mode].push_back(r.seconds);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.family < b.family;
  });
  char line[160];
  std::snprintf(line, sizeof(line), "%-8s %8s %12s %12s %12s\n", "family",
                "size", "variables", "cached (s)", "direct (s)");
  out << line;
  for (const Row& row : rows) {
    std::string cells[2];
    int k = 0;
    for (BenchMode mode : {BenchMode::kCached, BenchMode::kDirect}) {
      auto it = row.times.find(mode);
      cells[k++] = it == row.times.end() ? "-" : Fixed(Median(it->second), 3);
    }
    std::snprintf(line, sizeof(line), "%-8s %8lld %12lld %12s %12s\n",
                  std::string(ToString(row.family)).c_str(),
                  static_cast<long long>(row.size),
                  static_cast<long long>(row.variables), cells[0].c_str(),
                  cells[1].c_str());
    out << line;
  }
  return out.str();
}

}  // namespace amodel
