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

// bench --family fac|lqcp --size N [--mode cached|direct ...]
//       [--backend internal|oneshot] [--repeats K] [--format csv|table]
//       [--output PATH] [--workdir DIR]
//
// Exit codes: 0 success, 2 configuration error, 3 out of memory.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amodel/bench.h"
#include "amodel/errors.h"

namespace {

constexpr int kConfigurationError = 2;
constexpr int kOutOfMemory = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model build-time benchmark"};
  amodel::BenchFamily family = amodel::BenchFamily::kFac;
  std::int64_t size = 0;
  std::vector<amodel::BenchMode> modes = {amodel::BenchMode::kCached};
  amodel::BenchBackend backend = amodel::BenchBackend::kInternal;
  int repeats = 3;
  amodel::ReportFormat format = amodel::ReportFormat::kTable;
  std::string output;
  std::string workdir;

  const std::map<std::string, amodel::BenchFamily> families = {
      {"fac", amodel::BenchFamily::kFac}, {"lqcp", amodel::BenchFamily::kLqcp}};
  const std::map<std::string, amodel::BenchMode> mode_names = {
      {"cached", amodel::BenchMode::kCached},
      {"direct", amodel::BenchMode::kDirect}};
  const std::map<std::string, amodel::BenchBackend> backends = {
      {"internal", amodel::BenchBackend::kInternal},
      {"oneshot", amodel::BenchBackend::kOneShot}};
  const std::map<std::string, amodel::ReportFormat> formats = {
      {"csv", amodel::ReportFormat::kCsv},
      {"table", amodel::ReportFormat::kTable}};

  app.add_option("--family", family, "Model family")
      ->required()
      ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
  app.add_option("--size", size, "Size parameter (G for fac, N for lqcp)")
      ->required()
      ->check(CLI::PositiveNumber);
  app.add_option("--mode", modes, "Attachment mode; repeat to run several")
      ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
  app.add_option("--backend", backend, "Backend")
      ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case));
  app.add_option("--repeats", repeats, "Repeats per mode")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output", output, "Report path (default: stdout)");
  app.add_option("--workdir", workdir,
                 "Directory for the one-shot backend's model file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigurationError;
  }

  std::vector<amodel::BenchRecord> records;
  try {
    for (amodel::BenchMode mode : modes) {
      amodel::BenchConfig config;
      config.family = family;
      config.size = size;
      config.mode = mode;
      config.backend = backend;
      config.repeats = repeats;
      config.work_dir = workdir;
      std::vector<amodel::BenchRecord> run = amodel::RunBench(config);
      records.insert(records.end(), run.begin(), run.end());
    }
  } catch (const amodel::Error& e) {
    std::cerr << "bench: " << e.what() << "\n";
    return e.code() == amodel::ErrorCode::kOutOfMemory ? kOutOfMemory
                                                       : kConfigurationError;
  }

  const std::string report = amodel::EmitReport(records, format);
  if (output.empty()) {
    std::cout << report;
  } else {
    std::ofstream file(output);
    if (!file) {
      std::cerr << "bench: cannot write " << output << "\n";
      return kConfigurationError;
    }
    file << report;
  }
  return 0;
}
