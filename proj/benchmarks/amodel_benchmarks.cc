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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "amodel/benchgen.h"
#include "amodel/expr.h"
#include "amodel/lp_format.h"
#include "amodel/milp.h"
#include "amodel/model.h"
#include "amodel/simplex.h"

namespace amodel {
namespace {

void BM_AffineSum(benchmark::State& state) {
  Model model;
  const std::vector<VariableRef> x = model.AddVariables(state.range(0));
  for (auto _ : state) {
    AffExpr sum;
    for (std::size_t j = 0; j < x.size(); ++j) sum.AddTerm(1.0 + j, x[j]);
    sum.Canonicalize();
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AffineSum)->Arg(1000)->Arg(100000);

void BM_GenerateFac(benchmark::State& state) {
  for (auto _ : state) {
    Model model;
    GenerateFac(model, state.range(0));
    benchmark::DoNotOptimize(model.num_variables());
  }
}
BENCHMARK(BM_GenerateFac)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_GenerateLqcp(benchmark::State& state) {
  for (auto _ : state) {
    Model model;
    GenerateLqcp(model, state.range(0));
    benchmark::DoNotOptimize(model.num_variables());
  }
}
BENCHMARK(BM_GenerateLqcp)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_DirectLoadFac(benchmark::State& state) {
  for (auto _ : state) {
    Model model = Model::Direct(MilpOptimizer());
    GenerateFac(model, state.range(0));
    benchmark::DoNotOptimize(model.num_variables());
  }
}
BENCHMARK(BM_DirectLoadFac)->Arg(10)->Unit(benchmark::kMillisecond);

// Dense transportation LP: m sources, n sinks.
void BM_SimplexTransport(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = 2 * m;
  LpData lp;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) lp.AddColumn(0, kInf, 1.0 + (i * 7 + j * 13) % 11);
  }
  for (int i = 0; i < m; ++i) {
    SparseRow row;
    for (int j = 0; j < n; ++j) {
      row.columns.push_back(i * n + j);
      row.values.push_back(1.0);
    }
    lp.AddRow(row, -kInf, 2.0 * n);
  }
  for (int j = 0; j < n; ++j) {
    SparseRow row;
    for (int i = 0; i < m; ++i) {
      row.columns.push_back(i * n + j);
      row.values.push_back(1.0);
    }
    lp.AddRow(row, m, kInf);
  }
  for (auto _ : state) {
    LpSolution solution = SolveLp(lp);
    benchmark::DoNotOptimize(solution.objective);
  }
}
BENCHMARK(BM_SimplexTransport)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_WriteLp(benchmark::State& state) {
  Model model;
  GenerateLqcp(model, state.range(0));
  for (auto _ : state) {
    std::string text = WriteLpString(model.image());
    benchmark::DoNotOptimize(text.data());
  }
}
BENCHMARK(BM_WriteLp)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace amodel

BENCHMARK_MAIN();
