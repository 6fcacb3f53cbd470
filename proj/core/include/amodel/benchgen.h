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

// Generators for two scalable benchmark families.
//
// fac(G): place G facilities in the unit square so that the largest L1
// distance from a point of the (G+1) x (G+1) grid to its assigned facility
// is minimal.
//   min s
//   sum_f z[i,j,f] = 1                          for every grid point (i, j)
//   r[i,j,f,k] = y[f,k] - p_k                   p = (i/G, j/G)
//   d[i,j,f] >= +-r[i,j,f,1] +- r[i,j,f,2]      all four sign patterns
//   s >= d[i,j,f] - 2 (1 - z[i,j,f])
// with y in [0,1], z binary, d >= 0 and r, s free.
//
// lqcp(N): Crank-Nicolson discretization of a boundary-controlled heat
// equation on an N x N grid, with a tracking objective on the final time
// slice and a small penalty a = 0.001 on the controls u in [-1, 1].

#ifndef AMODEL_BENCHGEN_H_
#define AMODEL_BENCHGEN_H_

#include <cstdint>

#include "amodel/model.h"

namespace amodel {

// 4 (G+1)^2 G + 2G + 1
std::int64_t FacVariableCount(std::int64_t g);
// (G+1)^2 (1 + 2G + 4G + G) = (G+1)^2 (7G + 1)
std::int64_t FacConstraintCount(std::int64_t g);
// (N+1)^2 + N
std::int64_t LqcpVariableCount(std::int64_t n);
// N (N-1) interior + (N+1) initial + 2N boundary rows
std::int64_t LqcpConstraintCount(std::int64_t n);

// Adds fac(G) to an empty model. Raises InvalidArgument for G < 1.
void GenerateFac(Model& model, std::int64_t g);

// Adds lqcp(N) to an empty model. Raises InvalidArgument for N < 2.
void GenerateLqcp(Model& model, std::int64_t n);

// Target profile of lqcp: 0.5 (1 - x^2).
double LqcpTarget(double x);

inline constexpr double kLqcpControlWeight = 0.001;

}  // namespace amodel

#endif  // AMODEL_BENCHGEN_H_
