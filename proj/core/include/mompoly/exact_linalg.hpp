// Copyright 2026 The mompoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOMPOLY_EXACT_LINALG_HPP_
#define MOMPOLY_EXACT_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "mompoly/types.hpp"

namespace mompoly {

using RatVector = std::vector<BigRat>;
using RatMatrix = std::vector<RatVector>;

struct RowEchelon {
  RatMatrix reduced;  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

// Gauss-Jordan elimination over Q. Rows may be ragged only if `columns` is
// given; missing entries are zero.
RowEchelon row_echelon(const RatMatrix& m, std::size_t columns);
std::size_t rank(const RatMatrix& m, std::size_t columns);
// Basis of {x : m x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t columns);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct Solution {
  SolveStatus status;
  RatVector x;  // a particular solution unless inconsistent
};

Solution solve(const RatMatrix& a, const RatVector& b);

}  // namespace mompoly

#endif  // MOMPOLY_EXACT_LINALG_HPP_
