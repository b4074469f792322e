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

#ifndef MOMPOLY_SUM_CONSTRAINTS_HPP_
#define MOMPOLY_SUM_CONSTRAINTS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mompoly/types.hpp"

namespace mompoly {

// A linear condition on row sums:
//   sum_r row_coeff[r] * |p^(r)| == rhs_per_dilation * N
// where r runs over 0..row_count()+1 (rows 0 and row_count()+1 are the
// phantom rows with sum 0).
struct SumConstraint {
  std::vector<std::int64_t> row_coeff;
  std::int64_t rhs_per_dilation = 0;
  // First and last real row with a non-zero coefficient.
  int first_row = 0;
  int last_row = 0;
  std::string label;

  std::int64_t evaluate(std::span<const std::int64_t> row_sums) const;
  bool holds(std::span<const std::int64_t> row_sums, std::int64_t dilation) const {
    return evaluate(row_sums) == rhs_per_dilation * dilation;
  }
};

// The k-1 (U) or k (SP) sum constraints of a family.
//
// U: |p^(2ql)| = N (kq - |kq - 2ql|)/2 for l = 1..k-1.
// SP: equalities between sums of second differences of row sums over
// q-blocks, stored telescoped: a block of brackets over j = a..b contributes
// +1 on its two boundary even rows, +2 on interior even rows and -2 on odd
// rows.
class SumConstraints {
 public:
  static SumConstraints for_spec(const FamilySpec& spec);

  const std::vector<SumConstraint>& forms() const { return forms_; }
  std::size_t size() const { return forms_.size(); }
  bool satisfied(std::span<const std::int64_t> row_sums, std::int64_t dilation) const;

 private:
  std::vector<SumConstraint> forms_;
};

// Telescoped coefficient vector (length row_count()+2) of
//   sum_{j=first..last} [ |p^(2j)| - 2|p^(2j-1)| + |p^(2j-2)| ]      (low side)
//   sum_{j=first..last} [ |p^(R-2j)| - 2|p^(R-2j+1)| + |p^(R-2j+2)| ] (high side)
// with R = 4kq. Only meaningful for SP.
enum class BlockSide { low, high };
std::vector<std::int64_t> bracket_block(const FamilySpec& spec, int first, int last,
                                        BlockSide side);

}  // namespace mompoly

#endif  // MOMPOLY_SUM_CONSTRAINTS_HPP_
