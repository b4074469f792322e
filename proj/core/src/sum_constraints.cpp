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

#include "mompoly/sum_constraints.hpp"

#include <cassert>
#include <cstdlib>

namespace mompoly {

std::int64_t SumConstraint::evaluate(std::span<const std::int64_t> row_sums) const {
  if (row_sums.size() != row_coeff.size()) {
    throw ShapeError("row-sum vector length does not match constraint");
  }
  std::int64_t total = 0;
  for (std::size_t r = 0; r < row_coeff.size(); ++r) total += row_coeff[r] * row_sums[r];
  return total;
}

std::vector<std::int64_t> bracket_block(const FamilySpec& spec, int first, int last,
                                        BlockSide side) {
  const int R = spec.row_count() + 1;
  std::vector<std::int64_t> c(static_cast<std::size_t>(R + 1), 0);
  auto at = [&](int row) -> std::int64_t& {
    return c[static_cast<std::size_t>(side == BlockSide::low ? row : R - row)];
  };
  if (first > last) return c;
  at(2 * first - 2) += 1;
  at(2 * last) += 1;
  for (int j = first; j <= last - 1; ++j) at(2 * j) += 2;
  for (int j = first; j <= last; ++j) at(2 * j - 1) -= 2;
  return c;
}

namespace {

void finish(SumConstraint& form) {
  const int rows = static_cast<int>(form.row_coeff.size()) - 2;
  form.first_row = 0;
  form.last_row = 0;
  for (int r = 1; r <= rows; ++r) {
    if (form.row_coeff[static_cast<std::size_t>(r)] == 0) continue;
    if (form.first_row == 0) form.first_row = r;
    form.last_row = r;
  }
}

std::vector<std::int64_t> minus(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  for (std::size_t n = 0; n < a.size(); ++n) a[n] -= b[n];
  return a;
}

}  // namespace

SumConstraints SumConstraints::for_spec(const FamilySpec& spec) {
  SumConstraints out;
  const int k = spec.k(), q = spec.q(), kq = spec.kq();
  const std::size_t width = static_cast<std::size_t>(spec.row_count() + 2);
  if (spec.group() == Group::U) {
    for (int l = 1; l <= k - 1; ++l) {
      const int row = 2 * q * l;
      const int len = kq - std::abs(kq - row);
      // kq - |kq - 2ql| is 2ql or 2(k-l)q, so the right side stays integral.
      assert(len % 2 == 0);
      SumConstraint form;
      form.row_coeff.assign(width, 0);
      form.row_coeff[static_cast<std::size_t>(row)] = 1;
      form.rhs_per_dilation = len / 2;
      form.label = "row " + std::to_string(row) + " sum";
      finish(form);
      out.forms_.push_back(std::move(form));
    }
    return out;
  }
  for (int i = 1; i <= k / 2; ++i) {
    for (BlockSide side : {BlockSide::low, BlockSide::high}) {
      SumConstraint form;
      form.row_coeff = minus(bracket_block(spec, (2 * i - 2) * q + 1, (2 * i - 1) * q, side),
                             bracket_block(spec, (2 * i - 1) * q + 1, 2 * i * q, side));
      form.label = std::string(side == BlockSide::low ? "low" : "high") + " block " +
                   std::to_string(i);
      finish(form);
      out.forms_.push_back(std::move(form));
    }
  }
  if (k % 2 == 1) {
    SumConstraint form;
    form.row_coeff = minus(bracket_block(spec, (k - 1) * q + 1, kq, BlockSide::low),
                           bracket_block(spec, (k - 1) * q + 1, kq, BlockSide::high));
    form.label = "middle block";
    finish(form);
    out.forms_.push_back(std::move(form));
  }
  return out;
}

bool SumConstraints::satisfied(std::span<const std::int64_t> row_sums,
                               std::int64_t dilation) const {
  for (const auto& f : forms_) {
    if (!f.holds(row_sums, dilation)) return false;
  }
  return true;
}

}  // namespace mompoly
