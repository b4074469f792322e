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

#include "mompoly/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace mompoly {

RowEchelon row_echelon(const RatMatrix& m, std::size_t columns) {
  RatMatrix a;
  a.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() > columns) throw ShapeError("matrix row longer than the column count");
    RatVector r(columns);
    std::copy(row.begin(), row.end(), r.begin());
    a.push_back(std::move(r));
  }
  // Full pivoting: each step takes the first non-zero entry of the remaining
  // block, scanning columns left to right; the permutation is undone below.
  std::vector<std::size_t> perm(columns);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
    std::size_t pr = a.size(), pc = columns;
    for (std::size_t cc = c; cc < columns && pr == a.size(); ++cc) {
      for (std::size_t rr = r; rr < a.size(); ++rr) {
        if (a[rr][perm[cc]] != 0) {
          pr = rr;
          pc = cc;
          break;
        }
      }
    }
    if (pr == a.size()) break;
    std::swap(a[r], a[pr]);
    std::swap(perm[c], perm[pc]);
    const std::size_t col = perm[c];
    const BigRat inv = 1 / a[r][col];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t rr = 0; rr < a.size(); ++rr) {
      if (rr == r || a[rr][col] == 0) continue;
      const BigRat f = a[rr][col];
      for (std::size_t cc = 0; cc < columns; ++cc) a[rr][cc] -= f * a[r][cc];
    }
    ++r;
  }
  RowEchelon out;
  a.resize(r);
  out.reduced = std::move(a);
  for (std::size_t i = 0; i < r; ++i) out.pivot_columns.push_back(perm[i]);
  return out;
}

std::size_t rank(const RatMatrix& m, std::size_t columns) {
  return row_echelon(m, columns).rank();
}

std::vector<RatVector> nullspace(const RatMatrix& m, std::size_t columns) {
  const auto e = row_echelon(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(columns);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivot_columns[i]] = -e.reduced[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Solution solve(const RatMatrix& a, const RatVector& b) {
  if (a.size() != b.size()) throw ShapeError("right-hand side length differs from row count");
  std::size_t columns = 0;
  for (const auto& row : a) columns = std::max(columns, row.size());
  RatMatrix aug;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVector r(columns + 1);
    std::copy(a[i].begin(), a[i].end(), r.begin());
    r[columns] = b[i];
    aug.push_back(std::move(r));
  }
  const auto e = row_echelon(aug, columns + 1);
  Solution s{SolveStatus::unique, RatVector(columns)};
  for (std::size_t i = 0; i < e.rank(); ++i) {
    const std::size_t c = e.pivot_columns[i];
    if (c == columns) return {SolveStatus::inconsistent, {}};
    s.x[c] = e.reduced[i][columns];
  }
  if (e.rank() < columns) s.status = SolveStatus::underdetermined;
  return s;
}

}  // namespace mompoly
