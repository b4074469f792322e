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

#ifndef MOMPOLY_PATTERNS_HPP_
#define MOMPOLY_PATTERNS_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mompoly/types.hpp"

namespace mompoly {

// Closed integer interval; empty when lo > hi.
struct Interval {
  std::int64_t lo;
  std::int64_t hi;

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  std::int64_t width() const { return empty() ? 0 : hi - lo + 1; }
};

// Admissible values for each entry of the longer/upper row of an interlacing
// pair, given the lower row. `upper_len` is lower.size() or lower.size()+1.
// Entries are also confined to [0, N] (lax) or [1, N-1] (strict).
std::vector<Interval> upper_box(std::span<const std::int64_t> lower, int upper_len,
                                std::int64_t dilation, Strictness strictness);
// Admissible values for each entry of the lower row, given the upper row.
// `lower_len` is upper.size() or upper.size()-1.
std::vector<Interval> lower_box(std::span<const std::int64_t> upper, int lower_len,
                                std::int64_t dilation, Strictness strictness);

// True iff lower interlaces upper (lower ≺ upper). Lengths must be equal or
// differ by one (upper longer); otherwise ShapeError.
template <class T>
bool interlaces(const BasicSignature<T>& lower, const BasicSignature<T>& upper,
                Strictness strictness) {
  const std::size_t m = lower.size();
  if (upper.size() != m && upper.size() != m + 1) {
    throw ShapeError("interlacing needs len(upper) in {len(lower), len(lower)+1}");
  }
  const bool strict = is_strict(strictness);
  auto ge = [strict](const T& a, const T& b) { return strict ? a > b : a >= b; };
  for (std::size_t n = 0; n < m; ++n) {
    if (!ge(upper[n], lower[n])) return false;
    if (n + 1 < upper.size() && !ge(lower[n], upper[n + 1])) return false;
  }
  return true;
}

// Membership in UP/SP (lax) or UP^≠/SP^≠ (strict) at the pattern's own
// dilation: entry bounds, both half-pattern interlacing chains, sum
// constraints.
bool is_member(const Pattern& p, Strictness strictness);

// Why a pattern failed membership, or nullopt if it is a member.
std::optional<std::string> membership_violation(const Pattern& p, Strictness strictness);

struct EnumerateOptions {
  // Backtracking nodes (partial cell assignments) before BudgetExceeded.
  std::uint64_t node_budget = 200'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Calls `sink` for every member, each exactly once, in lexicographic
// row-major order (rows bottom-up, largest entry first, values ascending).
void enumerate(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
               const std::function<void(const Pattern&)>& sink,
               const EnumerateOptions& options = {});

std::vector<Pattern> enumerate_all(const FamilySpec& spec, std::int64_t dilation,
                                   Strictness strictness,
                                   const EnumerateOptions& options = {});

// Number of members, by exhaustive backtracking. This is the reference
// oracle for the transfer engine.
BigInt count_naive(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
                   const EnumerateOptions& options = {});

}  // namespace mompoly

#endif  // MOMPOLY_PATTERNS_HPP_
