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

#ifndef MOMPOLY_TRANSFER_HPP_
#define MOMPOLY_TRANSFER_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mompoly/types.hpp"

namespace mompoly {

struct TransferOptions {
  // Live (row signature, accumulator) cells per layer before BudgetExceeded.
  std::uint64_t state_budget = 10'000'000;
  // Worker threads for multi-N requests; results never depend on it.
  unsigned workers = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct TransferStats {
  std::uint64_t peak_states = 0;    // largest layer, in dense cells
  std::uint64_t accumulator_keys = 0;  // largest number of distinct accumulators
};

// Exact number of members of UP/SP (or the strict variants) at dilation N,
// by row-to-row transfer. Layer j maps (row-j signature, running values of
// the still-open sum constraints) to the number of partial patterns on rows
// 1..j. Interlacing transitions are box sums, computed from prefix sums of
// the previous layer.
BigInt count_dp(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
                const TransferOptions& options = {}, TransferStats* stats = nullptr);

// Counts for N = 0..n_max of one family.
class CountTable {
 public:
  CountTable(FamilySpec spec, Strictness strictness) : spec_(spec), strictness_(strictness) {}

  const FamilySpec& spec() const { return spec_; }
  Strictness strictness() const { return strictness_; }
  const std::map<std::int64_t, BigInt>& entries() const { return entries_; }

  void set(std::int64_t n, BigInt value) { entries_[n] = std::move(value); }
  bool contains(std::int64_t n) const { return entries_.count(n) != 0; }
  // InputError when N is absent.
  const BigInt& at(std::int64_t n) const;
  std::size_t size() const { return entries_.size(); }

 private:
  FamilySpec spec_;
  Strictness strictness_;
  std::map<std::int64_t, BigInt> entries_;
};

// count_dp for each listed N, spread over options.workers threads. Output is
// in input order. A failure for some N is rethrown with that N in the message
// (the smallest failing position wins, so errors are deterministic too).
std::vector<BigInt> count_dp_many(const FamilySpec& spec, std::span<const std::int64_t> dilations,
                                  Strictness strictness, const TransferOptions& options = {});

CountTable count_series(const FamilySpec& spec, std::int64_t n_max, Strictness strictness,
                        const TransferOptions& options = {});

}  // namespace mompoly

#endif  // MOMPOLY_TRANSFER_HPP_
