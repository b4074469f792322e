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

#ifndef MOMPOLY_COUNTER_HPP_
#define MOMPOLY_COUNTER_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string_view>
#include <tuple>

#include "mompoly/count_cache.hpp"
#include "mompoly/transfer.hpp"
#include "mompoly/types.hpp"

namespace mompoly {

enum class Engine { naive, dp, both };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view text);

struct CountOptions {
  Engine engine = Engine::dp;
  std::uint64_t node_budget = 200'000'000;
  std::uint64_t state_budget = 10'000'000;
  unsigned workers = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Front door for every count the library needs. Results are memoized in
// process and, when a cache is attached, persisted across runs.
class Counter {
 public:
  explicit Counter(CountOptions options = {}, CountCache* cache = nullptr);

  const CountOptions& options() const { return options_; }

  BigInt count(const FamilySpec& spec, std::int64_t dilation, Strictness strictness);
  CountTable table(const FamilySpec& spec, std::span<const std::int64_t> dilations,
                   Strictness strictness);
  CountTable series(const FamilySpec& spec, std::int64_t n_max, Strictness strictness);

 private:
  using Key = std::tuple<Group, int, int, std::int64_t, bool>;

  std::optional<BigInt> known(const FamilySpec& spec, std::int64_t n, Strictness s);
  void remember(const FamilySpec& spec, std::int64_t n, Strictness s, const BigInt& v);

  CountOptions options_;
  CountCache* cache_;
  std::mutex mutex_;
  std::map<Key, BigInt> memo_;
};

}  // namespace mompoly

#endif  // MOMPOLY_COUNTER_HPP_
