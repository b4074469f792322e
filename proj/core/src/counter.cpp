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

#include "mompoly/counter.hpp"

#include "mompoly/patterns.hpp"

namespace mompoly {

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::naive:
      return "naive";
    case Engine::dp:
      return "dp";
    case Engine::both:
      return "both";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "naive") return Engine::naive;
  if (text == "dp") return Engine::dp;
  if (text == "both") return Engine::both;
  throw InputError("unknown engine '" + std::string(text) + "'");
}

Counter::Counter(CountOptions options, CountCache* cache) : options_(options), cache_(cache) {}

std::optional<BigInt> Counter::known(const FamilySpec& spec, std::int64_t n, Strictness s) {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(Key{spec.group(), spec.k(), spec.q(), n, is_strict(s)});
    if (it != memo_.end()) return it->second;
  }
  // A cross-check run must actually run both engines.
  if (cache_ != nullptr && options_.engine != Engine::both) {
    if (auto v = cache_->lookup(spec, n, s)) {
      std::lock_guard lock(mutex_);
      memo_.emplace(Key{spec.group(), spec.k(), spec.q(), n, is_strict(s)}, *v);
      return v;
    }
  }
  return std::nullopt;
}

void Counter::remember(const FamilySpec& spec, std::int64_t n, Strictness s, const BigInt& v) {
  std::lock_guard lock(mutex_);
  memo_.emplace(Key{spec.group(), spec.k(), spec.q(), n, is_strict(s)}, v);
  if (cache_ != nullptr) cache_->store(spec, n, s, v);
}

BigInt Counter::count(const FamilySpec& spec, std::int64_t dilation, Strictness strictness) {
  const std::int64_t ns[] = {dilation};
  return table(spec, ns, strictness).at(dilation);
}

CountTable Counter::table(const FamilySpec& spec, std::span<const std::int64_t> dilations,
                          Strictness strictness) {
  CountTable out(spec, strictness);
  std::vector<std::int64_t> missing;
  for (auto n : dilations) {
    if (n < 0) throw DomainError("dilation must be non-negative");
    if (out.contains(n)) continue;
    if (auto v = known(spec, n, strictness)) {
      out.set(n, *v);
    } else {
      out.set(n, -1);
      missing.push_back(n);
    }
  }
  if (missing.empty()) return out;

  std::vector<BigInt> dp;
  if (options_.engine != Engine::naive) {
    TransferOptions t;
    t.state_budget = options_.state_budget;
    t.workers = options_.workers;
    t.deadline = options_.deadline;
    dp = count_dp_many(spec, missing, strictness, t);
  }
  for (std::size_t i = 0; i < missing.size(); ++i) {
    const std::int64_t n = missing[i];
    BigInt value;
    if (options_.engine == Engine::dp) {
      value = dp[i];
    } else {
      EnumerateOptions e;
      e.node_budget = options_.node_budget;
      e.deadline = options_.deadline;
      value = count_naive(spec, n, strictness, e);
      if (options_.engine == Engine::both && value != dp[i]) {
        throw EngineMismatch("engines disagree for " + spec.label() + " N=" + std::to_string(n) +
                             (is_strict(strictness) ? " strict" : " lax") +
                             ": naive=" + value.get_str() + " dp=" + dp[i].get_str());
      }
    }
    remember(spec, n, strictness, value);
    out.set(n, value);
  }
  return out;
}

CountTable Counter::series(const FamilySpec& spec, std::int64_t n_max, Strictness strictness) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 0; n <= n_max; ++n) ns.push_back(n);
  return table(spec, ns, strictness);
}

}  // namespace mompoly
