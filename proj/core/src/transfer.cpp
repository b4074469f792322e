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

#include "mompoly/transfer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <thread>

#include "mompoly/patterns.hpp"
#include "mompoly/sum_constraints.hpp"

namespace mompoly {

const BigInt& CountTable::at(std::int64_t n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) {
    throw InputError("count table for " + spec_.label() + " has no entry for N=" +
                     std::to_string(n));
  }
  return it->second;
}

namespace {

struct RowSig {
  std::vector<std::int64_t> entries;
  std::size_t index;
  std::int64_t sum;
};

class Transfer {
 public:
  using Key = std::vector<std::int64_t>;
  using Cells = std::vector<BigInt>;

  Transfer(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
           const TransferOptions& options, TransferStats* stats)
      : spec_(spec),
        N_(dilation),
        strictness_(strictness),
        options_(options),
        stats_(stats),
        forms_(SumConstraints::for_spec(spec).forms()),
        base_(static_cast<std::size_t>(dilation + 1)) {
    range_ = is_strict(strictness) ? Interval{1, dilation - 1} : Interval{0, dilation};
    const int R = spec.row_count();
    int longest = 0;
    for (int j = 1; j <= R; ++j) longest = std::max(longest, spec.row_length(j));
    pow_.assign(static_cast<std::size_t>(longest + 1), 1);
    for (std::size_t n = 1; n < pow_.size(); ++n) pow_[n] = pow_[n - 1] * base_;
    for (const auto& f : forms_) {
      std::vector<Interval> suffix(static_cast<std::size_t>(R + 1), Interval{0, 0});
      for (int j = R - 1; j >= 0; --j) {
        const std::int64_t c = f.row_coeff[static_cast<std::size_t>(j + 1)];
        const std::int64_t len = spec.row_length(j + 1);
        std::int64_t a = c * len * range_.lo, b = c * len * range_.hi;
        if (a > b) std::swap(a, b);
        suffix[static_cast<std::size_t>(j)] = {suffix[static_cast<std::size_t>(j + 1)].lo + a,
                                               suffix[static_cast<std::size_t>(j + 1)].hi + b};
      }
      suffix_.push_back(std::move(suffix));
    }
  }

  BigInt run() {
    if (range_.empty()) return 0;
    const int R = spec_.row_count();
    // Row 1 has a single entry; seed it from an empty virtual row 0.
    std::map<Key, Cells> layer;
    {
      std::uint64_t states = 0;
      const std::vector<std::int64_t> zero(forms_.size(), 0);
      for (std::int64_t x = range_.lo; x <= range_.hi; ++x) {
        Cells* dest = resolve(layer, zero, 1, x, states);
        if (dest != nullptr) (*dest)[static_cast<std::size_t>(x)] += 1;
      }
      record(layer, states);
    }
    for (int j = 1; j < R; ++j) layer = step(layer, j);
    BigInt total = 0;
    for (const auto& [key, cells] : layer) {
      for (const auto& v : cells) total += v;
    }
    return total;
  }

 private:
  bool open_after(std::size_t f, int row) const {
    return forms_[f].first_row <= row && row < forms_[f].last_row;
  }

  std::vector<std::int64_t> expand(const Key& key, int row) const {
    std::vector<std::int64_t> acc(forms_.size(), 0);
    std::size_t n = 0;
    for (std::size_t f = 0; f < forms_.size(); ++f) {
      if (open_after(f, row)) acc[f] = key[n++];
    }
    return acc;
  }

  // Destination cell array for a partial pattern whose accumulators before
  // `row` are `acc` and whose row `row` sums to `s`; nullptr if some
  // constraint is already violated or can no longer be met.
  Cells* resolve(std::map<Key, Cells>& layer, const std::vector<std::int64_t>& acc, int row,
                 std::int64_t s, std::uint64_t& states) {
    Key key;
    for (std::size_t f = 0; f < forms_.size(); ++f) {
      const auto& form = forms_[f];
      if (row < form.first_row) continue;
      const std::int64_t value = acc[f] + form.row_coeff[static_cast<std::size_t>(row)] * s;
      const std::int64_t target = form.rhs_per_dilation * N_;
      if (row >= form.last_row) {
        if (row == form.last_row && value != target) return nullptr;
        continue;
      }
      const Interval& rest = suffix_[f][static_cast<std::size_t>(row)];
      if (value + rest.lo > target || value + rest.hi < target) return nullptr;
      key.push_back(value);
    }
    auto it = layer.find(key);
    if (it != layer.end()) return &it->second;
    const std::size_t size = pow_[static_cast<std::size_t>(spec_.row_length(row))];
    states += size;
    if (states > options_.state_budget) {
      throw BudgetExceeded("transfer state count " + std::to_string(states) +
                               " exceeds budget " + std::to_string(options_.state_budget) +
                               " at row " + std::to_string(row) + " of " + spec_.label() +
                               " N=" + std::to_string(N_),
                           states, options_.state_budget);
    }
    return &layer.emplace(std::move(key), Cells(size)).first->second;
  }

  void record(const std::map<Key, Cells>& layer, std::uint64_t states) {
    if (stats_ == nullptr) return;
    stats_->peak_states = std::max(stats_->peak_states, states);
    stats_->accumulator_keys =
        std::max<std::uint64_t>(stats_->accumulator_keys, layer.size());
  }

  const std::vector<RowSig>& signatures(int len) {
    auto it = sig_cache_.find(len);
    if (it != sig_cache_.end()) return it->second;
    std::vector<RowSig> out;
    std::vector<std::int64_t> cur(static_cast<std::size_t>(len));
    auto rec = [&](auto&& self, std::size_t n, std::int64_t cap) -> void {
      if (n == cur.size()) {
        RowSig sig{cur, 0, 0};
        for (std::size_t m = 0; m < cur.size(); ++m) {
          sig.index += static_cast<std::size_t>(cur[m]) * pow_[m];
          sig.sum += cur[m];
        }
        out.push_back(std::move(sig));
        return;
      }
      for (std::int64_t v = range_.lo; v <= cap; ++v) {
        cur[n] = v;
        self(self, n + 1, v);
      }
    };
    rec(rec, 0, range_.hi);
    return sig_cache_.emplace(len, std::move(out)).first->second;
  }

  void prefix_sums(Cells& a, int len) const {
    for (int d = 0; d < len; ++d) {
      const std::size_t stride = pow_[static_cast<std::size_t>(d)];
      for (std::size_t idx = 0; idx < a.size(); ++idx) {
        if ((idx / stride) % base_ != 0) a[idx] += a[idx - stride];
      }
    }
  }

  BigInt box_sum(const Cells& prefix, const std::vector<Interval>& box) const {
    BigInt total = 0;
    for (const auto& iv : box) {
      if (iv.empty()) return total;
    }
    const unsigned corners = 1u << box.size();
    for (unsigned mask = 0; mask < corners; ++mask) {
      std::size_t idx = 0;
      bool inside = true;
      for (std::size_t n = 0; n < box.size(); ++n) {
        const std::int64_t c = (mask >> n) & 1u ? box[n].lo - 1 : box[n].hi;
        if (c < 0) {
          inside = false;
          break;
        }
        idx += static_cast<std::size_t>(c) * pow_[n];
      }
      if (!inside) continue;
      if (std::popcount(mask) % 2 == 0) {
        total += prefix[idx];
      } else {
        total -= prefix[idx];
      }
    }
    return total;
  }

  std::map<Key, Cells> step(std::map<Key, Cells>& old, int j) {
    const int row = j + 1;
    const int old_len = spec_.row_length(j);
    const int new_len = spec_.row_length(row);
    const bool growing = row <= spec_.middle_row();
    const auto& sigs = signatures(new_len);
    const std::int64_t max_sum = static_cast<std::int64_t>(new_len) * range_.hi;

    std::map<Key, Cells> next;
    std::uint64_t states = 0;
    for (auto it = old.begin(); it != old.end();) {
      check_deadline();
      Cells prefix = std::move(it->second);
      const auto acc = expand(it->first, j);
      it = old.erase(it);
      prefix_sums(prefix, old_len);

      // Destination per row sum: resolved lazily, nullptr for pruned sums.
      std::vector<Cells*> dest(static_cast<std::size_t>(max_sum + 1), nullptr);
      std::vector<char> resolved(dest.size(), 0);
      for (const auto& y : sigs) {
        const auto s = static_cast<std::size_t>(y.sum);
        if (!resolved[s]) {
          dest[s] = resolve(next, acc, row, y.sum, states);
          resolved[s] = 1;
        }
        if (dest[s] == nullptr) continue;
        const auto box = growing ? lower_box(y.entries, old_len, N_, strictness_)
                                 : upper_box(y.entries, old_len, N_, strictness_);
        BigInt v = box_sum(prefix, box);
        if (v != 0) (*dest[s])[y.index] += v;
      }
    }
    record(next, states);
    return next;
  }

  void check_deadline() const {
    if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) {
      throw BudgetExceeded("transfer wall-clock budget exceeded for " + spec_.label() +
                               " N=" + std::to_string(N_),
                           0, 0);
    }
  }

  const FamilySpec& spec_;
  std::int64_t N_;
  Strictness strictness_;
  TransferOptions options_;
  TransferStats* stats_;
  std::vector<SumConstraint> forms_;
  std::size_t base_;
  Interval range_{0, 0};
  std::vector<std::size_t> pow_;
  std::vector<std::vector<Interval>> suffix_;
  std::map<int, std::vector<RowSig>> sig_cache_;
};

}  // namespace

BigInt count_dp(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
                const TransferOptions& options, TransferStats* stats) {
  if (dilation < 0) throw DomainError("dilation must be non-negative");
  Transfer t(spec, dilation, strictness, options, stats);
  return t.run();
}

std::vector<BigInt> count_dp_many(const FamilySpec& spec, std::span<const std::int64_t> dilations,
                                  Strictness strictness, const TransferOptions& options) {
  const std::size_t n = dilations.size();
  std::vector<BigInt> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = count_dp(spec, dilations[i], strictness, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, options.workers), n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(std::string(e.what()) + " (while counting N=" +
                               std::to_string(dilations[i]) + ")",
                           e.used(), e.limit());
    }
  }
  return out;
}

CountTable count_series(const FamilySpec& spec, std::int64_t n_max, Strictness strictness,
                        const TransferOptions& options) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  std::vector<std::int64_t> ns(static_cast<std::size_t>(n_max + 1));
  for (std::int64_t n = 0; n <= n_max; ++n) ns[static_cast<std::size_t>(n)] = n;
  const auto counts = count_dp_many(spec, ns, strictness, options);
  CountTable table(spec, strictness);
  for (std::size_t i = 0; i < ns.size(); ++i) table.set(ns[i], counts[i]);
  return table;
}

}  // namespace mompoly
