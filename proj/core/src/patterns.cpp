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

#include "mompoly/patterns.hpp"

#include <algorithm>
#include <limits>

#include "mompoly/sum_constraints.hpp"

namespace mompoly {

namespace {

Interval clamp(std::int64_t lo_bound, std::int64_t hi_bound, std::int64_t dilation,
               Strictness strictness) {
  if (is_strict(strictness)) {
    return {std::max<std::int64_t>(lo_bound + 1, 1),
            std::min<std::int64_t>(hi_bound - 1, dilation - 1)};
  }
  return {std::max<std::int64_t>(lo_bound, 0), std::min<std::int64_t>(hi_bound, dilation)};
}

Interval entry_range(std::int64_t dilation, Strictness strictness) {
  return clamp(0, dilation, dilation, strictness);
}

}  // namespace

std::vector<Interval> upper_box(std::span<const std::int64_t> lower, int upper_len,
                                std::int64_t dilation, Strictness strictness) {
  const std::size_t m = lower.size();
  const auto len = static_cast<std::size_t>(upper_len);
  if (len != m && len != m + 1) throw ShapeError("upper row must have len(lower) or len(lower)+1 entries");
  std::vector<Interval> box(len);
  for (std::size_t n = 0; n < len; ++n) {
    const std::int64_t lo = n < m ? lower[n] : 0;
    const std::int64_t hi = n >= 1 ? lower[n - 1] : dilation;
    box[n] = clamp(lo, hi, dilation, strictness);
  }
  return box;
}

std::vector<Interval> lower_box(std::span<const std::int64_t> upper, int lower_len,
                                std::int64_t dilation, Strictness strictness) {
  const std::size_t len_upper = upper.size();
  const auto len = static_cast<std::size_t>(lower_len);
  if (len != len_upper && len + 1 != len_upper) {
    throw ShapeError("lower row must have len(upper) or len(upper)-1 entries");
  }
  std::vector<Interval> box(len);
  for (std::size_t n = 0; n < len; ++n) {
    const std::int64_t lo = n + 1 < len_upper ? upper[n + 1] : 0;
    box[n] = clamp(lo, upper[n], dilation, strictness);
  }
  return box;
}

std::optional<std::string> membership_violation(const Pattern& p, Strictness strictness) {
  const FamilySpec& spec = p.spec();
  const std::int64_t N = p.dilation();
  const Interval range = entry_range(N, strictness);
  for (int j = 1; j <= spec.row_count(); ++j) {
    for (std::int64_t v : p.row(j).entries()) {
      if (!range.contains(v)) {
        return "row " + std::to_string(j) + " has entry " + std::to_string(v) +
               " outside [" + std::to_string(range.lo) + "," + std::to_string(range.hi) + "]";
      }
    }
  }
  const int mid = spec.middle_row();
  for (int j = 1; j < spec.row_count(); ++j) {
    const bool ok = j < mid ? interlaces(p.row(j), p.row(j + 1), strictness)
                            : interlaces(p.row(j + 1), p.row(j), strictness);
    if (!ok) {
      return "rows " + std::to_string(j) + " and " + std::to_string(j + 1) +
             " do not interlace";
    }
  }
  const auto sums = p.row_sums_with_phantoms();
  const auto constraints = SumConstraints::for_spec(spec);
  for (const auto& form : constraints.forms()) {
    if (!form.holds(sums, N)) {
      return "sum constraint '" + form.label + "' fails: " +
             std::to_string(form.evaluate(sums)) +
             " != " + std::to_string(form.rhs_per_dilation * N);
    }
  }
  return std::nullopt;
}

bool is_member(const Pattern& p, Strictness strictness) {
  return !membership_violation(p, strictness).has_value();
}

namespace {

// Row-by-row, cell-by-cell backtracking with interval pruning on the sum
// constraints.
class Backtracker {
 public:
  using Rows = std::vector<std::vector<std::int64_t>>;

  Backtracker(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
              const EnumerateOptions& options)
      : spec_(spec),
        N_(dilation),
        strictness_(strictness),
        options_(options),
        range_(entry_range(dilation, strictness)),
        forms_(SumConstraints::for_spec(spec).forms()) {
    const int R = spec.row_count();
    rows_.resize(static_cast<std::size_t>(R));
    for (int j = 1; j <= R; ++j) rows_[static_cast<std::size_t>(j - 1)].resize(
        static_cast<std::size_t>(spec.row_length(j)));
    // suffix_[f][j] = range of sum_{r > j} c_r |p^(r)|
    for (const auto& f : forms_) {
      std::vector<Interval> suffix(static_cast<std::size_t>(R + 1), Interval{0, 0});
      for (int j = R - 1; j >= 0; --j) {
        const int r = j + 1;
        const std::int64_t c = f.row_coeff[static_cast<std::size_t>(r)];
        const std::int64_t len = spec.row_length(r);
        std::int64_t a = c * len * range_.lo, b = c * len * range_.hi;
        if (range_.empty()) a = b = 0;
        if (a > b) std::swap(a, b);
        suffix[static_cast<std::size_t>(j)] = {suffix[static_cast<std::size_t>(j + 1)].lo + a,
                                               suffix[static_cast<std::size_t>(j + 1)].hi + b};
      }
      suffix_.push_back(std::move(suffix));
      acc_.push_back(0);
    }
  }

  template <class Visitor>
  void run(Visitor&& visit) {
    if (range_.empty()) return;
    row(1, visit);
  }

 private:
  void tick() {
    if (++nodes_ > options_.node_budget) {
      throw BudgetExceeded("enumeration node budget exceeded for " + spec_.label() +
                               " at N=" + std::to_string(N_),
                           nodes_, options_.node_budget);
    }
    if (options_.deadline && (nodes_ & 0xFFFF) == 0 &&
        std::chrono::steady_clock::now() > *options_.deadline) {
      throw BudgetExceeded("enumeration wall-clock budget exceeded for " + spec_.label(),
                           nodes_, options_.node_budget);
    }
  }

  template <class Visitor>
  void row(int j, Visitor& visit) {
    if (j > spec_.row_count()) {
      visit(rows_);
      return;
    }
    const auto len = spec_.row_length(j);
    if (j == 1) {
      box_[j] = std::vector<Interval>{range_};
    } else {
      const auto& prev = rows_[static_cast<std::size_t>(j - 2)];
      box_[j] = j <= spec_.middle_row() ? upper_box(prev, len, N_, strictness_)
                                        : lower_box(prev, len, N_, strictness_);
    }
    const auto& box = box_[j];
    for (const auto& iv : box) {
      if (iv.empty()) return;
    }
    entry(j, 0, 0, visit);
  }

  // Can the remaining constraints still be met if row j's sum ends up in
  // [lo, hi]?
  bool feasible(int j, std::int64_t lo, std::int64_t hi) const {
    for (std::size_t f = 0; f < forms_.size(); ++f) {
      const auto& form = forms_[f];
      const std::int64_t c = form.row_coeff[static_cast<std::size_t>(j)];
      std::int64_t a = c * lo, b = c * hi;
      if (a > b) std::swap(a, b);
      const Interval& rest = suffix_[f][static_cast<std::size_t>(j)];
      const std::int64_t target = form.rhs_per_dilation * N_;
      if (acc_[f] + a + rest.lo > target || acc_[f] + b + rest.hi < target) return false;
    }
    return true;
  }

  template <class Visitor>
  void entry(int j, std::size_t n, std::int64_t partial, Visitor& visit) {
    auto& cur = rows_[static_cast<std::size_t>(j - 1)];
    const auto& box = box_[j];
    const std::size_t len = cur.size();
    if (n == len) {
      for (std::size_t f = 0; f < forms_.size(); ++f) {
        acc_[f] += forms_[f].row_coeff[static_cast<std::size_t>(j)] * partial;
      }
      row(j + 1, visit);
      for (std::size_t f = 0; f < forms_.size(); ++f) {
        acc_[f] -= forms_[f].row_coeff[static_cast<std::size_t>(j)] * partial;
      }
      return;
    }
    std::int64_t hi = box[n].hi;
    if (n > 0) hi = std::min(hi, cur[n - 1]);
    for (std::int64_t v = box[n].lo; v <= hi; ++v) {
      tick();
      cur[n] = v;
      // Remaining entries n+1.. lie in [box.lo, min(box.hi, v)].
      std::int64_t rest_lo = 0, rest_hi = 0;
      for (std::size_t m = n + 1; m < len; ++m) {
        rest_lo += box[m].lo;
        rest_hi += std::min(box[m].hi, v);
      }
      if (!feasible(j, partial + v + rest_lo, partial + v + rest_hi)) continue;
      entry(j, n + 1, partial + v, visit);
    }
  }

  const FamilySpec& spec_;
  std::int64_t N_;
  Strictness strictness_;
  EnumerateOptions options_;
  Interval range_;
  std::vector<SumConstraint> forms_;
  std::vector<std::vector<Interval>> suffix_;
  std::vector<std::int64_t> acc_;
  Rows rows_;
  std::vector<std::vector<Interval>> box_ = std::vector<std::vector<Interval>>(
      static_cast<std::size_t>(spec_.row_count() + 2));
  std::uint64_t nodes_ = 0;
};

}  // namespace

void enumerate(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
               const std::function<void(const Pattern&)>& sink,
               const EnumerateOptions& options) {
  if (dilation < 0) throw DomainError("dilation must be non-negative");
  Backtracker bt(spec, dilation, strictness, options);
  bt.run([&](const Backtracker::Rows& rows) { sink(Pattern::from_rows(spec, dilation, rows)); });
}

std::vector<Pattern> enumerate_all(const FamilySpec& spec, std::int64_t dilation,
                                   Strictness strictness, const EnumerateOptions& options) {
  std::vector<Pattern> out;
  enumerate(spec, dilation, strictness, [&](const Pattern& p) { out.push_back(p); }, options);
  return out;
}

BigInt count_naive(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
                   const EnumerateOptions& options) {
  if (dilation < 0) throw DomainError("dilation must be non-negative");
  Backtracker bt(spec, dilation, strictness, options);
  std::uint64_t small = 0;
  BigInt total = 0;
  bt.run([&](const Backtracker::Rows&) {
    if (++small == std::numeric_limits<std::uint32_t>::max()) {
      total += static_cast<unsigned long>(small);
      small = 0;
    }
  });
  total += static_cast<unsigned long>(small);
  return total;
}

}  // namespace mompoly
