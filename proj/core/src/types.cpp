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

#include "mompoly/types.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace mompoly {

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigRat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return BigRat(BigInt(std::string(text)));
    }
    return make_rational(BigInt(std::string(text.substr(0, slash))),
                         BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  } catch (const DomainError&) {
    throw InputError("rational '" + std::string(text) + "' has a zero denominator");
  }
}

bool is_integer(const BigRat& r) { return r.get_den() == 1; }

std::string_view to_string(Group g) { return g == Group::U ? "u" : "sp"; }

Group parse_group(std::string_view text) {
  if (text == "u" || text == "U") return Group::U;
  if (text == "sp" || text == "SP") return Group::SP;
  throw InputError("unknown group '" + std::string(text) + "' (expected u or sp)");
}

FamilySpec::FamilySpec(Group group, int k, int q) : group_(group), k_(k), q_(q) {
  if (k < 1 || q < 1) throw DomainError("k and q must be positive");
}

int FamilySpec::row_count() const {
  return group_ == Group::U ? 2 * kq() - 1 : 4 * kq() - 1;
}

int FamilySpec::row_length(int j) const {
  if (j < 1 || j > row_count()) {
    throw IndexError("row " + std::to_string(j) + " outside 1.." +
                     std::to_string(row_count()));
  }
  if (group_ == Group::U) return kq() - std::abs(kq() - j);
  return kq() - std::abs(2 * kq() - j) / 2;
}

int FamilySpec::middle_row() const { return group_ == Group::U ? kq() : 2 * kq(); }

int FamilySpec::total_cells() const {
  return group_ == Group::U ? kq() * kq() : kq() * (2 * kq() + 1);
}

int FamilySpec::dimension() const { return total_cells() - constraint_count(); }

int FamilySpec::constraint_count() const { return group_ == Group::U ? k_ - 1 : k_; }

int FamilySpec::bijection_shift() const {
  return group_ == Group::U ? 2 * kq() : 2 * kq() + 1;
}

int FamilySpec::vanishing_root_count() const {
  return group_ == Group::U ? 2 * kq() - 1 : 2 * kq();
}

BigRat FamilySpec::symmetry_center() const {
  return group_ == Group::U ? BigRat(kq()) : make_rational(2 * kq() + 1, 2);
}

std::string FamilySpec::label() const {
  std::ostringstream os;
  os << (group_ == Group::U ? "U" : "SP") << '(' << k_ << ';' << q_ << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FamilySpec& spec) {
  return os << spec.label();
}

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.i << ',' << c.j << ')';
}

std::vector<Cell> all_cells(const FamilySpec& spec) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(spec.total_cells()));
  for (int j = 1; j <= spec.row_count(); ++j) {
    for (int i = 1; i <= spec.row_length(j); ++i) out.push_back({i, j});
  }
  return out;
}

std::vector<Cell> fixed_index_set(const FamilySpec& spec) {
  std::vector<Cell> out;
  const int k = spec.k(), q = spec.q(), kq = spec.kq();
  if (spec.group() == Group::U) {
    for (int l = 1; l <= k - 1; ++l) out.push_back({1, 2 * q * l});
  } else {
    out.push_back({1, 4 * kq - 1});
    const int half = k / 2;
    for (int m = 1; m <= half; ++m) {
      const int n = 4 * m * q;
      out.push_back({n / 2, n});
    }
    for (int m = half + 1; m <= k - 1; ++m) {
      const int n = 4 * m * q;
      out.push_back({(4 * kq - n) / 2, n});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> free_index_set(const FamilySpec& spec) {
  const auto fixed = fixed_index_set(spec);
  std::vector<Cell> out;
  for (const Cell& c : all_cells(spec)) {
    if (!std::binary_search(fixed.begin(), fixed.end(), c)) out.push_back(c);
  }
  return out;
}

Pattern::Pattern(FamilySpec spec, std::int64_t dilation, std::vector<Signature> rows)
    : spec_(spec), dilation_(dilation), rows_(std::move(rows)) {
  if (dilation_ < 0) throw DomainError("dilation must be non-negative");
  if (static_cast<int>(rows_.size()) != spec_.row_count()) {
    throw ShapeError(spec_.label() + " needs " + std::to_string(spec_.row_count()) +
                     " rows, got " + std::to_string(rows_.size()));
  }
  for (int j = 1; j <= spec_.row_count(); ++j) {
    const Signature& r = rows_[static_cast<std::size_t>(j - 1)];
    if (static_cast<int>(r.size()) != spec_.row_length(j)) {
      throw ShapeError("row " + std::to_string(j) + " of " + spec_.label() +
                       " must have " + std::to_string(spec_.row_length(j)) +
                       " entries");
    }
    if (!r.empty() && r[0] > dilation_) {
      throw DomainError("pattern entry exceeds dilation " + std::to_string(dilation_));
    }
  }
}

Pattern Pattern::from_rows(FamilySpec spec, std::int64_t dilation,
                           const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<Signature> sigs;
  sigs.reserve(rows.size());
  for (const auto& r : rows) sigs.emplace_back(r);
  return Pattern(spec, dilation, std::move(sigs));
}

const Signature& Pattern::row(int j) const {
  if (j < 1 || j > spec_.row_count()) throw IndexError("pattern row out of range");
  return rows_[static_cast<std::size_t>(j - 1)];
}

std::vector<std::int64_t> Pattern::row_sums_with_phantoms() const {
  std::vector<std::int64_t> sums(rows_.size() + 2, 0);
  for (std::size_t j = 0; j < rows_.size(); ++j) sums[j + 1] = rows_[j].sum();
  return sums;
}

std::string Pattern::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (j) os << ',';
    os << '[';
    for (std::size_t n = 0; n < rows_[j].size(); ++n) {
      if (n) os << ',';
      os << rows_[j][n];
    }
    os << ']';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Pattern& p) {
  return os << p.spec().label() << "@N=" << p.dilation() << ' ' << p.to_string();
}

}  // namespace mompoly
