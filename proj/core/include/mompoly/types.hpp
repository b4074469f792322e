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

#ifndef MOMPOLY_TYPES_HPP_
#define MOMPOLY_TYPES_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mompoly/errors.hpp"

namespace mompoly {

using BigInt = mpz_class;
// mpq_class keeps results of arithmetic canonical; values built from a
// numerator/denominator pair go through make_rational().
using BigRat = mpq_class;

BigRat make_rational(const BigInt& num, const BigInt& den);
// Always "num/den", e.g. "11/6", "1/1", "-1/2".
std::string to_string(const BigRat& r);
// Accepts "p/q" or "p".
BigRat parse_rational(std::string_view text);
bool is_integer(const BigRat& r);

enum class Group { U, SP };

std::string_view to_string(Group g);
// Accepts "u", "U", "sp", "SP".
Group parse_group(std::string_view text);

enum class Strictness : bool { lax = false, strict = true };

inline bool is_strict(Strictness s) { return s == Strictness::strict; }

// Group tag plus (k, q). Everything about the pattern shape is derived from
// these three values.
class FamilySpec {
 public:
  FamilySpec(Group group, int k, int q);

  Group group() const { return group_; }
  int k() const { return k_; }
  int q() const { return q_; }
  int kq() const { return k_ * q_; }

  // Rows are numbered 1..row_count() bottom to top.
  int row_count() const;
  // Number of entries in row j; throws IndexError outside 1..row_count().
  int row_length(int j) const;
  // The longest row, where the two half-patterns meet.
  int middle_row() const;
  // Total number of cells, k^2q^2 (U) or kq(2kq+1) (SP).
  int total_cells() const;
  // Polynomial degree / polytope dimension: k^2q^2-(k-1) or kq(2kq+1)-k.
  int dimension() const;
  // Number of sum constraints: k-1 (U) or k (SP).
  int constraint_count() const;
  // Dilation gap of the lax-to-strict bijection: 2kq (U) or 2kq+1 (SP).
  int bijection_shift() const;
  // Largest m with P(-m) = 0: 2kq-1 (U) or 2kq (SP).
  int vanishing_root_count() const;
  // c such that the polynomial is symmetric about Re(z) = -c.
  BigRat symmetry_center() const;

  std::string label() const;  // e.g. "U(2;1)"

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  Group group_;
  int k_;
  int q_;
};

std::ostream& operator<<(std::ostream& os, const FamilySpec& spec);

// Pattern cell p_i^(j): i = 1 is the largest entry of row j.
struct Cell {
  int i;
  int j;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Row-major, bottom row first.
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

// All cells in row-major order (rows bottom-up, i ascending within a row).
std::vector<Cell> all_cells(const FamilySpec& spec);
// Cells whose values are determined by the sum constraints.
std::vector<Cell> fixed_index_set(const FamilySpec& spec);
// all_cells minus fixed_index_set; size equals spec.dimension().
std::vector<Cell> free_index_set(const FamilySpec& spec);

// Weakly decreasing tuple of non-negative values. T is std::int64_t for
// lattice patterns and BigRat for points of the continuous chamber.
template <class T>
class BasicSignature {
 public:
  BasicSignature() = default;
  explicit BasicSignature(std::vector<T> entries) : entries_(std::move(entries)) {
    for (std::size_t n = 0; n < entries_.size(); ++n) {
      if (entries_[n] < 0) throw DomainError("signature entry is negative");
      if (n > 0 && entries_[n - 1] < entries_[n]) {
        throw DomainError("signature entries must be weakly decreasing");
      }
    }
  }
  BasicSignature(std::initializer_list<T> entries)
      : BasicSignature(std::vector<T>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // 0-based access; element 0 is the largest entry.
  const T& operator[](std::size_t n) const { return entries_[n]; }
  // 1-based access matching the p_i notation.
  const T& entry(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > entries_.size()) {
      throw IndexError("signature index out of range");
    }
    return entries_[static_cast<std::size_t>(i - 1)];
  }
  std::span<const T> entries() const { return entries_; }
  T sum() const {
    T total = 0;
    for (const T& e : entries_) total += e;
    return total;
  }

  friend bool operator==(const BasicSignature&, const BasicSignature&) = default;
  friend bool operator<(const BasicSignature& a, const BasicSignature& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<T> entries_;
};

using Signature = BasicSignature<std::int64_t>;
using ContinuousSignature = BasicSignature<BigRat>;

// Integer array (p_i^(j)) of the shape prescribed by a FamilySpec, with all
// entries in {0..N}. Membership in the constrained family is a separate
// question (see patterns.hpp).
class Pattern {
 public:
  Pattern(FamilySpec spec, std::int64_t dilation, std::vector<Signature> rows);
  // Rows bottom-up, each listed largest entry first.
  static Pattern from_rows(FamilySpec spec, std::int64_t dilation,
                           const std::vector<std::vector<std::int64_t>>& rows);

  const FamilySpec& spec() const { return spec_; }
  std::int64_t dilation() const { return dilation_; }
  const std::vector<Signature>& rows() const { return rows_; }
  // 1-based row access.
  const Signature& row(int j) const;
  std::int64_t entry(int i, int j) const { return row(j).entry(i); }
  std::int64_t entry(Cell c) const { return entry(c.i, c.j); }
  // |p^(j)| for j = 0..row_count()+1; the two phantom rows are 0.
  std::vector<std::int64_t> row_sums_with_phantoms() const;

  // "[1],[1,0],[0]"
  std::string to_string() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.spec_ == b.spec_ && a.dilation_ == b.dilation_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const Pattern& a, const Pattern& b) {
    if (a.dilation_ != b.dilation_) return a.dilation_ < b.dilation_;
    return a.rows_ < b.rows_;
  }

 private:
  FamilySpec spec_;
  std::int64_t dilation_;
  std::vector<Signature> rows_;
};

std::ostream& operator<<(std::ostream& os, const Pattern& p);

}  // namespace mompoly

#endif  // MOMPOLY_TYPES_HPP_
