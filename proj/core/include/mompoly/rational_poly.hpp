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

#ifndef MOMPOLY_RATIONAL_POLY_HPP_
#define MOMPOLY_RATIONAL_POLY_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mompoly/types.hpp"

namespace mompoly {

// Dense univariate polynomial over Q, coefficients in ascending degree.
// The zero polynomial has no coefficients and degree kZeroDegree.
class RationalPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRat> coeffs);

  static RationalPoly constant(const BigRat& c);
  // c1 * z + c0
  static RationalPoly linear(const BigRat& c0, const BigRat& c1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(int n) const;
  BigRat leading() const;

  BigRat operator()(const BigRat& z) const;
  BigRat operator()(std::int64_t z) const { return (*this)(BigRat(BigInt(z))); }

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  RationalPoly scale(const BigRat& c) const;
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  // z -> P(z + a)
  RationalPoly taylor_shift(const BigRat& a) const;
  // z -> P(-z)
  RationalPoly reflect() const;
  // Synthetic division by (z - root): quotient and remainder P(root).
  std::pair<RationalPoly, BigRat> divide_linear(const BigRat& root) const;
  // 0 when root is not a root; throws DomainError on the zero polynomial.
  int root_multiplicity(const BigRat& root) const;

  // Rational roots with multiplicities, ascending. nullopt when the candidate
  // search would exceed `candidate_limit` numerator/denominator pairs.
  std::optional<std::vector<std::pair<BigRat, int>>> rational_roots(
      std::uint64_t candidate_limit = 2'000'000) const;

  // "1/6*z^3 + z^2 + 11/6*z + 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

class QuasiPoly {
 public:
  // constituents[r] applies to arguments congruent to r mod period.
  explicit QuasiPoly(std::vector<RationalPoly> constituents);

  int period() const { return static_cast<int>(constituents_.size()); }
  const std::vector<RationalPoly>& constituents() const { return constituents_; }
  const RationalPoly& constituent(std::int64_t n) const;
  BigRat operator()(std::int64_t n) const { return constituent(n)(n); }
  // True when every constituent is the same polynomial.
  bool collapsed() const;

 private:
  std::vector<RationalPoly> constituents_;
};

}  // namespace mompoly

#endif  // MOMPOLY_RATIONAL_POLY_HPP_
