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

#include "mompoly/rational_poly.hpp"

#include <algorithm>
#include <sstream>

namespace mompoly {

RationalPoly::RationalPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const BigRat& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::linear(const BigRat& c0, const BigRat& c1) {
  return RationalPoly({c0, c1});
}

BigRat RationalPoly::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

BigRat RationalPoly::leading() const {
  if (is_zero()) return 0;
  return coeffs_.back();
}

BigRat RationalPoly::operator()(const BigRat& z) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

RationalPoly RationalPoly::operator-() const { return scale(-1); }

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n < a.coeffs_.size()) c[n] += a.coeffs_[n];
    if (n < b.coeffs_.size()) c[n] += b.coeffs_[n];
  }
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRat> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::scale(const BigRat& c) const {
  std::vector<BigRat> out(coeffs_);
  for (auto& x : out) x *= c;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::taylor_shift(const BigRat& a) const {
  std::vector<BigRat> c(coeffs_);
  const std::size_t n = c.size();
  // Repeated synthetic division by (z - a).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::reflect() const {
  std::vector<BigRat> c(coeffs_);
  for (std::size_t n = 1; n < c.size(); n += 2) c[n] = -c[n];
  return RationalPoly(std::move(c));
}

std::pair<RationalPoly, BigRat> RationalPoly::divide_linear(const BigRat& root) const {
  if (is_zero()) return {RationalPoly{}, BigRat(0)};
  std::vector<BigRat> q(coeffs_.size() - 1);
  BigRat carry = 0;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    carry = carry * root + coeffs_[n];
    if (n > 0) q[n - 1] = carry;
  }
  return {RationalPoly(std::move(q)), carry};
}

int RationalPoly::root_multiplicity(const BigRat& root) const {
  if (is_zero()) throw DomainError("root multiplicity of the zero polynomial is undefined");
  int m = 0;
  RationalPoly p = *this;
  while (p.degree() > 0) {
    auto [quot, rem] = p.divide_linear(root);
    if (rem != 0) break;
    p = std::move(quot);
    ++m;
  }
  return m;
}

namespace {

// Positive divisors of |n| in ascending order, or nullopt past `limit` trials.
std::optional<std::vector<BigInt>> divisors(BigInt n, std::uint64_t limit) {
  n = abs(n);
  std::vector<BigInt> small, large;
  std::uint64_t trials = 0;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (++trials > limit) return std::nullopt;
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<std::pair<BigRat, int>>> RationalPoly::rational_roots(
    std::uint64_t candidate_limit) const {
  if (is_zero()) throw DomainError("the zero polynomial has every number as a root");
  std::vector<std::pair<BigRat, int>> roots;
  RationalPoly p = *this;
  if (int m = p.root_multiplicity(0); m > 0) {
    roots.emplace_back(0, m);
    std::vector<BigRat> c(p.coeffs_.begin() + m, p.coeffs_.end());
    p = RationalPoly(std::move(c));
  }
  if (p.degree() >= 1) {
    BigInt den = 1;
    for (const auto& c : p.coeffs_) den = lcm(den, c.get_den());
    std::vector<BigInt> ints;
    for (const auto& c : p.coeffs_) ints.push_back(BigInt(c * den));
    auto nums = divisors(ints.front(), candidate_limit);
    auto dens = divisors(ints.back(), candidate_limit);
    if (!nums || !dens) return std::nullopt;
    if (static_cast<double>(nums->size()) * static_cast<double>(dens->size()) >
        static_cast<double>(candidate_limit)) {
      return std::nullopt;
    }
    BigInt at_one = 0, at_minus_one = 0;
    for (std::size_t n = 0; n < ints.size(); ++n) {
      at_one += ints[n];
      at_minus_one += n % 2 == 0 ? ints[n] : BigInt(-ints[n]);
    }
    for (const auto& b : *dens) {
      for (const auto& a : *nums) {
        if (gcd(a, b) != 1) continue;
        for (int sign : {-1, 1}) {
          const BigInt num = sign * a;
          // Necessary conditions from P(1) and P(-1) prune most candidates.
          if (at_one != 0 && BigInt(b - num) != 0 && at_one % BigInt(b - num) != 0) continue;
          if (at_minus_one != 0 && BigInt(b + num) != 0 && at_minus_one % BigInt(b + num) != 0) {
            continue;
          }
          const BigRat r = make_rational(num, b);
          if (int m = p.root_multiplicity(r); m > 0) roots.emplace_back(r, m);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return roots;
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = coeffs_.size(); n-- > 0;) {
    const BigRat& c = coeffs_[n];
    if (c == 0) continue;
    BigRat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && n > 0;
    if (!unit) os << mag.get_str() << (n > 0 ? "*" : "");
    if (n >= 1) os << 'z';
    if (n >= 2) os << '^' << n;
  }
  return os.str();
}

QuasiPoly::QuasiPoly(std::vector<RationalPoly> constituents)
    : constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw DomainError("quasi-polynomial period must be at least 1");
}

const RationalPoly& QuasiPoly::constituent(std::int64_t n) const {
  const std::int64_t d = period();
  return constituents_[static_cast<std::size_t>(((n % d) + d) % d)];
}

bool QuasiPoly::collapsed() const {
  return std::all_of(constituents_.begin(), constituents_.end(),
                     [&](const RationalPoly& p) { return p == constituents_.front(); });
}

}  // namespace mompoly
