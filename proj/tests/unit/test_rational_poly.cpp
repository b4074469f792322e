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

#include <gtest/gtest.h>

#include "mompoly/rational_poly.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace mompoly {
namespace {

RationalPoly P(std::initializer_list<long> ascending) {
  std::vector<BigRat> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

BigRat Q(long n, long d) { return make_rational(n, d); }

TEST(RationalPoly, ZeroPolynomial) {
  RationalPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), RationalPoly::kZeroDegree);
  EXPECT_EQ(RationalPoly({BigRat(0), BigRat(0)}), z);
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_THROW(z.root_multiplicity(1), DomainError);
}

TEST(RationalPoly, TrimsAndNormalizes) {
  RationalPoly p({BigRat(2, 4), BigRat(0)});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(p.coeffs()[0], Q(1, 2));
  EXPECT_EQ(p.coeffs()[0].get_den(), 2);
}

TEST(RationalPoly, Arithmetic) {
  auto a = P({1, 1}), b = P({-1, 1});
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ(a + b, P({0, 2}));
  EXPECT_EQ(a - a, RationalPoly());
  EXPECT_EQ(a.scale(Q(1, 2)), RationalPoly({Q(1, 2), Q(1, 2)}));
  EXPECT_EQ((a * b)(3), BigRat(8));
}

TEST(RationalPoly, ShiftAndReflect) {
  auto p = P({1, 2, 3});  // 3z^2 + 2z + 1
  EXPECT_EQ(p.taylor_shift(1), P({6, 8, 3}));
  EXPECT_EQ(p.reflect(), P({1, -2, 3}));
}

TEST(RationalPoly, ShiftIsInvertibleAndAMorphism) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    SCOPED_TRACE("seed " + std::to_string(seed));
    gen::Rng rng(seed);
    const auto p = gen::poly(rng), q = gen::poly(rng);
    const auto a = gen::rational(rng);
    EXPECT_EQ(p.taylor_shift(a).taylor_shift(-a), p);
    EXPECT_EQ((p * q).taylor_shift(a), p.taylor_shift(a) * q.taylor_shift(a));
    EXPECT_EQ((p + q).taylor_shift(a), p.taylor_shift(a) + q.taylor_shift(a));
    const auto z = gen::rational(rng);
    EXPECT_EQ(p.taylor_shift(a)(z), p(z + a));
    EXPECT_EQ(p.reflect()(z), p(-z));
    EXPECT_EQ(p(z), oracle::horner(p.coeffs(), z));
  }
}

TEST(RationalPoly, DivideLinear) {
  auto [q, r] = P({-6, 11, -6, 1}).divide_linear(1);  // (z-1)(z-2)(z-3)
  EXPECT_EQ(q, P({6, -5, 1}));
  EXPECT_EQ(r, BigRat(0));
  auto [q2, r2] = P({1, 0, 1}).divide_linear(2);
  EXPECT_EQ(r2, BigRat(5));
  EXPECT_EQ(q2 * RationalPoly::linear(-2, 1) + RationalPoly::constant(r2), P({1, 0, 1}));
}

TEST(RationalPoly, RootMultiplicity) {
  auto p = P({1, 1}) * P({1, 1}) * P({2, 1});
  EXPECT_EQ(p.root_multiplicity(-1), 2);
  EXPECT_EQ(p.root_multiplicity(-2), 1);
  EXPECT_EQ(p.root_multiplicity(0), 0);
}

TEST(RationalPoly, RationalRoots) {
  auto p = P({5, 2}) * P({1, 1}) * P({1, 1}) * P({0, 1}) * P({1, 0, 1});
  auto roots = p.rational_roots();
  ASSERT_TRUE(roots.has_value());
  std::vector<std::pair<BigRat, int>> want{{Q(-5, 2), 1}, {BigRat(-1), 2}, {BigRat(0), 1}};
  EXPECT_EQ(*roots, want);
  auto none = P({1, 0, 1}).rational_roots();
  ASSERT_TRUE(none.has_value());
  EXPECT_TRUE(none->empty());
  EXPECT_EQ(P({1, -1}).rational_roots()->front().first, BigRat(1));
}

TEST(RationalPoly, RationalRootsRespectLimit) {
  auto p = RationalPoly({BigRat(BigInt("1000000000000000000000000")), BigRat(1), BigRat(1)});
  EXPECT_FALSE(p.rational_roots(1000).has_value());
}

TEST(RationalPoly, ToString) {
  EXPECT_EQ(RationalPoly({BigRat(1), Q(11, 6), BigRat(1), Q(1, 6)}).to_string(),
            "1/6*z^3 + z^2 + 11/6*z + 1");
  EXPECT_EQ(P({0, -1}).to_string(), "-z");
}

TEST(QuasiPoly, DispatchesOnResidue) {
  QuasiPoly q({P({0, 1}), P({1, 1})});
  EXPECT_EQ(q.period(), 2);
  EXPECT_EQ(q(4), BigRat(4));
  EXPECT_EQ(q(5), BigRat(6));
  EXPECT_EQ(q(-1), BigRat(0));
  EXPECT_FALSE(q.collapsed());
  EXPECT_TRUE(QuasiPoly({P({1}), P({1}), P({1})}).collapsed());
  EXPECT_THROW(QuasiPoly({}), DomainError);
}

}  // namespace
}  // namespace mompoly
