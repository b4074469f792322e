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

#include "mompoly/ehrhart.hpp"
#include "mompoly/reference.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

namespace mompoly {
namespace {

constexpr auto kLax = Strictness::lax;

BigRat Q(long n, long d) { return make_rational(n, d); }

std::vector<FamilySpec> small_families() {
  return {{Group::U, 1, 1}, {Group::U, 1, 2}, {Group::U, 2, 1},
          {Group::SP, 1, 1}, {Group::SP, 1, 2}, {Group::SP, 2, 1}};
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

TEST(Interpolate, Examples) {
  CountTable t(FamilySpec(Group::U, 1, 1), kLax);
  t.set(0, 1);
  t.set(1, 2);
  EXPECT_EQ(interpolate(t, 1), RationalPoly::linear(1, 1));
  Counter counter;
  EXPECT_EQ(interpolate(counter.series(FamilySpec(Group::U, 2, 1), 3, kLax), 3),
            RationalPoly({BigRat(1), Q(11, 6), BigRat(1), Q(1, 6)}));
  EXPECT_EQ(interpolate(counter.series(FamilySpec(Group::SP, 1, 1), 2, kLax), 2),
            RationalPoly({BigRat(1), Q(3, 2), Q(1, 2)}));
}

TEST(Interpolate, MissingNodeIsAnInputError) {
  CountTable t(FamilySpec(Group::U, 1, 1), kLax);
  t.set(0, 1);
  t.set(2, 3);
  EXPECT_THROW(interpolate(t, 2), InputError);
}

TEST(Interpolate, ReproducesNodesAndMatchesLagrange) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    SCOPED_TRACE("seed " + std::to_string(seed));
    gen::Rng rng(seed);
    const int d = static_cast<int>(rng.uniform(0, 8));
    CountTable t(FamilySpec(Group::U, 1, 1), kLax);
    std::vector<mpq_class> xs, ys;
    for (int n = 0; n <= d; ++n) {
      const BigInt v = rng.uniform(-1000, 1000);
      t.set(n, v);
      xs.emplace_back(n);
      ys.emplace_back(v);
    }
    const auto p = interpolate(t, d);
    for (int n = 0; n <= d; ++n) EXPECT_EQ(p(n), BigRat(t.at(n)));
    EXPECT_EQ(p.coeffs(), oracle::lagrange(xs, ys));
  }
}

TEST(Interpolate, ArbitraryNodes) {
  std::vector<std::pair<BigRat, BigRat>> pts{{Q(1, 2), 1}, {-3, 4}, {7, Q(-2, 3)}};
  const auto p = interpolate_points(pts);
  for (const auto& [x, y] : pts) EXPECT_EQ(p(x), y);
  pts.push_back({-3, 1});
  EXPECT_THROW(interpolate_points(pts), InputError);
}

TEST(VerifyPolynomiality, Examples) {
  Counter counter;
  auto r = verify_polynomiality(FamilySpec(Group::U, 1, 1), 3, counter);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.detail()["polynomial"]["degree"], 1);
  r = verify_polynomiality(FamilySpec(Group::U, 2, 1), 2, counter);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.detail()["polynomial"]["degree"], 3);
  EXPECT_EQ(counter.count(FamilySpec(Group::U, 2, 1), 4, kLax), 35);
  EXPECT_EQ(counter.count(FamilySpec(Group::U, 2, 1), 5, kLax), 56);
  r = verify_polynomiality(FamilySpec(Group::SP, 1, 1), 2, counter);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(counter.count(FamilySpec(Group::SP, 1, 1), 3, kLax), 10);
  EXPECT_EQ(counter.count(FamilySpec(Group::SP, 1, 1), 4, kLax), 15);
  EXPECT_THROW(verify_polynomiality(FamilySpec(Group::U, 1, 1), 0, counter), InputError);
}

TEST(FitQuasi, Examples) {
  Counter counter;
  FamilySpec u21(Group::U, 2, 1);
  const auto q = fit_quasi(counter.series(u21, 7, kLax), 2, 3);
  EXPECT_TRUE(q.collapsed());
  EXPECT_EQ(q.constituents()[1], RationalPoly({BigRat(1), Q(11, 6), BigRat(1), Q(1, 6)}));

  CountTable ones(FamilySpec(Group::U, 1, 1), kLax);
  for (int n = 0; n < 3; ++n) ones.set(n, 1);
  const auto c = fit_quasi(ones, 3, 0);
  EXPECT_EQ(c.period(), 3);
  for (const auto& part : c.constituents()) EXPECT_EQ(part, RationalPoly::constant(1));

  FamilySpec u22(Group::U, 2, 2);
  const auto big = fit_quasi(counter.series(u22, 31, kLax), 2, u22.dimension());
  EXPECT_TRUE(big.collapsed());

  EXPECT_THROW(fit_quasi(ones, 2, 1), InputError);
}

TEST(FitQuasi, DetectsGenuinePeriod) {
  // floor(N/2) + 1 is a quasi-polynomial of period 2 that does not collapse.
  CountTable t(FamilySpec(Group::U, 1, 1), kLax);
  for (int n = 0; n < 8; ++n) t.set(n, n / 2 + 1);
  const auto q = fit_quasi(t, 2, 1);
  EXPECT_FALSE(q.collapsed());
  for (int n = 0; n < 8; ++n) EXPECT_EQ(q(n), BigRat(n / 2 + 1));
}

TEST(VerifyReciprocity, Examples) {
  Counter counter;
  FamilySpec u21(Group::U, 2, 1), u11(Group::U, 1, 1), sp11(Group::SP, 1, 1);
  EXPECT_EQ(fit(u21, counter)(-4), BigRat(-1));
  EXPECT_TRUE(verify_reciprocity(u21, fit(u21, counter), 4, 4, counter).pass());
  EXPECT_EQ(fit(u11, counter)(-5), BigRat(-4));
  EXPECT_TRUE(verify_reciprocity(u11, fit(u11, counter), 5, 5, counter).pass());
  EXPECT_EQ(fit(sp11, counter)(-3), BigRat(1));
  EXPECT_TRUE(verify_reciprocity(sp11, fit(sp11, counter), 3, 3, counter).pass());
}

TEST(VerifyReciprocity, WrongPolynomialFailsWithWitness) {
  Counter counter;
  FamilySpec u21(Group::U, 2, 1);
  const auto wrong = fit(u21, counter) + RationalPoly::constant(1);
  const auto r = verify_reciprocity(u21, wrong, 1, 5, counter);
  EXPECT_FALSE(r.pass());
  ASSERT_FALSE(r.witnesses().empty());
  EXPECT_EQ(r.witnesses().front()["N"], 1);
}

TEST(VerifyIntegerRoots, Examples) {
  Counter counter;
  auto r = verify_integer_roots(FamilySpec(Group::U, 2, 1), fit(FamilySpec(Group::U, 2, 1), counter));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.detail()["zeros"], Json::parse("[-1,-2,-3]"));
  r = verify_integer_roots(FamilySpec(Group::SP, 1, 1), fit(FamilySpec(Group::SP, 1, 1), counter));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.detail()["zeros"], Json::parse("[-1,-2]"));
  r = verify_integer_roots(FamilySpec(Group::U, 1, 2), fit(FamilySpec(Group::U, 1, 2), counter));
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.detail()["multiplicities"], Json::parse(R"({"-1":1,"-2":2,"-3":1})"));
}

TEST(VerifyIntegerRoots, MultiplicitiesFollowProductFormula) {
  Counter counter;
  for (int q = 1; q <= 3; ++q) {
    const auto p = fit(FamilySpec(Group::U, 1, q), counter);
    for (int m = 1; m <= 2 * q - 1; ++m) {
      // (1 + z/m) appears once for each i + j - 1 = m with 1 <= i, j <= q.
      const int expected = std::min(m, 2 * q - m);
      EXPECT_EQ(p.root_multiplicity(-m), expected) << "q=" << q << " m=" << m;
    }
  }
}

TEST(VerifyIntegerRoots, ReportsRationalRoots) {
  Counter counter;
  FamilySpec sp12(Group::SP, 1, 2);
  const auto r = verify_integer_roots(sp12, fit(sp12, counter));
  EXPECT_TRUE(r.pass());
  bool found = false;
  for (const auto& e : r.detail()["rational_roots"]) found = found || e["root"] == "-5/2";
  EXPECT_TRUE(found) << r.detail()["rational_roots"].dump();
}

TEST(VerifyIntegerRoots, ExtraRootIsCaught) {
  FamilySpec u21(Group::U, 2, 1);
  const auto bad = golden(u21)->expand() * RationalPoly::linear(4, 1);
  const auto r = verify_integer_roots(u21, bad);
  EXPECT_FALSE(r.pass());
  ASSERT_FALSE(r.witnesses().empty());
  EXPECT_EQ(r.witnesses().front()["z"], -4);
}

TEST(VerifySymmetry, Examples) {
  Counter counter;
  for (const auto& spec : {FamilySpec(Group::U, 2, 1), FamilySpec(Group::SP, 1, 1), FamilySpec(Group::U, 1, 1)}) {
    const auto p = fit(spec, counter);
    EXPECT_TRUE(symmetry_defect(spec, p).is_zero()) << spec.label();
    EXPECT_TRUE(verify_symmetry(spec, p).pass()) << spec.label();
  }
  const auto r = verify_symmetry(FamilySpec(Group::SP, 1, 1), fit(FamilySpec(Group::SP, 1, 1), counter));
  EXPECT_EQ(r.detail()["center"], "-3/2");
  // P(s - 3/2) = s^2/2 - 1/8
  EXPECT_EQ(r.detail()["shifted"], Json::parse(R"(["-1/8","0/1","1/2"])"));
}

TEST(VerifySymmetry, AsymmetricPolynomialFails) {
  const auto r = verify_symmetry(FamilySpec(Group::U, 1, 1), RationalPoly::linear(2, 1));
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.witnesses().empty());
}

TEST(FittedPolynomials, SanityBounds) {
  Counter counter;
  for (const auto& spec : small_families()) {
    const auto p = fit(spec, counter);
    const int d = spec.dimension();
    EXPECT_EQ(p.degree(), d) << spec.label();
    EXPECT_GT(p.leading(), 0) << spec.label();
    const BigInt f = factorial(d);
    for (const auto& c : p.coeffs()) EXPECT_EQ(f % c.get_den(), 0) << spec.label();
  }
}

TEST(FittedPolynomials, ReciprocityAndVanishingAgree) {
  Counter counter;
  for (const auto& spec : small_families()) {
    const auto p = fit(spec, counter);
    for (int m = 1; m <= spec.vanishing_root_count(); ++m) {
      EXPECT_EQ(counter.count(spec, m, Strictness::strict), 0) << spec.label();
      EXPECT_EQ(p(-m), BigRat(0)) << spec.label();
    }
  }
}

TEST(VerdictReport, JsonShape) {
  VerdictReport r("demo", Json{{"k", 1}});
  EXPECT_TRUE(r.pass());
  r.expect(false, Json{{"N", 3}});
  const auto j = r.to_json();
  EXPECT_EQ(j["schema"], "mompoly.verdict/1");
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["witnesses"].size(), 1u);
}

TEST(PolyJson, RoundTrip) {
  FamilySpec spec(Group::U, 2, 1);
  const auto p = RationalPoly({BigRat(1), Q(11, 6), BigRat(1), Q(1, 6)});
  const auto j = poly_json(spec, p);
  EXPECT_EQ(j["coeffs"], Json::parse(R"(["1/1","11/6","1/1","1/6"])"));
  EXPECT_EQ(poly_from_json(j), p);
  auto broken = j;
  broken["degree"] = 2;
  EXPECT_THROW(poly_from_json(broken), InputError);
  broken = j;
  broken["schema"] = "other/1";
  EXPECT_THROW(poly_from_json(broken), InputError);
}

}  // namespace
}  // namespace mompoly
