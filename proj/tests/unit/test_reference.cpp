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

#include "mompoly/counter.hpp"
#include "mompoly/ehrhart.hpp"
#include "mompoly/reference.hpp"
#include "mompoly/transfer.hpp"

namespace mompoly {
namespace {

// prod_{i,j=1..q} (z + i + j - 1) / (i + j - 1), built by hand.
RationalPoly box_product(int q) {
  RationalPoly p = RationalPoly::constant(1);
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) {
      p = p * RationalPoly::linear(i + j - 1, 1);
      p = p.scale(make_rational(1, i + j - 1));
    }
  }
  return p;
}

TEST(KeatingSnaith, SmallCases) {
  EXPECT_EQ(keating_snaith(1), RationalPoly::linear(1, 1));
  EXPECT_EQ(keating_snaith(2), box_product(2));
  EXPECT_EQ(keating_snaith(3), box_product(3));
}

TEST(KeatingSnaith, MatchesCounts) {
  for (int q = 1; q <= 3; ++q) {
    const FamilySpec spec(Group::U, 1, q);
    const auto p = keating_snaith(q);
    EXPECT_EQ(p.degree(), q * q);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(p(BigRat(n)), BigRat(count_dp(spec, n, Strictness::lax))) << "q=" << q << " N=" << n;
    }
  }
}

TEST(Golden, Availability) {
  EXPECT_FALSE(golden(FamilySpec(Group::U, 2, 2)).has_value());
  EXPECT_FALSE(golden(FamilySpec(Group::SP, 3, 1)).has_value());
  const auto sp21 = golden(FamilySpec(Group::SP, 2, 1));
  ASSERT_TRUE(sp21.has_value());
  EXPECT_EQ(sp21->expand().degree(), 8);
  EXPECT_FALSE(sp21->source.empty());
}

const FamilySpec kGolden[] = {
    {Group::U, 1, 1}, {Group::U, 1, 2}, {Group::U, 1, 3}, {Group::U, 2, 1},  {Group::U, 3, 1},
    {Group::SP, 1, 1}, {Group::SP, 1, 2}, {Group::SP, 2, 1},
};

TEST(Golden, DegreeIsDimension) {
  for (const auto& spec : kGolden) {
    const auto g = golden(spec);
    ASSERT_TRUE(g.has_value()) << spec.label();
    EXPECT_EQ(g->expand().degree(), spec.dimension()) << spec.label();
  }
}

TEST(Golden, AgreesWithFittedCounts) {
  Counter counter;
  for (const auto& spec : kGolden) {
    const auto g = golden(spec);
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(g->expand(), fit(spec, counter)) << spec.label();
  }
}

TEST(Golden, PassesRootAndSymmetryChecks) {
  for (const auto& spec : kGolden) {
    const auto p = golden(spec)->expand();
    const auto roots = verify_integer_roots(spec, p);
    EXPECT_TRUE(roots.pass()) << roots.to_json().dump();
    const auto sym = verify_symmetry(spec, p);
    EXPECT_TRUE(sym.pass()) << sym.to_json().dump();
  }
}

TEST(Golden, FactoredFormEvaluatesLikeExpansion) {
  for (const auto& spec : kGolden) {
    const auto g = *golden(spec);
    const auto p = g.expand();
    for (int z = -7; z <= 7; ++z) {
      BigRat v = g.scale;
      for (const auto& f : g.factors) v *= f(BigRat(z));
      EXPECT_EQ(v, p(BigRat(z))) << spec.label() << " z=" << z;
    }
  }
}

}  // namespace
}  // namespace mompoly
