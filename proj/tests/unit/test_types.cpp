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

#include "mompoly/types.hpp"
#include "support/oracle.hpp"

namespace mompoly {
namespace {

TEST(RowLength, Examples) {
  EXPECT_EQ(FamilySpec(Group::U, 2, 1).row_length(2), 2);
  EXPECT_EQ(FamilySpec(Group::SP, 1, 1).row_length(3), 1);
  EXPECT_EQ(FamilySpec(Group::SP, 2, 1).row_length(4), 2);
}

TEST(RowLength, OutOfRangeThrows) {
  FamilySpec s(Group::U, 2, 1);
  EXPECT_THROW(s.row_length(0), IndexError);
  EXPECT_THROW(s.row_length(4), IndexError);
  EXPECT_THROW(FamilySpec(Group::SP, 1, 1).row_length(4), IndexError);
}

TEST(RowLength, MatchesDirectFormula) {
  for (int k = 1; k <= 4; ++k) {
    for (int q = 1; q <= 4; ++q) {
      for (bool sp : {false, true}) {
        FamilySpec s(sp ? Group::SP : Group::U, k, q);
        ASSERT_EQ(s.row_count(), oracle::rows(sp, k, q));
        for (int j = 1; j <= s.row_count(); ++j) {
          EXPECT_EQ(s.row_length(j), oracle::length(sp, k, q, j)) << s.label() << " j=" << j;
        }
      }
    }
  }
}

TEST(FamilySpec, RejectsNonPositiveParameters) {
  EXPECT_THROW(FamilySpec(Group::U, 0, 1), DomainError);
  EXPECT_THROW(FamilySpec(Group::SP, 1, 0), DomainError);
}

TEST(FamilySpec, DerivedQuantities) {
  FamilySpec u(Group::U, 2, 1), sp(Group::SP, 1, 1);
  EXPECT_EQ(u.dimension(), 3);
  EXPECT_EQ(sp.dimension(), 2);
  EXPECT_EQ(u.bijection_shift(), 4);
  EXPECT_EQ(sp.bijection_shift(), 3);
  EXPECT_EQ(u.symmetry_center(), BigRat(2));
  EXPECT_EQ(sp.symmetry_center(), make_rational(3, 2));
  EXPECT_EQ(u.label(), "U(2;1)");
}

TEST(FreeIndexSet, Examples) {
  auto u21 = free_index_set(FamilySpec(Group::U, 2, 1));
  EXPECT_EQ(u21, (std::vector<Cell>{{1, 1}, {2, 2}, {1, 3}}));
  EXPECT_EQ(free_index_set(FamilySpec(Group::U, 1, 1)), (std::vector<Cell>{{1, 1}}));
  EXPECT_EQ(free_index_set(FamilySpec(Group::SP, 1, 1)), (std::vector<Cell>{{1, 1}, {1, 2}}));
}

TEST(FreeIndexSet, SizeIsDimensionAndCellsAddUp) {
  for (int k = 1; k <= 4; ++k) {
    for (int q = 1; q <= 4; ++q) {
      for (Group g : {Group::U, Group::SP}) {
        FamilySpec s(g, k, q);
        const int kq = k * q;
        const int total = g == Group::U ? kq * kq : kq * (2 * kq + 1);
        const int dim = g == Group::U ? kq * kq - (k - 1) : kq * (2 * kq + 1) - k;
        int sum = 0;
        for (int j = 1; j <= s.row_count(); ++j) sum += s.row_length(j);
        EXPECT_EQ(sum, total) << s.label();
        EXPECT_EQ(static_cast<int>(all_cells(s).size()), total) << s.label();
        EXPECT_EQ(static_cast<int>(free_index_set(s).size()), dim) << s.label();
        EXPECT_EQ(s.dimension(), dim) << s.label();
      }
    }
  }
}

TEST(Signature, Validation) {
  EXPECT_NO_THROW(Signature({3, 1, 1, 0}));
  EXPECT_THROW(Signature({1, 2}), DomainError);
  EXPECT_THROW(Signature({1, -1}), DomainError);
  Signature s{4, 2};
  EXPECT_EQ(s.entry(1), 4);
  EXPECT_EQ(s.sum(), 6);
  EXPECT_THROW(s.entry(3), IndexError);
  ContinuousSignature c{make_rational(3, 2), make_rational(1, 2)};
  EXPECT_EQ(c.sum(), BigRat(2));
}

TEST(Pattern, ShapeAndBoundChecks) {
  FamilySpec s(Group::U, 2, 1);
  EXPECT_NO_THROW(Pattern::from_rows(s, 1, {{1}, {1, 0}, {0}}));
  EXPECT_THROW(Pattern::from_rows(s, 1, {{1}, {1}, {0}}), ShapeError);
  EXPECT_THROW(Pattern::from_rows(s, 1, {{1}, {1, 0}}), ShapeError);
  EXPECT_THROW(Pattern::from_rows(s, 1, {{2}, {1, 0}, {0}}), DomainError);
  auto p = Pattern::from_rows(s, 1, {{1}, {1, 0}, {0}});
  EXPECT_EQ(p.entry(1, 2), 1);
  EXPECT_EQ(p.to_string(), "[1],[1,0],[0]");
  EXPECT_EQ(p.row_sums_with_phantoms(), (std::vector<std::int64_t>{0, 1, 1, 0, 0}));
}

TEST(Rational, NormalizesAndRoundTrips) {
  BigRat r = make_rational(6, -4);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(parse_rational("-3/2"), r);
  EXPECT_EQ(parse_rational("4"), BigRat(4));
  EXPECT_EQ(to_string(BigRat(4)), "4/1");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
  EXPECT_TRUE(is_integer(make_rational(4, 2)));
  EXPECT_FALSE(is_integer(make_rational(1, 2)));
}

TEST(Group, ParseAndPrint) {
  EXPECT_EQ(parse_group("u"), Group::U);
  EXPECT_EQ(parse_group("sp"), Group::SP);
  EXPECT_EQ(to_string(Group::SP), "sp");
  EXPECT_THROW(parse_group("so"), InputError);
}

}  // namespace
}  // namespace mompoly
