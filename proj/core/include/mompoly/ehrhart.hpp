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

#ifndef MOMPOLY_EHRHART_HPP_
#define MOMPOLY_EHRHART_HPP_

#include <cstdint>
#include <span>
#include <utility>

#include "mompoly/counter.hpp"
#include "mompoly/rational_poly.hpp"
#include "mompoly/transfer.hpp"
#include "mompoly/verdict.hpp"

namespace mompoly {

// Unique polynomial of degree <= points.size()-1 through the given points
// (Newton divided differences). Nodes must be distinct.
RationalPoly interpolate_points(std::span<const std::pair<BigRat, BigRat>> points);

// Fit through N = 0..degree; InputError if a node is missing.
RationalPoly interpolate(const CountTable& table, int degree);

// Lax counts at N = 0..dimension, interpolated.
RationalPoly fit(const FamilySpec& spec, Counter& counter);

// Per-residue fits: constituent r uses the first degree+1 table nodes
// congruent to r mod period. InputError when a class is short of nodes.
QuasiPoly fit_quasi(const CountTable& table, int period, int degree);

VerdictReport verify_polynomiality(const FamilySpec& spec, int extra, Counter& counter);
// Fits a quasi-polynomial of the given period on counts N = 0..(D+1)*period-1
// and checks that it collapses to a single polynomial.
VerdictReport verify_period_collapse(const FamilySpec& spec, int period, Counter& counter);
// P(-N) = (-1)^d * strict count at N, for N in [n_lo, n_hi].
VerdictReport verify_reciprocity(const FamilySpec& spec, const RationalPoly& p, std::int64_t n_lo,
                                 std::int64_t n_hi, Counter& counter);
VerdictReport verify_integer_roots(const FamilySpec& spec, const RationalPoly& p);
VerdictReport verify_symmetry(const FamilySpec& spec, const RationalPoly& p);

// P(-c+s) - (-1)^d P(-c-s) for the family's symmetry center c.
RationalPoly symmetry_defect(const FamilySpec& spec, const RationalPoly& p);

}  // namespace mompoly

#endif  // MOMPOLY_EHRHART_HPP_
