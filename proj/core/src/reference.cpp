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

#include "mompoly/reference.hpp"

namespace mompoly {

namespace {

RationalPoly z_plus(long c) { return RationalPoly::linear(c, 1); }

RationalPoly ints(std::initializer_list<long> ascending) {
  std::vector<BigRat> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

GoldenPoly rising(const FamilySpec& spec, int top, BigRat scale, std::vector<RationalPoly> extra,
                  std::string source) {
  GoldenPoly g{spec, std::move(scale), {}, std::move(source)};
  for (int m = 1; m <= top; ++m) g.factors.push_back(z_plus(m));
  for (auto& f : extra) g.factors.push_back(std::move(f));
  return g;
}

}  // namespace

RationalPoly keating_snaith(int q) {
  if (q < 1) throw DomainError("q must be positive");
  RationalPoly p = RationalPoly::constant(1);
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) p = p * RationalPoly::linear(1, make_rational(1, i + j - 1));
  }
  return p;
}

RationalPoly GoldenPoly::expand() const {
  RationalPoly p = RationalPoly::constant(scale);
  for (const auto& f : factors) p = p * f;
  return p;
}

std::optional<GoldenPoly> golden(const FamilySpec& spec) {
  const int k = spec.k(), q = spec.q();
  if (spec.group() == Group::U) {
    if (k == 1) {
      GoldenPoly g{spec, 1, {}, "Keating-Snaith product"};
      for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= q; ++j) g.factors.push_back(RationalPoly::linear(1, make_rational(1, i + j - 1)));
      }
      return g;
    }
    if (k == 2 && q == 1) return rising(spec, 3, make_rational(1, 6), {}, "(z+1)(z+2)(z+3)/6");
    if (k == 3 && q == 1) {
      return rising(spec, 5, make_rational(1, 2520), {ints({21, 6, 1})},
                    "(z+1)...(z+5)(z^2+6z+21)/2520");
    }
    return std::nullopt;
  }
  if (k == 1 && q == 1) return rising(spec, 2, make_rational(1, 2), {}, "(z+1)(z+2)/2");
  if (k == 1 && q == 2) {
    return rising(spec, 4, make_rational(1, 181440), {ints({5, 2}), ints({1512, 1650, 905, 230, 23})},
                  "(z+1)...(z+4)(2z+5)(23z^4+230z^3+905z^2+1650z+1512)/181440");
  }
  if (k == 2 && q == 1) {
    return rising(spec, 4, make_rational(1, 10080), {ints({420, 260, 127, 30, 3})},
                  "(z+1)...(z+4)(3z^4+30z^3+127z^2+260z+420)/10080");
  }
  return std::nullopt;
}

}  // namespace mompoly
