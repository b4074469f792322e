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

#ifndef MOMPOLY_REFERENCE_HPP_
#define MOMPOLY_REFERENCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mompoly/rational_poly.hpp"
#include "mompoly/types.hpp"

namespace mompoly {

// prod_{i,j=1..q} (1 + z/(i+j-1))
RationalPoly keating_snaith(int q);

// Known closed form stored as a product of factors, expanded on demand.
struct GoldenPoly {
  FamilySpec spec;
  BigRat scale;
  std::vector<RationalPoly> factors;
  std::string source;

  RationalPoly expand() const;
};

// Closed forms known for small families; nullopt otherwise.
std::optional<GoldenPoly> golden(const FamilySpec& spec);

}  // namespace mompoly

#endif  // MOMPOLY_REFERENCE_HPP_
