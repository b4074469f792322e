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

#ifndef MOMPOLY_BIJECTION_HPP_
#define MOMPOLY_BIJECTION_HPP_

#include <cstdint>

#include "mompoly/patterns.hpp"
#include "mompoly/types.hpp"
#include "mompoly/verdict.hpp"

namespace mompoly {

// Shift added to cell (i, j) by the lax-to-strict map.
int offset(const FamilySpec& spec, int i, int j);

// Lax pattern at dilation N to strict pattern at N + spec.bijection_shift().
// DomainError unless the input is a lax member.
Pattern apply_bijection(const Pattern& p);
// Strict pattern at dilation M to lax pattern at M - spec.bijection_shift().
// DomainError unless the input is a strict member with M >= shift.
Pattern apply_inverse(const Pattern& u);

// Enumerates both sides independently and checks that the forward map lands
// in the strict family, that both round trips are identities, and that the
// two sides have the same size.
VerdictReport verify_bijectivity(const FamilySpec& spec, std::int64_t dilation,
                                 const EnumerateOptions& options = {});

}  // namespace mompoly

#endif  // MOMPOLY_BIJECTION_HPP_
