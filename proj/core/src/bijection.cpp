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

#include "mompoly/bijection.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace mompoly {

int offset(const FamilySpec& spec, int i, int j) {
  if (i < 1 || i > spec.row_length(j)) throw IndexError("cell outside the pattern");
  const int kq = spec.kq();
  if (spec.group() == Group::U) return 2 * kq + 1 - std::abs(kq - j) - 2 * i;
  return 2 * kq + 2 - 2 * i - std::abs(2 * kq - j);
}

namespace {

Pattern shifted(const Pattern& p, int sign) {
  const auto& spec = p.spec();
  std::vector<std::vector<std::int64_t>> rows;
  for (int j = 1; j <= spec.row_count(); ++j) {
    std::vector<std::int64_t> row;
    for (int i = 1; i <= spec.row_length(j); ++i) row.push_back(p.entry(i, j) + sign * offset(spec, i, j));
    rows.push_back(std::move(row));
  }
  return Pattern::from_rows(spec, p.dilation() + sign * spec.bijection_shift(), rows);
}

}  // namespace

Pattern apply_bijection(const Pattern& p) {
  if (auto why = membership_violation(p, Strictness::lax)) {
    throw DomainError("bijection input is not a lax member: " + *why);
  }
  return shifted(p, +1);
}

Pattern apply_inverse(const Pattern& u) {
  if (u.dilation() < u.spec().bijection_shift()) {
    throw DomainError("inverse bijection needs dilation at least " +
                      std::to_string(u.spec().bijection_shift()));
  }
  if (auto why = membership_violation(u, Strictness::strict)) {
    throw DomainError("inverse bijection input is not a strict member: " + *why);
  }
  // Subtracting offsets from a strict pattern may break row ordering only if
  // the claim under test is false; surface that as a domain error too.
  try {
    return shifted(u, -1);
  } catch (const DomainError& e) {
    throw DomainError(std::string("inverse image is not a pattern: ") + e.what());
  }
}

VerdictReport verify_bijectivity(const FamilySpec& spec, std::int64_t dilation,
                                 const EnumerateOptions& options) {
  Json par = spec_json(spec);
  par["N"] = dilation;
  VerdictReport report("bijection", par);
  const std::int64_t target = dilation + spec.bijection_shift();
  const auto lax = enumerate_all(spec, dilation, Strictness::lax, options);
  const auto strict = enumerate_all(spec, target, Strictness::strict, options);

  std::set<Pattern> images;
  for (const auto& p : lax) {
    const Pattern u = shifted(p, +1);
    if (auto why = membership_violation(u, Strictness::strict)) {
      report.fail(Json{{"check", "forward_membership"}, {"pattern", p.to_string()},
                       {"image", u.to_string()}, {"reason", *why}});
      continue;
    }
    images.insert(u);
    const Pattern back = apply_inverse(u);
    report.expect(back == p, Json{{"check", "inverse_after_forward"}, {"pattern", p.to_string()},
                                  {"round_trip", back.to_string()}});
  }
  std::set<Pattern> strict_set(strict.begin(), strict.end());
  for (const auto& u : strict) {
    Pattern back = u;
    try {
      back = shifted(u, -1);
    } catch (const DomainError& e) {
      report.fail(Json{{"check", "inverse_membership"}, {"pattern", u.to_string()},
                       {"reason", e.what()}});
      continue;
    }
    if (auto why = membership_violation(back, Strictness::lax)) {
      report.fail(Json{{"check", "inverse_membership"}, {"pattern", u.to_string()},
                       {"image", back.to_string()}, {"reason", *why}});
      continue;
    }
    const Pattern again = shifted(back, +1);
    report.expect(again == u, Json{{"check", "forward_after_inverse"}, {"pattern", u.to_string()},
                                   {"round_trip", again.to_string()}});
  }
  report.expect(images.size() == lax.size(),
                Json{{"check", "injective"}, {"lax", lax.size()}, {"distinct_images", images.size()}});
  report.expect(images == strict_set, Json{{"check", "image_equals_strict_family"},
                                           {"images", images.size()}, {"strict", strict.size()}});
  report.expect(lax.size() == strict.size(),
                Json{{"check", "cardinality"}, {"lax", lax.size()}, {"strict", strict.size()}});
  report.detail()["lax_count"] = lax.size();
  report.detail()["strict_count"] = strict.size();
  report.detail()["strict_dilation"] = target;
  return report;
}

}  // namespace mompoly
