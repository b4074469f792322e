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

#ifndef MOMPOLY_VERDICT_HPP_
#define MOMPOLY_VERDICT_HPP_

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "mompoly/rational_poly.hpp"
#include "mompoly/types.hpp"

namespace mompoly {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVerdictSchema = "mompoly.verdict/1";
inline constexpr std::string_view kPolySchema = "mompoly.poly/1";

// Outcome of checking one claim. A report starts out passing; every failure
// is recorded together with the witness that shows it.
class VerdictReport {
 public:
  VerdictReport(std::string claim, Json parameters);

  const std::string& claim() const { return claim_; }
  const Json& parameters() const { return parameters_; }
  bool pass() const { return pass_; }
  const std::vector<Json>& witnesses() const { return witnesses_; }
  Json& detail() { return detail_; }
  const Json& detail() const { return detail_; }

  void fail(Json witness);
  // Records `witness` as a failure unless `ok`.
  void expect(bool ok, Json witness) {
    if (!ok) fail(std::move(witness));
  }

  Json to_json() const;

 private:
  std::string claim_;
  Json parameters_;
  bool pass_ = true;
  std::vector<Json> witnesses_;
  Json detail_ = Json::object();
};

Json spec_json(const FamilySpec& spec);
Json poly_json(const FamilySpec& spec, const RationalPoly& p);
// Inverse of poly_json; InputError on schema or coefficient problems.
RationalPoly poly_from_json(const Json& j);
Json rational_list(const std::vector<BigRat>& values);

}  // namespace mompoly

#endif  // MOMPOLY_VERDICT_HPP_
