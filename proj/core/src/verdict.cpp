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

#include "mompoly/verdict.hpp"

namespace mompoly {

VerdictReport::VerdictReport(std::string claim, Json parameters)
    : claim_(std::move(claim)), parameters_(std::move(parameters)) {}

void VerdictReport::fail(Json witness) {
  pass_ = false;
  witnesses_.push_back(std::move(witness));
}

Json VerdictReport::to_json() const {
  Json j;
  j["schema"] = std::string(kVerdictSchema);
  j["claim"] = claim_;
  j["parameters"] = parameters_;
  j["pass"] = pass_;
  j["witnesses"] = witnesses_;
  j["detail"] = detail_;
  return j;
}

Json spec_json(const FamilySpec& spec) {
  Json j;
  j["group"] = std::string(to_string(spec.group()));
  j["k"] = spec.k();
  j["q"] = spec.q();
  return j;
}

Json rational_list(const std::vector<BigRat>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json poly_json(const FamilySpec& spec, const RationalPoly& p) {
  Json j;
  j["schema"] = std::string(kPolySchema);
  j["group"] = std::string(to_string(spec.group()));
  j["k"] = spec.k();
  j["q"] = spec.q();
  if (p.is_zero()) {
    j["degree"] = nullptr;
  } else {
    j["degree"] = p.degree();
  }
  j["coeffs"] = rational_list(p.coeffs());
  return j;
}

RationalPoly poly_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kPolySchema) {
      throw InputError("unsupported polynomial schema '" + j.at("schema").get<std::string>() + "'");
    }
    std::vector<BigRat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    RationalPoly p(std::move(coeffs));
    const auto& deg = j.at("degree");
    if ((deg.is_null() && !p.is_zero()) || (!deg.is_null() && deg.get<int>() != p.degree())) {
      throw InputError("polynomial degree field disagrees with its coefficients");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace mompoly
