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

#include "mompoly/ehrhart.hpp"

#include <set>

namespace mompoly {

namespace {

Json params(const FamilySpec& spec) {
  Json j = spec_json(spec);
  j["degree"] = spec.dimension();
  return j;
}

std::string str(const BigRat& r) { return to_string(r); }

}  // namespace

RationalPoly interpolate_points(std::span<const std::pair<BigRat, BigRat>> points) {
  const std::size_t n = points.size();
  if (n == 0) throw InputError("interpolation needs at least one node");
  std::set<BigRat> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x).second) throw InputError("duplicate interpolation node " + str(x));
  }
  std::vector<BigRat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  RationalPoly p = RationalPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * RationalPoly::linear(-points[i].first, 1) + RationalPoly::constant(dd[i]);
  }
  return p;
}

RationalPoly interpolate(const CountTable& table, int degree) {
  if (degree < 0) throw InputError("interpolation degree must be non-negative");
  std::vector<std::pair<BigRat, BigRat>> pts;
  for (int n = 0; n <= degree; ++n) {
    if (!table.contains(n)) {
      throw InputError("interpolation node N=" + std::to_string(n) + " missing for " +
                       table.spec().label());
    }
    pts.emplace_back(BigRat(n), BigRat(table.at(n)));
  }
  return interpolate_points(pts);
}

RationalPoly fit(const FamilySpec& spec, Counter& counter) {
  return interpolate(counter.series(spec, spec.dimension(), Strictness::lax), spec.dimension());
}

QuasiPoly fit_quasi(const CountTable& table, int period, int degree) {
  if (period < 1) throw InputError("period must be at least 1");
  if (degree < 0) throw InputError("degree must be non-negative");
  std::vector<std::vector<std::pair<BigRat, BigRat>>> classes(static_cast<std::size_t>(period));
  for (const auto& [n, v] : table.entries()) {
    if (n < 0) continue;
    auto& cls = classes[static_cast<std::size_t>(n % period)];
    if (cls.size() < static_cast<std::size_t>(degree) + 1) cls.emplace_back(BigRat(n), BigRat(v));
  }
  std::vector<RationalPoly> parts;
  for (int r = 0; r < period; ++r) {
    const auto& cls = classes[static_cast<std::size_t>(r)];
    if (cls.size() < static_cast<std::size_t>(degree) + 1) {
      throw InputError("residue class " + std::to_string(r) + " mod " + std::to_string(period) +
                       " has " + std::to_string(cls.size()) + " nodes, needs " +
                       std::to_string(degree + 1));
    }
    parts.push_back(interpolate_points(cls));
  }
  return QuasiPoly(std::move(parts));
}

VerdictReport verify_polynomiality(const FamilySpec& spec, int extra, Counter& counter) {
  if (extra < 1) throw InputError("at least one extra node is required");
  const int d = spec.dimension();
  Json p = params(spec);
  p["extra"] = extra;
  VerdictReport report("polynomiality", p);
  const auto table = counter.series(spec, d + extra, Strictness::lax);
  const auto poly = interpolate(table, d);
  report.expect(poly.degree() == d, Json{{"fitted_degree", poly.degree()}, {"expected_degree", d}});
  Json checked = Json::array();
  for (std::int64_t n = d + 1; n <= d + extra; ++n) {
    const BigRat predicted = poly(n);
    const BigRat actual(table.at(n));
    checked.push_back(n);
    report.expect(predicted == actual,
                  Json{{"N", n}, {"count", table.at(n).get_str()}, {"predicted", str(predicted)}});
  }
  report.detail()["fit_nodes"] = Json{{"from", 0}, {"to", d}};
  report.detail()["checked_nodes"] = checked;
  report.detail()["polynomial"] = poly_json(spec, poly);
  return report;
}

VerdictReport verify_period_collapse(const FamilySpec& spec, int period, Counter& counter) {
  const int d = spec.dimension();
  Json p = params(spec);
  p["period"] = period;
  VerdictReport report("period_collapse", p);
  const std::int64_t n_max = static_cast<std::int64_t>(d + 1) * period - 1;
  const auto quasi = fit_quasi(counter.series(spec, n_max, Strictness::lax), period, d);
  Json parts = Json::array();
  for (int r = 0; r < period; ++r) {
    const auto& c = quasi.constituents()[static_cast<std::size_t>(r)];
    parts.push_back(rational_list(c.coeffs()));
    report.expect(c == quasi.constituents().front(),
                  Json{{"residue", r}, {"constituent", rational_list(c.coeffs())},
                       {"residue_0", rational_list(quasi.constituents().front().coeffs())}});
  }
  report.detail()["nodes"] = Json{{"from", 0}, {"to", n_max}};
  report.detail()["constituents"] = parts;
  return report;
}

VerdictReport verify_reciprocity(const FamilySpec& spec, const RationalPoly& p, std::int64_t n_lo,
                                 std::int64_t n_hi, Counter& counter) {
  Json par = params(spec);
  par["N_range"] = Json{{"from", n_lo}, {"to", n_hi}};
  VerdictReport report("reciprocity", par);
  const int sign = spec.dimension() % 2 == 0 ? 1 : -1;
  std::vector<std::int64_t> ns;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) ns.push_back(n);
  const auto strict = counter.table(spec, ns, Strictness::strict);
  Json rows = Json::array();
  for (auto n : ns) {
    const BigRat lhs = p(-n);
    const BigRat rhs = sign * BigRat(strict.at(n));
    rows.push_back(Json{{"N", n}, {"P(-N)", str(lhs)}, {"strict_count", strict.at(n).get_str()}});
    report.expect(lhs == rhs, Json{{"N", n}, {"P(-N)", str(lhs)}, {"expected", str(rhs)},
                                   {"strict_count", strict.at(n).get_str()}});
  }
  report.detail()["sign"] = sign;
  report.detail()["values"] = rows;
  return report;
}

VerdictReport verify_integer_roots(const FamilySpec& spec, const RationalPoly& p) {
  VerdictReport report("integer_roots", params(spec));
  if (p.is_zero()) {
    report.fail(Json{{"polynomial", "zero"}});
    return report;
  }
  const int last = spec.vanishing_root_count();
  Json zeros = Json::array();
  Json mult = Json::object();
  for (int m = 1; m <= last; ++m) {
    const BigRat v = p(-m);
    report.expect(v == 0, Json{{"z", -m}, {"P(z)", str(v)}, {"expected", "0"}});
    zeros.push_back(-m);
    mult[std::to_string(-m)] = p.root_multiplicity(-m);
  }
  const int band_hi = last + 2 * spec.kq() + 2;
  for (int m = last + 1; m <= band_hi; ++m) {
    const BigRat v = p(-m);
    report.expect(v != 0, Json{{"z", -m}, {"P(z)", "0"}, {"expected", "non-zero"}});
  }
  for (int n = 0; n <= spec.dimension(); ++n) {
    const BigRat v = p(n);
    report.expect(v >= 1, Json{{"z", n}, {"P(z)", str(v)}, {"expected", ">= 1"}});
  }
  report.detail()["zeros"] = zeros;
  report.detail()["multiplicities"] = mult;
  report.detail()["guard_band"] = Json{{"from", -band_hi}, {"to", -(last + 1)}};
  report.detail()["positive_range"] = Json{{"from", 0}, {"to", spec.dimension()}};
  if (auto roots = p.rational_roots()) {
    Json rr = Json::array();
    for (const auto& [r, m] : *roots) rr.push_back(Json{{"root", str(r)}, {"multiplicity", m}});
    report.detail()["rational_roots"] = rr;
  } else {
    report.detail()["rational_roots"] = "search skipped: coefficients too large";
  }
  return report;
}

RationalPoly symmetry_defect(const FamilySpec& spec, const RationalPoly& p) {
  const RationalPoly shifted = p.taylor_shift(-spec.symmetry_center());
  const RationalPoly mirrored = shifted.reflect();
  return spec.dimension() % 2 == 0 ? shifted - mirrored : shifted + mirrored;
}

VerdictReport verify_symmetry(const FamilySpec& spec, const RationalPoly& p) {
  VerdictReport report("symmetry", params(spec));
  const RationalPoly q = symmetry_defect(spec, p);
  for (int n = 0; n <= std::max(q.degree(), -1); ++n) {
    if (q.coeff(n) != 0) report.fail(Json{{"s_power", n}, {"coefficient", str(q.coeff(n))}});
  }
  report.expect(!p.is_zero(), Json{{"polynomial", "zero"}});
  report.detail()["center"] = str(-spec.symmetry_center());
  report.detail()["sign"] = spec.dimension() % 2 == 0 ? 1 : -1;
  report.detail()["shifted"] = rational_list(p.taylor_shift(-spec.symmetry_center()).coeffs());
  return report;
}

}  // namespace mompoly
