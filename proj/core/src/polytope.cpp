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

#include "mompoly/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mompoly/sum_constraints.hpp"

namespace mompoly {

std::string_view to_string(FaceKind kind) {
  switch (kind) {
    case FaceKind::lower_bound:
      return "lower_bound";
    case FaceKind::upper_bound:
      return "upper_bound";
    case FaceKind::interlacing:
      return "interlacing";
    case FaceKind::row_order:
      return "row_order";
  }
  return "?";
}

namespace {

std::string cell_name(Cell c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

AffineForm unit(std::size_t n, std::size_t var) {
  AffineForm f{RatVector(n), 0};
  f.coeff[var] = 1;
  return f;
}

AffineForm difference(const AffineForm& a, const AffineForm& b) {
  AffineForm f = a;
  for (std::size_t n = 0; n < f.coeff.size(); ++n) f.coeff[n] -= b.coeff[n];
  f.dilation_coeff -= b.dilation_coeff;
  return f;
}

BigInt floor_div(const BigRat& r) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

BigInt ceil_div(const BigRat& r) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

}  // namespace

BigRat AffineForm::evaluate(std::span<const BigRat> x, const BigRat& dilation) const {
  BigRat total = dilation_coeff * dilation;
  for (std::size_t n = 0; n < coeff.size(); ++n) {
    if (coeff[n] != 0) total += coeff[n] * x[n];
  }
  return total;
}

std::string Inequality::label() const {
  std::string s = std::string(to_string(kind)) + " " + cell_name(a);
  if (b) s += " " + cell_name(*b);
  return s;
}

ConstraintSystem::ConstraintSystem(const FamilySpec& spec)
    : spec_(spec), variables_(free_index_set(spec)) {
  const std::size_t n = variables_.size();
  for (std::size_t v = 0; v < n; ++v) cells_.emplace(variables_[v], unit(n, v));

  // Solve the sum constraints for the fixed cells: A_F x_F = rhs t - A_V x_V.
  const auto fixed = fixed_index_set(spec);
  const auto forms = SumConstraints::for_spec(spec).forms();
  if (forms.size() != fixed.size()) throw Error("fixed cell count differs from constraint count");
  const std::size_t f = fixed.size();
  if (f > 0) {
    RatMatrix a_fixed(f, RatVector(f));
    RatMatrix a_free(f, RatVector(n));
    RatVector rhs(f);
    for (std::size_t r = 0; r < f; ++r) {
      for (const Cell& c : all_cells(spec)) {
        const BigRat coeff(forms[r].row_coeff[static_cast<std::size_t>(c.j)]);
        if (coeff == 0) continue;
        auto it = std::find(fixed.begin(), fixed.end(), c);
        if (it != fixed.end()) {
          a_fixed[r][static_cast<std::size_t>(it - fixed.begin())] = coeff;
        } else {
          auto vt = std::find(variables_.begin(), variables_.end(), c);
          a_free[r][static_cast<std::size_t>(vt - variables_.begin())] = coeff;
        }
      }
      rhs[r] = forms[r].rhs_per_dilation;
    }
    std::vector<AffineForm> solved(f, AffineForm{RatVector(n), 0});
    for (std::size_t col = 0; col <= n; ++col) {
      RatVector b(f);
      for (std::size_t r = 0; r < f; ++r) b[r] = col < n ? BigRat(-a_free[r][col]) : rhs[r];
      const auto sol = solve(a_fixed, b);
      if (sol.status != SolveStatus::unique) {
        throw Error("sum constraints do not determine the fixed cells of " + spec.label());
      }
      for (std::size_t x = 0; x < f; ++x) {
        if (col < n) {
          solved[x].coeff[col] = sol.x[x];
        } else {
          solved[x].dilation_coeff = sol.x[x];
        }
      }
    }
    for (std::size_t x = 0; x < f; ++x) cells_.emplace(fixed[x], std::move(solved[x]));
  }

  auto add = [&](FaceKind kind, Cell a, std::optional<Cell> b, AffineForm form) {
    inequalities_.push_back(Inequality{kind, a, b, std::move(form)});
  };
  for (const Cell& c : all_cells(spec)) {
    const AffineForm& x = cells_.at(c);
    add(FaceKind::lower_bound, c, std::nullopt, x);
    AffineForm upper = x;
    for (auto& v : upper.coeff) v = -v;
    upper.dilation_coeff = 1 - upper.dilation_coeff;
    add(FaceKind::upper_bound, c, std::nullopt, std::move(upper));
  }
  const int R = spec.row_count();
  for (int j = 1; j < R; ++j) {
    const bool growing = j + 1 <= spec.middle_row();
    const int lo_row = growing ? j : j + 1;
    const int up_row = growing ? j + 1 : j;
    const int m = spec.row_length(lo_row);
    const int L = spec.row_length(up_row);
    for (int i = 1; i <= m; ++i) {
      const Cell mu{i, lo_row};
      add(FaceKind::interlacing, Cell{i, up_row}, mu,
          difference(cells_.at(Cell{i, up_row}), cells_.at(mu)));
      if (i + 1 <= L) {
        add(FaceKind::interlacing, mu, Cell{i + 1, up_row},
            difference(cells_.at(mu), cells_.at(Cell{i + 1, up_row})));
      }
    }
  }
  for (int j = 1; j <= R; ++j) {
    for (int i = 1; i < spec.row_length(j); ++i) {
      add(FaceKind::row_order, Cell{i, j}, Cell{i + 1, j},
          difference(cells_.at(Cell{i, j}), cells_.at(Cell{i + 1, j})));
    }
  }
}

const AffineForm& ConstraintSystem::cell_form(Cell c) const {
  auto it = cells_.find(c);
  if (it == cells_.end()) throw IndexError("cell " + cell_name(c) + " not in " + spec_.label());
  return it->second;
}

std::optional<std::size_t> ConstraintSystem::find(FaceKind kind, Cell a,
                                                  std::optional<Cell> b) const {
  for (std::size_t n = 0; n < inequalities_.size(); ++n) {
    const auto& e = inequalities_[n];
    if (e.kind == kind && e.a == a && e.b == b) return n;
  }
  return std::nullopt;
}

std::optional<std::size_t> ConstraintSystem::violation(std::span<const BigRat> point, Mode mode,
                                                       const BigRat& dilation) const {
  if (point.size() != dimension()) {
    throw ShapeError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(dimension()));
  }
  for (std::size_t n = 0; n < inequalities_.size(); ++n) {
    const BigRat v = inequalities_[n].form.evaluate(point, dilation);
    if (mode == Mode::closed ? v < 0 : v <= 0) return n;
  }
  return std::nullopt;
}

bool ConstraintSystem::member(std::span<const BigRat> point, Mode mode,
                              const BigRat& dilation) const {
  return !violation(point, mode, dilation).has_value();
}

std::string ConstraintSystem::export_hrep() const {
  std::ostringstream os;
  os << "# mompoly hrep group=" << to_string(spec_.group()) << " k=" << spec_.k()
     << " q=" << spec_.q() << " dim=" << dimension() << " rows=" << inequalities_.size() << "\n";
  os << "# variables";
  for (const Cell& c : variables_) os << ' ' << cell_name(c);
  os << "\n";
  for (const auto& e : inequalities_) {
    BigInt den = 1;
    for (const auto& c : e.form.coeff) den = lcm(den, c.get_den());
    for (const auto& c : e.form.coeff) os << BigInt(c * den).get_str() << ' ';
    os << ">= " << to_string(BigRat(-e.form.dilation_coeff * den)) << "  # " << e.label() << "\n";
  }
  return os.str();
}

ConstraintSystem build_system(const FamilySpec& spec) { return ConstraintSystem(spec); }

BigInt lattice_count_via_polytope(const ConstraintSystem& system, std::int64_t dilation, Mode mode,
                                  std::uint64_t node_budget) {
  if (dilation < 0) throw DomainError("dilation must be non-negative");
  const std::size_t n = system.dimension();
  const BigRat t(dilation);
  // Every inequality is checked once its last variable is assigned; those
  // with no variables at all are checked up front.
  std::vector<std::vector<std::size_t>> by_last(n);
  for (std::size_t e = 0; e < system.inequalities().size(); ++e) {
    const auto& form = system.inequalities()[e].form;
    std::optional<std::size_t> last;
    for (std::size_t v = 0; v < n; ++v) {
      if (form.coeff[v] != 0) last = v;
    }
    if (last) {
      by_last[*last].push_back(e);
      continue;
    }
    const BigRat c = form.dilation_coeff * t;
    if (mode == Mode::closed ? c < 0 : c <= 0) return 0;
  }
  if (n == 0) return 1;
  RatVector x(n);
  BigInt total = 0;
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    BigInt lo = 0, hi = dilation;
    for (std::size_t e : by_last[v]) {
      const auto& form = system.inequalities()[e].form;
      BigRat rest = form.dilation_coeff * t;
      for (std::size_t u = 0; u < v; ++u) {
        if (form.coeff[u] != 0) rest += form.coeff[u] * x[u];
      }
      const BigRat& c = form.coeff[v];
      const BigRat bound = -rest / c;
      if (c > 0) {
        BigInt b = ceil_div(bound);
        if (mode == Mode::interior && BigRat(b) == bound) b += 1;
        lo = std::max(lo, b);
      } else {
        BigInt b = floor_div(bound);
        if (mode == Mode::interior && BigRat(b) == bound) b -= 1;
        hi = std::min(hi, b);
      }
    }
    for (BigInt val = lo; val <= hi; ++val) {
      if (++nodes > node_budget) {
        throw BudgetExceeded("polytope lattice search exceeded " + std::to_string(node_budget) +
                                 " nodes for " + system.spec().label() + " N=" +
                                 std::to_string(dilation),
                             nodes, node_budget);
      }
      x[v] = val;
      if (v + 1 == n) {
        total += 1;
      } else {
        self(self, v + 1);
      }
    }
  };
  rec(rec, 0);
  return total;
}

VerdictReport verify_vertex_witness(const ConstraintSystem& system, const VertexWitness& w) {
  Json par = spec_json(system.spec());
  par["dilation"] = to_string(w.dilation);
  par["construction"] = w.construction;
  VerdictReport report("vertex", par);
  const std::size_t n = system.dimension();
  if (w.point.size() != n) {
    report.fail(Json{{"check", "shape"}, {"coordinates", w.point.size()}, {"expected", n}});
    return report;
  }
  if (auto bad = system.violation(w.point, Mode::closed, w.dilation)) {
    const auto& e = system.inequalities()[*bad];
    report.fail(Json{{"check", "feasible"}, {"inequality", e.label()},
                     {"value", to_string(e.form.evaluate(w.point, w.dilation))}});
  }
  RatMatrix rows;
  for (std::size_t idx : w.tight) {
    const auto& e = system.inequalities().at(idx);
    const BigRat v = e.form.evaluate(w.point, w.dilation);
    report.expect(v == 0, Json{{"check", "tight"}, {"inequality", e.label()}, {"value", to_string(v)}});
    rows.push_back(e.form.coeff);
  }
  const auto r = rank(rows, n);
  if (r < n) {
    const auto kernel = nullspace(rows, n);
    Json dir = Json::object();
    for (std::size_t v = 0; v < n; ++v) {
      if (kernel.front()[v] != 0) dir[cell_name(system.variables()[v])] = to_string(kernel.front()[v]);
    }
    report.fail(Json{{"check", "unique"}, {"rank", r}, {"dimension", n}, {"nullspace_direction", dir}});
  }
  Json fractional = Json::object();
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_integer(w.point[v])) fractional[cell_name(system.variables()[v])] = to_string(w.point[v]);
  }
  report.expect(!fractional.empty(), Json{{"check", "non_integral"}, {"point", rational_list(w.point)}});
  report.detail()["rank"] = r;
  report.detail()["dimension"] = n;
  report.detail()["tight_count"] = w.tight.size();
  report.detail()["non_integral_coordinates"] = fractional;
  return report;
}

namespace {

class WitnessBuilder {
 public:
  explicit WitnessBuilder(const ConstraintSystem& s) : s_(s) {}

  void set(Cell c, BigRat v) { values_[c] = std::move(v); }
  const BigRat& get(Cell c) const { return values_.at(c); }
  void tight(FaceKind kind, Cell a, std::optional<Cell> b = {}) {
    auto idx = s_.find(kind, a, b);
    if (!idx) {
      throw Error("no " + std::string(to_string(kind)) + " face " + cell_name(a) +
                  (b ? " " + cell_name(*b) : "") + " in " + s_.spec().label());
    }
    tight_.push_back(*idx);
  }

  VertexWitness finish(BigRat dilation, std::string construction) {
    VertexWitness w;
    w.dilation = std::move(dilation);
    for (const Cell& c : s_.variables()) w.point.push_back(values_.at(c));
    std::sort(tight_.begin(), tight_.end());
    tight_.erase(std::unique(tight_.begin(), tight_.end()), tight_.end());
    w.tight = std::move(tight_);
    w.construction = std::move(construction);
    return w;
  }

 private:
  const ConstraintSystem& s_;
  std::map<Cell, BigRat> values_;
  std::vector<std::size_t> tight_;
};

}  // namespace

VertexWitness unitary_half_witness(const ConstraintSystem& system) {
  const auto& spec = system.spec();
  if (spec.group() != Group::U || spec.k() < 2) {
    throw DomainError("the half-integral unitary witness needs U with k >= 2");
  }
  WitnessBuilder b(system);
  for (const Cell& c : all_cells(spec)) b.set(c, make_rational(1, 2));
  for (const auto& e : system.inequalities()) {
    if (e.kind == FaceKind::interlacing) b.tight(e.kind, e.a, e.b);
  }
  for (int l = 1; l <= spec.k() - 1; ++l) {
    const int row = 2 * spec.q() * l;
    b.tight(FaceKind::row_order, Cell{1, row}, Cell{2, row});
  }
  return b.finish(1, "all entries 1/2");
}

VertexWitness symplectic_half_witness(const ConstraintSystem& system) {
  const auto& spec = system.spec();
  if (spec.group() != Group::SP || spec.k() < 2) {
    throw DomainError("the half-integral symplectic witness needs SP with k >= 2");
  }
  const int R = spec.row_count();
  WitnessBuilder b(system);
  for (const Cell& c : all_cells(spec)) {
    if (c.i == 1 && (c.j == 1 || c.j == R)) {
      b.set(c, make_rational(1, 2));
    } else if (c.i == 1) {
      b.set(c, 1);
      b.tight(FaceKind::upper_bound, c);
    } else {
      b.set(c, 0);
      b.tight(FaceKind::lower_bound, c);
    }
  }
  return b.finish(1, "end cells 1/2, first column 1, rest 0");
}

int dilated_witness_divisor(int q) {
  const long long target = 4LL * q * q;
  for (int t = q; t <= 2 * q; ++t) {
    if (target % t != 0) return t;
  }
  return 0;
}

VertexWitness unitary_dilated_witness(const ConstraintSystem& system) {
  const auto& spec = system.spec();
  if (spec.group() != Group::U || spec.k() != 2) {
    throw DomainError("the dilated unitary witness needs U with k = 2");
  }
  const int q = spec.q();
  const int t = dilated_witness_divisor(q);
  if (t == 0) {
    throw DomainError("every t in [q, 2q] divides 4q^2 for q=" + std::to_string(q));
  }
  const int mid = spec.middle_row();
  const int R = spec.row_count();
  const BigRat a = make_rational(BigInt(4L * q * q), t);
  WitnessBuilder b(system);
  for (int i = 1; i <= spec.row_length(mid); ++i) {
    const Cell c{i, mid};
    if (i <= t) {
      b.set(c, a);
      if (i < t) b.tight(FaceKind::row_order, c, Cell{i + 1, mid});
    } else {
      b.set(c, 0);
      b.tight(FaceKind::lower_bound, c);
    }
  }
  // Walk outward from the middle row. Each cell takes the lower end of its
  // interlacing interval; the face that pins it there is recorded as tight.
  auto fill = [&](int row, int from) {
    for (int i = 1; i <= spec.row_length(row); ++i) {
      const Cell c{i, row};
      const Cell above{i, from};
      const Cell next{i + 1, from};
      const BigRat& hi = b.get(above);
      const BigRat& lo = b.get(next);
      if (lo == hi) {
        b.set(c, hi);
        b.tight(FaceKind::interlacing, above, c);
      } else if (lo == 0) {
        b.set(c, 0);
        b.tight(FaceKind::lower_bound, c);
      } else {
        b.set(c, lo);
        b.tight(FaceKind::interlacing, c, next);
      }
    }
  };
  for (int row = mid - 1; row >= 1; --row) fill(row, row + 1);
  for (int row = mid + 1; row <= R; ++row) fill(row, row - 1);
  return b.finish(4 * q, "middle row " + std::to_string(t) + " x " + to_string(a));
}

}  // namespace mompoly
