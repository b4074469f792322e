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

#ifndef MOMPOLY_POLYTOPE_HPP_
#define MOMPOLY_POLYTOPE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mompoly/exact_linalg.hpp"
#include "mompoly/types.hpp"
#include "mompoly/verdict.hpp"

namespace mompoly {

enum class FaceKind { lower_bound, upper_bound, interlacing, row_order };
enum class Mode { closed, interior };

std::string_view to_string(FaceKind kind);

// Affine function of the free variables and the dilation t.
struct AffineForm {
  RatVector coeff;
  BigRat dilation_coeff;

  BigRat evaluate(std::span<const BigRat> x, const BigRat& dilation) const;
};

// coeff . x + dilation_coeff * t >= 0, or > 0 in interior mode.
//   lower_bound:  x_a >= 0
//   upper_bound:  x_a <= t
//   interlacing, row_order:  x_a >= x_b
struct Inequality {
  FaceKind kind;
  Cell a;
  std::optional<Cell> b;
  AffineForm form;

  std::string label() const;
};

// H-representation of the polytope in the coordinates of the free cells.
// Fixed cells are affine forms solved from the sum constraints.
class ConstraintSystem {
 public:
  explicit ConstraintSystem(const FamilySpec& spec);

  const FamilySpec& spec() const { return spec_; }
  const std::vector<Cell>& variables() const { return variables_; }
  std::size_t dimension() const { return variables_.size(); }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }
  const AffineForm& cell_form(Cell c) const;
  std::optional<std::size_t> find(FaceKind kind, Cell a, std::optional<Cell> b = {}) const;

  // ShapeError when point.size() != dimension().
  bool member(std::span<const BigRat> point, Mode mode, const BigRat& dilation = 1) const;
  // Index of the first violated inequality.
  std::optional<std::size_t> violation(std::span<const BigRat> point, Mode mode,
                                       const BigRat& dilation = 1) const;

  // One inequality per line: integer coefficients, relation, rational bound.
  std::string export_hrep() const;

 private:
  FamilySpec spec_;
  std::vector<Cell> variables_;
  std::map<Cell, AffineForm> cells_;
  std::vector<Inequality> inequalities_;
};

ConstraintSystem build_system(const FamilySpec& spec);

// Integer points of N*V (closed) or its interior by backtracking over the
// free variables.
BigInt lattice_count_via_polytope(const ConstraintSystem& system, std::int64_t dilation,
                                  Mode mode, std::uint64_t node_budget = 50'000'000);

struct VertexWitness {
  BigRat dilation = 1;
  RatVector point;
  std::vector<std::size_t> tight;  // indices into system.inequalities()
  std::string construction;
};

VerdictReport verify_vertex_witness(const ConstraintSystem& system, const VertexWitness& witness);

// All cells 1/2 for U with k >= 2.
VertexWitness unitary_half_witness(const ConstraintSystem& system);
// Two half-integral end cells for SP with k >= 2.
VertexWitness symplectic_half_witness(const ConstraintSystem& system);
// Smallest t in [q, 2q] not dividing 4q^2, or 0 if there is none.
int dilated_witness_divisor(int q);
// Vertex of 4q * V for U(2;q) whose middle row is t copies of 4q^2/t.
VertexWitness unitary_dilated_witness(const ConstraintSystem& system);

}  // namespace mompoly

#endif  // MOMPOLY_POLYTOPE_HPP_
