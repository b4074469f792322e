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

#ifndef MOMPOLY_ERRORS_HPP_
#define MOMPOLY_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mompoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Row or cell index outside the pattern shape.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Rows of incompatible lengths, wrong row counts.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A value is outside the domain an operation accepts (non-members, k < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or insufficient input data (missing interpolation nodes, bad
// cache lines, unparsable polynomials).
class InputError : public Error {
 public:
  using Error::Error;
};

// A node, state or wall-clock budget was exhausted. `used` is the quantity
// that tripped the limit (nodes visited, live DP states, ...).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t used,
                 std::uint64_t limit)
      : Error(what), used_(used), limit_(limit) {}

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t used_;
  std::uint64_t limit_;
};

// The naive and transfer engines disagreed on a count.
class EngineMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace mompoly

#endif  // MOMPOLY_ERRORS_HPP_
