// Copyright 2026 The Ballistic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ballistic {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The transfer-matrix solution degenerates (zero wavenumber inside a layer).
class DegenerateScatteringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A calibration target that no device of the requested kind can reach.
class UnreachableTargetError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coupler geometry that does not realize a 50/50 splitter.
class NotAHadamardError : public std::domain_error {
 public:
  NotAHadamardError(const std::string& what, double fidelity)
      : std::domain_error(what), fidelity_(fidelity) {}
  double fidelity() const noexcept { return fidelity_; }

 private:
  double fidelity_;
};

/// Circuit text that does not parse. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Semantically invalid instruction (bad index, adjacency, arity).
/// `position` is the 0-based instruction index, or npos when not tied to one.
class CircuitError : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit CircuitError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? what
                               : "instruction " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A wave packet hit the edge of the simulation grid.
class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ballistic
