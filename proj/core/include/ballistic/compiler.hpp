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
#include <vector>

#include <Eigen/Dense>

#include "ballistic/circuit.hpp"

namespace ballistic {

/// A single-qubit unitary written over {H, P}: u = exp(i*global_phase) * (product of sequence).
struct DecompositionResult {
  std::vector<Instruction> sequence;
  double global_phase = 0.0;
  double residual = 0.0;
};

/// Euler z-x-z split of `u`, realized as P(a) H P(b) H P(c) (time order
/// P(c) first). Zero phases and the H pair for b = 0 are dropped.
DecompositionResult decompose_1q(const Eigen::Matrix2cd& u, int qubit = 0);

/// Lowers an arbitrary two-qubit unitary on (a, b) to {H, P, CP}. Targets must
/// be neighbouring wires. `a` is the most significant bit of `u`'s index.
DecompositionResult synthesize_2q(const Eigen::Matrix4cd& u, int a, int b);

struct RoutedCircuit {
  CircuitIR circuit;
  /// The input unitary equals exp(i*global_phase) times the routed one.
  double global_phase = 0.0;
  std::size_t swaps_inserted = 0;
  std::size_t two_qubit_gates = 0;
};

/// Brings every distant two-qubit gate next to its partner by a SWAP chain,
/// applies it, and swaps back; SWAP and CNOT are then lowered so the result
/// only contains H, P and CP on neighbouring wires.
RoutedCircuit route_lnn(const CircuitIR& circuit);

inline constexpr int kMaxUnitaryQubits = 10;

/// Full 2^n x 2^n unitary of the circuit (n <= 10), qubit 0 most significant.
Eigen::MatrixXcd circuit_unitary(const CircuitIR& circuit);

struct EquivalenceReport {
  bool equivalent = false;
  /// Max-entry distance after aligning the global phase.
  double distance = 0.0;
  /// Phase theta with U(a) ~ exp(i*theta) U(b).
  double phase = 0.0;
};

/// Phase-quotiented comparison of two circuits; theta is taken from
/// arg tr(U(b)^H U(a)).
EquivalenceReport verify_equivalence(const CircuitIR& a, const CircuitIR& b, double tol);

/// Same comparison for explicit matrices.
EquivalenceReport compare_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                      double tol);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

}  // namespace ballistic
