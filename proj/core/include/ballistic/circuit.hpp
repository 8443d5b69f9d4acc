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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ballistic/gates.hpp"

namespace ballistic {

enum class GateKind { kH, kP, kCP, kCNOT, kSWAP, kU1, kU2 };

/// One circuit step. `params` holds the phase for P and CP; `matrix` is only
/// populated for the explicit-unitary kinds U1 and U2.
struct Instruction {
  GateKind kind = GateKind::kH;
  std::vector<double> params;
  std::vector<int> targets;
  Eigen::MatrixXcd matrix;

  static Instruction h(int q);
  static Instruction p(int q, double phi);
  static Instruction cp(int a, int b, double phi);
  static Instruction cnot(int control, int target);
  static Instruction swap(int a, int b);
  static Instruction u1(int q, const Eigen::Matrix2cd& m);
  static Instruction u2(int a, int b, const Eigen::Matrix4cd& m);

  int arity() const { return kind == GateKind::kH || kind == GateKind::kP || kind == GateKind::kU1 ? 1 : 2; }
  bool operator==(const Instruction& other) const;
};

struct CircuitIR {
  int num_qubits = 1;
  std::vector<Instruction> instructions;

  /// Throws CircuitError naming the first bad instruction.
  void validate() const;

  /// True when every two-qubit instruction acts on neighbouring wires.
  bool is_nearest_neighbor() const;

  CircuitIR& add(Instruction inst) {
    instructions.push_back(std::move(inst));
    return *this;
  }
  bool operator==(const CircuitIR& other) const = default;
};

const char* to_string(GateKind kind);

/// The gate matrix an instruction applies.
GateUnitary gate_for(const Instruction& inst);

/// Parses the line-oriented circuit text format:
///
///     qubits N
///     h q
///     p q PHI
///     cp q1 q2 PHI
///     cnot qc qt
///     swap q1 q2
///
/// `#` starts a comment. Throws ParseError on malformed syntax; index range
/// checks are left to CircuitIR::validate.
CircuitIR parse_circuit(std::string_view text);
CircuitIR read_circuit_file(const std::filesystem::path& path);

/// Emits the text format; phases are written in shortest round-trip form.
/// U1/U2 instructions have no text form and raise CircuitError.
std::string to_text(const CircuitIR& circuit);

}  // namespace ballistic
