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

#include "ballistic/compiler.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ballistic/errors.hpp"
#include "ballistic/simulator.hpp"

namespace ballistic {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDropTol = 1e-13;
const cplx kI(0.0, 1.0);

Eigen::Matrix2cd rz(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, -0.5 * theta);
  m(1, 1) = std::polar(1.0, 0.5 * theta);
  return m;
}

Eigen::Matrix2cd ry(double theta) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

bool negligible(double phase) { return std::abs(wrap_angle(phase)) < kDropTol; }

void push_phase(std::vector<Instruction>& seq, int q, double phi) {
  if (!negligible(phi)) seq.push_back(Instruction::p(q, wrap_angle(phi)));
}

// Product of a single-qubit sequence in time order.
Eigen::Matrix2cd sequence_matrix(const std::vector<Instruction>& seq) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (const auto& inst : seq) m = gate_for(inst).matrix * m;
  return m;
}

// Accumulates lowered instructions and the global phase they drop.
struct Lowering {
  std::vector<Instruction> out;
  double phase = 0.0;

  void add_cnot(int control, int target) {
    out.push_back(Instruction::h(target));
    out.push_back(Instruction::cp(control, target, kPi));
    out.push_back(Instruction::h(target));
  }

  void add_1q(const Eigen::Matrix2cd& u, int q) {
    DecompositionResult d = decompose_1q(u, q);
    phase += d.global_phase;
    out.insert(out.end(), d.sequence.begin(), d.sequence.end());
  }

  void add(const Instruction& inst) {
    const int a = inst.targets.at(0);
    switch (inst.kind) {
      case GateKind::kH:
      case GateKind::kP:
      case GateKind::kCP:
        out.push_back(inst);
        break;
      case GateKind::kCNOT:
        add_cnot(a, inst.targets[1]);
        break;
      case GateKind::kSWAP:
        add_cnot(a, inst.targets[1]);
        add_cnot(inst.targets[1], a);
        add_cnot(a, inst.targets[1]);
        break;
      case GateKind::kU1:
        add_1q(inst.matrix, a);
        break;
      case GateKind::kU2: {
        DecompositionResult d = synthesize_2q(inst.matrix, a, inst.targets[1]);
        phase += d.global_phase;
        out.insert(out.end(), d.sequence.begin(), d.sequence.end());
        break;
      }
    }
  }

  // Controlled-V with the given control value: V = e^{i delta} Rz(al) Ry(be) Rz(ga),
  // realized as A X B X C on the target with a phase kick on the control.
  void add_controlled(const Eigen::Matrix2cd& v, int control, int target, bool control_value) {
    const double delta0 = 0.5 * std::arg(v.determinant());
    const Eigen::Matrix2cd w = v * std::polar(1.0, -delta0);
    const double beta = 2.0 * std::atan2(std::abs(w(1, 0)), std::abs(w(0, 0)));
    const double sum = std::abs(w(1, 1)) > 1e-14 ? 2.0 * std::arg(w(1, 1)) : 0.0;
    const double diff = std::abs(w(1, 0)) > 1e-14 ? 2.0 * std::arg(w(1, 0)) : 0.0;
    const double alpha = 0.5 * (sum + diff);
    const double gamma = 0.5 * (sum - diff);
    const Eigen::Matrix2cd rebuilt = rz(alpha) * ry(beta) * rz(gamma);
    const double delta = std::arg((rebuilt.adjoint() * v).trace());

    const Eigen::Matrix2cd a_op = rz(alpha) * ry(0.5 * beta);
    const Eigen::Matrix2cd b_op = ry(-0.5 * beta) * rz(-0.5 * (gamma + alpha));
    const Eigen::Matrix2cd c_op = rz(0.5 * (gamma - alpha));

    if (!control_value) {
      out.push_back(Instruction::h(control));
      out.push_back(Instruction::p(control, kPi));
      out.push_back(Instruction::h(control));
    }
    add_1q(c_op, target);
    add_cnot(control, target);
    add_1q(b_op, target);
    add_cnot(control, target);
    add_1q(a_op, target);
    push_phase(out, control, delta);
    if (!control_value) {
      out.push_back(Instruction::h(control));
      out.push_back(Instruction::p(control, kPi));
      out.push_back(Instruction::h(control));
    }
  }
};

}  // namespace

double wrap_angle(double theta) {
  double w = std::remainder(theta, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

DecompositionResult decompose_1q(const Eigen::Matrix2cd& u, int qubit) {
  if (!is_unitary(u, 1e-10)) throw DomainError("decompose_1q: input is not unitary");

  // u = e^{ig} Rz(a) Rx(b) Rz(c), and with H P(t) H = e^{it/2} Rx(t),
  // P(t) = e^{it/2} Rz(t) this is P(a) H P(b) H P(c) up to a global phase.
  const double g = 0.5 * std::arg(u.determinant());
  const Eigen::Matrix2cd v = u * std::polar(1.0, -g);
  const double cos_half = std::abs(v(0, 0));
  const double sin_half = std::abs(v(1, 0));
  const double b = 2.0 * std::atan2(sin_half, cos_half);
  const double sum = cos_half > 1e-14 ? 2.0 * std::arg(v(1, 1)) : 0.0;
  const double diff = sin_half > 1e-14 ? 2.0 * std::arg(kI * v(1, 0)) : 0.0;
  const double a = 0.5 * (sum + diff);
  const double c = 0.5 * (sum - diff);

  DecompositionResult out;
  if (negligible(b)) {
    push_phase(out.sequence, qubit, a + c);
  } else {
    push_phase(out.sequence, qubit, c);
    out.sequence.push_back(Instruction::h(qubit));
    push_phase(out.sequence, qubit, b);
    out.sequence.push_back(Instruction::h(qubit));
    push_phase(out.sequence, qubit, a);
  }

  const Eigen::Matrix2cd built = sequence_matrix(out.sequence);
  const cplx overlap = (built.adjoint() * u).trace();
  out.global_phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
  if (negligible(out.global_phase)) out.global_phase = 0.0;
  out.residual = max_entry_distance(u, std::polar(1.0, out.global_phase) * built);
  return out;
}

DecompositionResult synthesize_2q(const Eigen::Matrix4cd& u, int a, int b) {
  if (!is_unitary(u, 1e-10)) throw DomainError("synthesize_2q: input is not unitary");
  if (std::abs(a - b) != 1) throw CircuitError("two-qubit synthesis needs neighbouring wires");

  // Reduce u to a diagonal with two-level rotations between Gray-adjacent
  // basis states (00, 01, 11, 10), each of which is a singly-controlled gate.
  constexpr std::array<int, 4> gray = {0, 1, 3, 2};
  struct TwoLevel {
    int p, q;
    Eigen::Matrix2cd g;
  };
  std::vector<TwoLevel> rotations;
  Eigen::Matrix4cd w = u;
  for (int col = 0; col < 3; ++col) {
    const int c = gray[col];
    for (int r = 3; r > col; --r) {
      const int p = gray[r - 1], q = gray[r];
      const cplx x = w(p, c), y = w(q, c);
      if (std::abs(y) < 1e-15) continue;
      const double nrm = std::hypot(std::abs(x), std::abs(y));
      Eigen::Matrix2cd g;
      g << std::conj(x) / nrm, std::conj(y) / nrm, -y / nrm, x / nrm;
      for (int k = 0; k < 4; ++k) {
        const cplx wp = w(p, k), wq = w(q, k);
        w(p, k) = g(0, 0) * wp + g(0, 1) * wq;
        w(q, k) = g(1, 0) * wp + g(1, 1) * wq;
      }
      rotations.push_back({p, q, g});
    }
  }

  // u = G_1^H ... G_k^H D, so D acts first.
  Lowering low;
  const double d0 = std::arg(w(0, 0));
  const double theta_b = std::arg(w(1, 1)) - d0;
  const double theta_a = std::arg(w(2, 2)) - d0;
  const double theta_ab = std::arg(w(3, 3)) - d0 - theta_a - theta_b;
  low.phase += d0;
  push_phase(low.out, a, theta_a);
  push_phase(low.out, b, theta_b);
  if (!negligible(theta_ab)) low.out.push_back(Instruction::cp(a, b, wrap_angle(theta_ab)));

  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
    const int p = it->p, q = it->q;
    const int flip = p ^ q;  // 2 -> qubit a differs, 1 -> qubit b differs
    const int target = flip == 2 ? a : b;
    const int control = flip == 2 ? b : a;
    const int control_bit = flip == 2 ? (p & 1) : ((p >> 1) & 1);
    Eigen::Matrix2cd v = it->g.adjoint();
    // Reorder so row/column 0 is the state with the target bit clear.
    if (p & flip) {
      Eigen::Matrix2cd swapped;
      swapped << v(1, 1), v(1, 0), v(0, 1), v(0, 0);
      v = swapped;
    }
    low.add_controlled(v, control, target, control_bit == 1);
  }

  DecompositionResult out;
  out.sequence = std::move(low.out);
  out.global_phase = wrap_angle(low.phase);
  // Residual on the two wires only.
  CircuitIR probe;
  probe.num_qubits = 2;
  for (Instruction inst : out.sequence) {
    for (int& t : inst.targets) t = t == a ? 0 : 1;
    probe.instructions.push_back(std::move(inst));
  }
  out.residual =
      max_entry_distance(u, std::polar(1.0, out.global_phase) * circuit_unitary(probe));
  return out;
}

RoutedCircuit route_lnn(const CircuitIR& circuit) {
  circuit.validate();

  // Swap-in / gate / swap-out, still at the instruction level.
  std::vector<Instruction> staged;
  RoutedCircuit result;
  for (const Instruction& inst : circuit.instructions) {
    if (inst.arity() == 1) {
      staged.push_back(inst);
      continue;
    }
    ++result.two_qubit_gates;
    const int a = inst.targets[0], b = inst.targets[1];
    const int lo = std::min(a, b), hi = std::max(a, b);
    if (hi - lo == 1) {
      staged.push_back(inst);
      continue;
    }
    for (int k = hi; k >= lo + 2; --k) staged.push_back(Instruction::swap(k - 1, k));
    Instruction moved = inst;
    moved.targets = {a == lo ? lo : lo + 1, b == lo ? lo : lo + 1};
    staged.push_back(std::move(moved));
    for (int k = lo + 2; k <= hi; ++k) staged.push_back(Instruction::swap(k - 1, k));
    result.swaps_inserted += 2 * static_cast<std::size_t>(hi - lo - 1);
  }

  Lowering low;
  for (const Instruction& inst : staged) low.add(inst);
  result.circuit.num_qubits = circuit.num_qubits;
  result.circuit.instructions = std::move(low.out);
  result.global_phase = wrap_angle(low.phase);
  return result;
}

Eigen::MatrixXcd circuit_unitary(const CircuitIR& circuit) {
  if (circuit.num_qubits > kMaxUnitaryQubits)
    throw DomainError("circuit_unitary supports at most " + std::to_string(kMaxUnitaryQubits) +
                      " qubits");
  circuit.validate();
  const std::size_t dim = std::size_t{1} << circuit.num_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
  std::vector<cplx> column(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) column[i] = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    for (const Instruction& inst : circuit.instructions)
      apply_matrix(column, circuit.num_qubits, gate_for(inst).matrix, inst.targets);
    for (std::size_t i = 0; i < dim; ++i) u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = column[i];
  }
  return u;
}

EquivalenceReport compare_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                      double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("cannot compare unitaries of different dimension");
  EquivalenceReport r;
  const cplx overlap = (b.adjoint() * a).trace();
  r.phase = std::abs(overlap) > 1e-300 ? std::arg(overlap) : 0.0;
  r.distance = max_entry_distance(a, std::polar(1.0, r.phase) * b);
  r.equivalent = r.distance <= tol;
  return r;
}

EquivalenceReport verify_equivalence(const CircuitIR& a, const CircuitIR& b, double tol) {
  if (a.num_qubits != b.num_qubits) throw DomainError("circuits act on different qubit counts");
  return compare_up_to_phase(circuit_unitary(a), circuit_unitary(b), tol);
}

}  // namespace ballistic
