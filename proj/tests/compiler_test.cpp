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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "ballistic/errors.hpp"
#include "ballistic/simulator.hpp"
#include "oracles.hpp"

namespace ballistic {
namespace {

constexpr double kPi = std::numbers::pi;

// Reconstructs a single-qubit sequence by plain matrix multiplication.
Eigen::Matrix2cd rebuild(const DecompositionResult& d) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (const auto& inst : d.sequence) {
    if (inst.kind == GateKind::kH) {
      m = h * m;
    } else {
      Eigen::Matrix2cd p = Eigen::Matrix2cd::Identity();
      p(1, 1) = std::polar(1.0, inst.params.at(0));
      m = p * m;
    }
  }
  return std::polar(1.0, d.global_phase) * m;
}

bool only_universal_set(const CircuitIR& c) {
  for (const auto& inst : c.instructions)
    if (inst.kind != GateKind::kH && inst.kind != GateKind::kP && inst.kind != GateKind::kCP)
      return false;
  return c.is_nearest_neighbor();
}

TEST(Decompose1q, Identity) {
  const auto d = decompose_1q(Eigen::Matrix2cd::Identity());
  EXPECT_TRUE(d.sequence.empty());
  EXPECT_EQ(d.global_phase, 0.0);
}

TEST(Decompose1q, PhaseGateIsKept) {
  const auto d = decompose_1q(phase_gate(1.234).matrix);
  ASSERT_EQ(d.sequence.size(), 1u);
  EXPECT_EQ(d.sequence[0].kind, GateKind::kP);
  EXPECT_NEAR(d.sequence[0].params[0], 1.234, 1e-14);
  EXPECT_NEAR(d.global_phase, 0.0, 1e-14);
}

TEST(Decompose1q, SeededUnitariesReconstruct) {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Matrix2cd u = testing::random_unitary(2, rng);
    const auto d = decompose_1q(u, 0);
    EXPECT_LE(max_entry_distance(rebuild(d), u), 1e-9);
    EXPECT_LE(d.residual, 1e-9);
    EXPECT_LE(d.sequence.size(), 5u);
  }
}

TEST(Decompose1q, SpecialCases) {
  for (const Eigen::Matrix2cd& u :
       {Eigen::Matrix2cd(hadamard().matrix), Eigen::Matrix2cd(pauli_x().matrix),
        Eigen::Matrix2cd(std::polar(1.0, 0.7) * Eigen::Matrix2cd::Identity()),
        Eigen::Matrix2cd(phase_gate(kPi).matrix)}) {
    const auto d = decompose_1q(u);
    EXPECT_LE(max_entry_distance(rebuild(d), u), 1e-12);
  }
  EXPECT_THROW(decompose_1q(Eigen::Matrix2cd::Identity() * 1.1), DomainError);
}

TEST(Synthesize2q, RandomUnitariesMatch) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Matrix4cd u = testing::random_unitary(4, rng);
    const auto d = synthesize_2q(u, 0, 1);
    CircuitIR c;
    c.num_qubits = 2;
    c.instructions = d.sequence;
    EXPECT_TRUE(only_universal_set(c));
    EXPECT_LE(max_entry_distance(std::polar(1.0, d.global_phase) * circuit_unitary(c), u), 1e-9);
  }
  // Reversed wire order and structured inputs.
  for (const Eigen::Matrix4cd& u : {Eigen::Matrix4cd(cnot().matrix), Eigen::Matrix4cd(swap().matrix),
                                    Eigen::Matrix4cd(Eigen::Matrix4cd::Identity())}) {
    const auto d = synthesize_2q(u, 2, 1);
    CircuitIR c;
    c.num_qubits = 3;
    c.instructions = d.sequence;
    const Eigen::MatrixXcd expected = testing::embed(u, {2, 1}, 3);
    EXPECT_LE(max_entry_distance(std::polar(1.0, d.global_phase) * circuit_unitary(c), expected),
              1e-9);
  }
}

TEST(CircuitUnitary, EmptyAndTensorStructure) {
  CircuitIR empty;
  empty.num_qubits = 3;
  EXPECT_LE(max_entry_distance(circuit_unitary(empty), Eigen::MatrixXcd::Identity(8, 8)), 0.0);

  CircuitIR c;
  c.num_qubits = 2;
  c.add(Instruction::h(0));
  const Eigen::MatrixXcd expected =
      Eigen::kroneckerProduct(hadamard().matrix, Eigen::Matrix2cd::Identity());
  EXPECT_LE(max_entry_distance(circuit_unitary(c), expected), 1e-15);

  CircuitIR big;
  big.num_qubits = 11;
  EXPECT_THROW(circuit_unitary(big), DomainError);
}

TEST(CircuitUnitary, ConsistentWithSimulator) {
  const auto c = bell_network("00");
  const Eigen::VectorXcd col = circuit_unitary(c).col(0);
  const auto s = run_circuit(c);
  for (int i = 0; i < 4; ++i) EXPECT_LE(std::abs(col(i) - s[static_cast<std::size_t>(i)]), 1e-12);
}

TEST(VerifyEquivalence, Basics) {
  const auto bell = bell_network("10");
  const auto self = verify_equivalence(bell, bell, 1e-12);
  EXPECT_TRUE(self.equivalent);
  EXPECT_LE(self.distance, 1e-15);

  // X P_phi X P_phi shifts both rails of a qubit: a pure global phase.
  CircuitIR shifted = bell;
  for (int i = 0; i < 2; ++i) {
    shifted.add(Instruction::h(0)).add(Instruction::p(0, kPi)).add(Instruction::h(0));
    shifted.add(Instruction::p(0, 0.8));
  }
  const auto r = verify_equivalence(bell, shifted, 1e-9);
  EXPECT_TRUE(r.equivalent);
  EXPECT_NEAR(std::abs(wrap_angle(r.phase + 0.8)), 0.0, 1e-9);

  CircuitIR hh, empty;
  hh.num_qubits = empty.num_qubits = 1;
  hh.add(Instruction::h(0)).add(Instruction::h(0));
  EXPECT_TRUE(verify_equivalence(hh, empty, 1e-12).equivalent);

  CircuitIR wider;
  wider.num_qubits = 2;
  EXPECT_THROW(verify_equivalence(hh, wider, 1e-9), DomainError);

  CircuitIR x;
  x.num_qubits = 1;
  x.add(Instruction::h(0));
  EXPECT_FALSE(verify_equivalence(x, empty, 1e-9).equivalent);
}

TEST(RouteLnn, DistantCnot) {
  CircuitIR c;
  c.num_qubits = 3;
  c.add(Instruction::cnot(0, 2));
  const auto routed = route_lnn(c);
  EXPECT_TRUE(only_universal_set(routed.circuit));
  EXPECT_EQ(routed.swaps_inserted, 2u);
  const Eigen::MatrixXcd expected = testing::embed(cnot().matrix, {0, 2}, 3);
  EXPECT_LE(max_entry_distance(std::polar(1.0, routed.global_phase) * circuit_unitary(routed.circuit),
                               expected),
            1e-9);
}

TEST(RouteLnn, AdjacentGateNeedsNoSwap) {
  CircuitIR c;
  c.num_qubits = 3;
  c.add(Instruction::cp(1, 2, kPi));
  const auto routed = route_lnn(c);
  EXPECT_EQ(routed.swaps_inserted, 0u);
  EXPECT_EQ(routed.circuit.instructions.size(), 1u);
  EXPECT_EQ(routed.circuit.instructions[0], c.instructions[0]);
}

TEST(RouteLnn, SwapCountForDistanceThree) {
  CircuitIR c;
  c.num_qubits = 4;
  c.add(Instruction::cp(0, 3, 0.6));
  const auto routed = route_lnn(c);
  EXPECT_EQ(routed.swaps_inserted, 4u);
  std::size_t cps = 0;
  for (const auto& inst : routed.circuit.instructions) cps += inst.kind == GateKind::kCP;
  EXPECT_EQ(cps, 4u * 3u + 1u);
  EXPECT_TRUE(verify_equivalence(c, routed.circuit, 1e-9).equivalent);
}

TEST(RouteLnn, SeededRandomCircuitsStayEquivalent) {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 50; ++trial) {
    CircuitIR c;
    c.num_qubits = 2 + static_cast<int>(rng() % 3);
    const int count = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
      const int a = static_cast<int>(rng() % static_cast<unsigned>(c.num_qubits));
      int b = static_cast<int>(rng() % static_cast<unsigned>(c.num_qubits - 1));
      if (b >= a) ++b;
      switch (rng() % 7) {
        case 0: c.add(Instruction::h(a)); break;
        case 1: c.add(Instruction::p(a, angle(rng))); break;
        case 2: c.add(Instruction::cp(a, b, angle(rng))); break;
        case 3: c.add(Instruction::cnot(a, b)); break;
        case 4: c.add(Instruction::swap(a, b)); break;
        case 5: c.add(Instruction::u1(a, testing::random_unitary(2, rng))); break;
        default: c.add(Instruction::u2(a, b, testing::random_unitary(4, rng))); break;
      }
    }
    const auto routed = route_lnn(c);
    EXPECT_TRUE(only_universal_set(routed.circuit));
    const auto r = verify_equivalence(c, routed.circuit, 1e-9);
    EXPECT_TRUE(r.equivalent) << "trial " << trial << " distance " << r.distance;
    EXPECT_NEAR(std::abs(wrap_angle(r.phase - routed.global_phase)), 0.0, 1e-9);
  }
}

TEST(RouteLnn, RejectsInvalidInput) {
  CircuitIR c;
  c.num_qubits = 2;
  c.add(Instruction::cnot(0, 4));
  EXPECT_THROW(route_lnn(c), CircuitError);
}

TEST(WrapAngle, Range) {
  EXPECT_NEAR(wrap_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(0.5), 0.5, 0.0);
}

}  // namespace
}  // namespace ballistic
