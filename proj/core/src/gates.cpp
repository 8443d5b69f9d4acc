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

#include "ballistic/gates.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "ballistic/errors.hpp"

namespace ballistic {
namespace {

constexpr double kPi = std::numbers::pi;

GateUnitary ideal(Eigen::MatrixXcd m, int arity) {
  return {std::move(m), arity, Provenance::kIdeal, 0.0};
}

Eigen::Matrix2cd phase_matrix(double phi) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m(1, 1) = std::polar(1.0, phi);
  return m;
}

Eigen::Matrix2cd hadamard_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  m << s, s, s, -s;
  return m;
}

// CNOT with control on the most significant bit, via the Hadamard-conjugated CP_pi.
Eigen::Matrix4cd cnot_high_to_low() {
  const Eigen::Matrix4cd h_low =
      Eigen::kroneckerProduct(Eigen::Matrix2cd::Identity(), hadamard_matrix());
  return h_low * controlled_phase(kPi).matrix * h_low;
}

Eigen::Matrix4cd cnot_low_to_high() {
  const Eigen::Matrix4cd h_high =
      Eigen::kroneckerProduct(hadamard_matrix(), Eigen::Matrix2cd::Identity());
  return h_high * controlled_phase(kPi).matrix * h_high;
}

}  // namespace

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Eigen::MatrixXcd product = m * m.adjoint();
  return max_entry_distance(product, Eigen::MatrixXcd::Identity(m.rows(), m.cols())) <= tol;
}

double max_entry_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix dimension mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

void GateUnitary::validate(double tol) const {
  if (arity != 1 && arity != 2) throw DomainError("gate arity must be 1 or 2");
  const Eigen::Index dim = Eigen::Index{1} << arity;
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw DomainError("gate matrix dimension does not match arity");
  if (!is_unitary(matrix, tol)) throw DomainError("gate matrix is not unitary");
}

GateUnitary hadamard() { return ideal(hadamard_matrix(), 1); }

CouplerHadamard hadamard_from_coupler(const CouplerSpec& spec) {
  spec.validate();
  const Eigen::Matrix2cd raw = coupler_unitary(spec);
  const Eigen::Matrix2cd correction = phase_matrix(-0.5 * kPi);
  const Eigen::Matrix2cd composite = correction * raw * correction;

  const double ratio = spec.coupling_length_um / spec.transfer_length_um;
  if (std::abs(ratio - 0.5) > 0.5e-9) {
    // Phase-insensitive overlap with the ideal Hadamard.
    const double fidelity = std::abs((hadamard_matrix().adjoint() * composite).trace()) / 2.0;
    throw NotAHadamardError("coupler with L_c/L_t = " + std::to_string(ratio) +
                                " is not a 50/50 splitter (fidelity " +
                                std::to_string(fidelity) + ")",
                            fidelity);
  }

  CouplerHadamard out;
  out.gate = {composite, 1, Provenance::kDevice, spec.coupling_length_um};
  out.raw_coupler = raw;
  out.pre_phase_rad = -0.5 * kPi;
  out.post_phase_rad = -0.5 * kPi;
  return out;
}

GateUnitary phase_gate(double phi) { return ideal(phase_matrix(phi), 1); }

GateUnitary controlled_phase(double phi) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 3) = std::polar(1.0, phi);
  return ideal(m, 2);
}

GateUnitary coulomb_phase(const CoulombCouplerSpec& spec) {
  if (!(spec.chi >= 0.0) || !(spec.interaction_time >= 0.0))
    throw DomainError("Coulomb coupler needs chi >= 0 and t >= 0");
  GateUnitary g = controlled_phase(-2.0 * spec.chi * spec.interaction_time);
  g.provenance = Provenance::kDevice;
  g.physical_length_um = spec.physical_length_um;
  return g;
}

GateUnitary cnot() { return ideal(cnot_high_to_low(), 2); }

GateUnitary swap() {
  const Eigen::Matrix4cd a = cnot_high_to_low();
  return ideal(a * cnot_low_to_high() * a, 2);
}

GateUnitary pauli_x() {
  const Eigen::Matrix2cd h = hadamard_matrix();
  return ideal(h * phase_matrix(kPi) * h, 1);
}

}  // namespace ballistic
