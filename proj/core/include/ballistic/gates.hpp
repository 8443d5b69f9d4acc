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

#include <Eigen/Dense>

#include "ballistic/device_physics.hpp"

namespace ballistic {

enum class Provenance { kIdeal, kDevice };

/// A 1- or 2-qubit unitary. Two-qubit matrices use the first target as the
/// most significant bit of the 2-bit basis index.
struct GateUnitary {
  Eigen::MatrixXcd matrix;
  int arity = 1;
  Provenance provenance = Provenance::kIdeal;
  double physical_length_um = 0.0;

  /// Throws DomainError unless the matrix is square with dimension 2^arity
  /// and unitary within `tol`.
  void validate(double tol = 1e-12) const;
};

struct CoulombCouplerSpec {
  double chi = 0.0;
  double interaction_time = 0.0;
  double physical_length_um = 0.0;
};

/// Hadamard built from a 50/50 coupler and two corrective phase shifters:
/// gate = P(post) * coupler * P(pre).
struct CouplerHadamard {
  GateUnitary gate;
  Eigen::Matrix2cd raw_coupler;
  double pre_phase_rad = 0.0;
  double post_phase_rad = 0.0;
};

bool is_unitary(const Eigen::MatrixXcd& m, double tol);
double max_entry_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

GateUnitary hadamard();

/// Throws NotAHadamardError (carrying the achieved fidelity) unless
/// L_c = L_t / 2 within 1e-9 relative.
CouplerHadamard hadamard_from_coupler(const CouplerSpec& spec);

GateUnitary phase_gate(double phi);
GateUnitary controlled_phase(double phi);

/// Coulomb coupler: |11> picks up exp(-2i chi t); the other basis states are untouched.
GateUnitary coulomb_phase(const CoulombCouplerSpec& spec);

/// Control is the first target, realized as (I x H) CP_pi (I x H).
GateUnitary cnot();

/// CNOT(0->1) CNOT(1->0) CNOT(0->1).
GateUnitary swap();

/// Rail exchange on one qubit, H P_pi H.
GateUnitary pauli_x();

}  // namespace ballistic
