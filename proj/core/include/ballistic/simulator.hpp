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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ballistic/circuit.hpp"
#include "ballistic/gates.hpp"

namespace ballistic {

inline constexpr int kMaxQubits = 20;

/// Dual-rail register state. Basis index bit (n-1-q) holds qubit q, so qubit 0
/// is the most significant bit; a set bit means the electron is in the 1-rail.
class StateVector {
 public:
  /// |0...0>: every electron injected into its 0-rail.
  explicit StateVector(int num_qubits);
  StateVector(int num_qubits, std::vector<cplx> amplitudes);

  static StateVector basis(int num_qubits, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  std::span<cplx> mutable_amplitudes() { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;

  /// Probability of finding qubit q's electron in its 0-rail and in its 1-rail.
  std::pair<double, double> rail_occupancy(int q) const;

 private:
  int num_qubits_;
  std::vector<cplx> amplitudes_;
};

StateVector init_register(int n);

/// In-place kernel; targets must be distinct and in range but need not be adjacent.
void apply_matrix(std::span<cplx> amplitudes, int num_qubits, const Eigen::MatrixXcd& m,
                  std::span<const int> targets);

/// Returns gate (x) identity applied to `state`. Two-qubit targets must be
/// neighbouring wires; CircuitError otherwise.
StateVector apply_gate(const StateVector& state, const GateUnitary& gate,
                       std::span<const int> targets);

struct RunOptions {
  /// Reject two-qubit gates on non-neighbouring wires.
  bool require_adjacent = true;
};

StateVector run_circuit(const CircuitIR& circuit, const RunOptions& options = {});
StateVector run_circuit(const CircuitIR& circuit, StateVector initial,
                        const RunOptions& options = {});

/// Two-qubit entangling network on wires (0, 1). The input label is prepared
/// with rail exchanges (H P_pi H), then H on both, CP_pi, H on b, which maps
/// |00>,|01>,|10>,|11> onto the four Bell states.
CircuitIR bell_network(std::string_view label);

struct MeasurementRecord {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;
};

/// Samples `shots` projective measurements of every qubit. Bitstrings list
/// qubit 0 first. Deterministic for a given (state, shots, seed).
MeasurementRecord measure_all(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// Physical lengths per gate kind, in micrometres.
class GateLengths {
 public:
  GateLengths() = default;

  /// H 0.14 um, CP 1.0 um, P 0.1 um; CNOT and SWAP use their lowered lengths
  /// (H + CP + H and three CNOTs).
  static GateLengths defaults();
  static GateLengths from_basic(double h_um, double p_um, double cp_um);

  void set(GateKind kind, double um);
  bool has(GateKind kind) const { return lengths_.contains(kind); }
  /// Throws DomainError when the kind has no assigned length.
  double at(GateKind kind) const;

 private:
  std::map<GateKind, double> lengths_;
};

struct InjectionSchedule {
  /// Launch delay of each qubit's electron, in time units.
  std::vector<double> launch_offsets;
};

struct ArrivalMismatch {
  std::size_t instruction = 0;
  int qubit_a = 0;
  int qubit_b = 0;
  double path_a_um = 0.0;
  double path_b_um = 0.0;
  double arrival_a = 0.0;
  double arrival_b = 0.0;
  double mismatch = 0.0;
};

struct SyncReport {
  bool ok = true;
  double tolerance = 0.0;
  /// One entry per two-qubit gate, in circuit order.
  std::vector<ArrivalMismatch> gates;
  double max_mismatch = 0.0;
};

SyncReport synchronization_check(const InjectionSchedule& schedule, const CircuitIR& circuit,
                                 const GateLengths& lengths, double velocity_um_per_time,
                                 double tolerance = 1e-9);

struct CoherenceReport {
  double max_path_um = 0.0;
  double l_phi_um = 0.0;
  bool ok = true;
  std::vector<double> per_qubit_um;
};

CoherenceReport coherence_budget(const CircuitIR& circuit, const GateLengths& lengths,
                                 double l_phi_um);

}  // namespace ballistic
