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

#include "ballistic/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ballistic/errors.hpp"

namespace ballistic {
namespace {

void check_register_size(int n) {
  if (n < 1 || n > kMaxQubits)
    throw DomainError("register size must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                      std::to_string(n));
}

std::uint64_t bit_mask(int num_qubits, int q) {
  return std::uint64_t{1} << (num_qubits - 1 - q);
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  check_register_size(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, cplx(0.0, 0.0));
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_register_size(num_qubits);
  if (amplitudes_.size() != (std::size_t{1} << num_qubits))
    throw DomainError("amplitude count must be 2^n");
  if (std::abs(norm_squared() - 1.0) > 1e-10) throw DomainError("state is not normalized");
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector s(num_qubits);
  if (index >= s.dimension()) throw DomainError("basis index out of range");
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const cplx& a : amplitudes_) total += std::norm(a);
  return total;
}

std::pair<double, double> StateVector::rail_occupancy(int q) const {
  if (q < 0 || q >= num_qubits_) throw DomainError("qubit index out of range");
  const std::uint64_t mask = bit_mask(num_qubits_, q);
  double one = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i)
    if (i & mask) one += std::norm(amplitudes_[i]);
  return {norm_squared() - one, one};
}

StateVector init_register(int n) { return StateVector(n); }

void apply_matrix(std::span<cplx> amps, int num_qubits, const Eigen::MatrixXcd& m,
                  std::span<const int> targets) {
  const std::size_t dim = amps.size();
  if (targets.size() == 1) {
    const std::uint64_t mask = bit_mask(num_qubits, targets[0]);
    const cplx m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const cplx a0 = amps[i];
      const cplx a1 = amps[i | mask];
      amps[i] = m00 * a0 + m01 * a1;
      amps[i | mask] = m10 * a0 + m11 * a1;
    }
    return;
  }
  const std::uint64_t hi = bit_mask(num_qubits, targets[0]);
  const std::uint64_t lo = bit_mask(num_qubits, targets[1]);
  const std::uint64_t offsets[4] = {0, lo, hi, hi | lo};
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & (hi | lo)) continue;
    cplx in[4];
    for (int g = 0; g < 4; ++g) in[g] = amps[i | offsets[g]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += m(r, c) * in[c];
      amps[i | offsets[r]] = acc;
    }
  }
}

namespace {

void check_targets(int num_qubits, const GateUnitary& gate, std::span<const int> targets,
                   bool require_adjacent) {
  if (static_cast<int>(targets.size()) != gate.arity)
    throw CircuitError("gate arity " + std::to_string(gate.arity) + " does not match " +
                       std::to_string(targets.size()) + " target(s)");
  for (int q : targets)
    if (q < 0 || q >= num_qubits)
      throw CircuitError("qubit index " + std::to_string(q) + " out of range");
  if (targets.size() == 2) {
    if (targets[0] == targets[1]) throw CircuitError("two-qubit gate needs distinct targets");
    if (require_adjacent && std::abs(targets[0] - targets[1]) != 1)
      throw CircuitError("two-qubit gate on non-adjacent wires " + std::to_string(targets[0]) +
                         "," + std::to_string(targets[1]) + " (route the circuit first)");
  }
}

}  // namespace

StateVector apply_gate(const StateVector& state, const GateUnitary& gate,
                       std::span<const int> targets) {
  check_targets(state.num_qubits(), gate, targets, true);
  StateVector out = state;
  apply_matrix(out.mutable_amplitudes(), out.num_qubits(), gate.matrix, targets);
  return out;
}

StateVector run_circuit(const CircuitIR& circuit, const RunOptions& options) {
  check_register_size(circuit.num_qubits);
  return run_circuit(circuit, StateVector(circuit.num_qubits), options);
}

StateVector run_circuit(const CircuitIR& circuit, StateVector state, const RunOptions& options) {
  if (state.num_qubits() != circuit.num_qubits)
    throw CircuitError("initial state size does not match the circuit");
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    const Instruction& inst = circuit.instructions[i];
    try {
      const GateUnitary gate = gate_for(inst);
      check_targets(state.num_qubits(), gate, inst.targets, options.require_adjacent);
      if (inst.kind == GateKind::kU1 || inst.kind == GateKind::kU2) gate.validate(1e-10);
      apply_matrix(state.mutable_amplitudes(), state.num_qubits(), gate.matrix, inst.targets);
    } catch (const CircuitError& e) {
      throw CircuitError(e.what(), i);
    } catch (const std::exception& e) {
      throw CircuitError(e.what(), i);
    }
  }
  return state;
}

CircuitIR bell_network(std::string_view label) {
  if (label.size() != 2 || (label[0] != '0' && label[0] != '1') ||
      (label[1] != '0' && label[1] != '1'))
    throw DomainError("Bell network input must be one of 00, 01, 10, 11");
  CircuitIR c;
  c.num_qubits = 2;
  for (int q = 0; q < 2; ++q) {
    if (label[q] == '1') {
      c.add(Instruction::h(q));
      c.add(Instruction::p(q, std::numbers::pi));
      c.add(Instruction::h(q));
    }
  }
  c.add(Instruction::h(0));
  c.add(Instruction::h(1));
  c.add(Instruction::cp(0, 1, std::numbers::pi));
  c.add(Instruction::h(1));
  return c;
}

MeasurementRecord measure_all(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw DomainError("shots must be >= 1");
  const std::size_t dim = state.dimension();
  std::vector<double> cdf(dim);
  double running = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    running += std::norm(state[i]);
    cdf[i] = running;
  }

  // Uniform doubles from the top 53 bits; independent of the standard
  // library's distribution implementation.
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hits(dim, 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= dim) idx = dim - 1;
    // Never report an outcome with zero probability.
    while (std::norm(state[idx]) == 0.0 && idx > 0) --idx;
    ++hits[idx];
  }

  MeasurementRecord record;
  record.shots = shots;
  record.seed = seed;
  const int n = state.num_qubits();
  for (std::size_t i = 0; i < dim; ++i) {
    if (hits[i] == 0) continue;
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q)
      if (i & bit_mask(n, q)) bits[static_cast<std::size_t>(q)] = '1';
    record.counts.emplace(std::move(bits), hits[i]);
  }
  return record;
}

GateLengths GateLengths::defaults() { return from_basic(0.14, 0.1, 1.0); }

GateLengths GateLengths::from_basic(double h_um, double p_um, double cp_um) {
  GateLengths g;
  g.set(GateKind::kH, h_um);
  g.set(GateKind::kP, p_um);
  g.set(GateKind::kCP, cp_um);
  const double cnot_um = 2.0 * h_um + cp_um;
  g.set(GateKind::kCNOT, cnot_um);
  g.set(GateKind::kSWAP, 3.0 * cnot_um);
  return g;
}

void GateLengths::set(GateKind kind, double um) {
  if (!(um >= 0.0) || !std::isfinite(um)) throw DomainError("gate length must be >= 0");
  lengths_[kind] = um;
}

double GateLengths::at(GateKind kind) const {
  const auto it = lengths_.find(kind);
  if (it == lengths_.end())
    throw DomainError(std::string("no physical length assigned to gate kind '") +
                      to_string(kind) + "'");
  return it->second;
}

SyncReport synchronization_check(const InjectionSchedule& schedule, const CircuitIR& circuit,
                                 const GateLengths& lengths, double velocity_um_per_time,
                                 double tolerance) {
  circuit.validate();
  if (!(velocity_um_per_time > 0.0)) throw DomainError("velocity must be positive");
  const auto n = static_cast<std::size_t>(circuit.num_qubits);
  std::vector<double> offsets = schedule.launch_offsets;
  if (offsets.empty()) offsets.assign(n, 0.0);
  if (offsets.size() != n) throw DomainError("one launch offset per qubit is required");
  for (double o : offsets)
    if (!std::isfinite(o)) throw DomainError("launch offsets must be finite");

  SyncReport report;
  report.tolerance = tolerance;
  std::vector<double> path(n, 0.0);
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    const Instruction& inst = circuit.instructions[i];
    const double len = lengths.at(inst.kind);
    if (inst.arity() == 2) {
      const auto a = static_cast<std::size_t>(inst.targets[0]);
      const auto b = static_cast<std::size_t>(inst.targets[1]);
      ArrivalMismatch m;
      m.instruction = i;
      m.qubit_a = inst.targets[0];
      m.qubit_b = inst.targets[1];
      m.path_a_um = path[a];
      m.path_b_um = path[b];
      m.arrival_a = offsets[a] + path[a] / velocity_um_per_time;
      m.arrival_b = offsets[b] + path[b] / velocity_um_per_time;
      m.mismatch = std::abs(m.arrival_a - m.arrival_b);
      report.max_mismatch = std::max(report.max_mismatch, m.mismatch);
      if (m.mismatch > tolerance) report.ok = false;
      report.gates.push_back(m);
    }
    for (int q : inst.targets) path[static_cast<std::size_t>(q)] += len;
  }
  return report;
}

CoherenceReport coherence_budget(const CircuitIR& circuit, const GateLengths& lengths,
                                 double l_phi_um) {
  circuit.validate();
  if (!(l_phi_um > 0.0)) throw DomainError("coherence length must be positive");
  CoherenceReport report;
  report.l_phi_um = l_phi_um;
  report.per_qubit_um.assign(static_cast<std::size_t>(circuit.num_qubits), 0.0);
  for (const Instruction& inst : circuit.instructions) {
    const double len = lengths.at(inst.kind);
    for (int q : inst.targets) report.per_qubit_um[static_cast<std::size_t>(q)] += len;
  }
  report.max_path_um = *std::max_element(report.per_qubit_um.begin(), report.per_qubit_um.end());
  report.ok = report.max_path_um < l_phi_um;
  return report;
}

}  // namespace ballistic
