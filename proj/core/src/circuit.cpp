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

#include "ballistic/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "ballistic/errors.hpp"

namespace ballistic {

Instruction Instruction::h(int q) { return {GateKind::kH, {}, {q}, {}}; }
Instruction Instruction::p(int q, double phi) { return {GateKind::kP, {phi}, {q}, {}}; }
Instruction Instruction::cp(int a, int b, double phi) { return {GateKind::kCP, {phi}, {a, b}, {}}; }
Instruction Instruction::cnot(int control, int target) {
  return {GateKind::kCNOT, {}, {control, target}, {}};
}
Instruction Instruction::swap(int a, int b) { return {GateKind::kSWAP, {}, {a, b}, {}}; }
Instruction Instruction::u1(int q, const Eigen::Matrix2cd& m) { return {GateKind::kU1, {}, {q}, m}; }
Instruction Instruction::u2(int a, int b, const Eigen::Matrix4cd& m) {
  return {GateKind::kU2, {}, {a, b}, m};
}

bool Instruction::operator==(const Instruction& other) const {
  if (kind != other.kind || params != other.params || targets != other.targets) return false;
  if (matrix.size() != other.matrix.size()) return false;
  return matrix.size() == 0 || matrix == other.matrix;
}

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "h";
    case GateKind::kP: return "p";
    case GateKind::kCP: return "cp";
    case GateKind::kCNOT: return "cnot";
    case GateKind::kSWAP: return "swap";
    case GateKind::kU1: return "u1";
    case GateKind::kU2: return "u2";
  }
  return "?";
}

void CircuitIR::validate() const {
  if (num_qubits < 1) throw CircuitError("circuit needs at least one qubit");
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const Instruction& inst = instructions[i];
    const std::size_t want = static_cast<std::size_t>(inst.arity());
    if (inst.targets.size() != want)
      throw CircuitError(std::string(to_string(inst.kind)) + " expects " + std::to_string(want) +
                             " target(s)",
                         i);
    for (int q : inst.targets)
      if (q < 0 || q >= num_qubits)
        throw CircuitError("qubit index " + std::to_string(q) + " out of range for " +
                               std::to_string(num_qubits) + " qubits",
                           i);
    if (want == 2 && inst.targets[0] == inst.targets[1])
      throw CircuitError("two-qubit gate needs distinct targets", i);
    const bool has_phase = inst.kind == GateKind::kP || inst.kind == GateKind::kCP;
    if (has_phase && inst.params.size() != 1) throw CircuitError("phase gate needs one angle", i);
    if (inst.kind == GateKind::kU1 || inst.kind == GateKind::kU2) {
      const Eigen::Index dim = Eigen::Index{1} << want;
      if (inst.matrix.rows() != dim || inst.matrix.cols() != dim)
        throw CircuitError("explicit unitary has the wrong dimension", i);
      if (!is_unitary(inst.matrix, 1e-10)) throw CircuitError("explicit matrix is not unitary", i);
    }
  }
}

bool CircuitIR::is_nearest_neighbor() const {
  for (const auto& inst : instructions)
    if (inst.arity() == 2 && std::abs(inst.targets[0] - inst.targets[1]) != 1) return false;
  return true;
}

GateUnitary gate_for(const Instruction& inst) {
  switch (inst.kind) {
    case GateKind::kH: return hadamard();
    case GateKind::kP: return phase_gate(inst.params.at(0));
    case GateKind::kCP: return controlled_phase(inst.params.at(0));
    case GateKind::kCNOT: return cnot();
    case GateKind::kSWAP: return swap();
    case GateKind::kU1: return {inst.matrix, 1, Provenance::kIdeal, 0.0};
    case GateKind::kU2: return {inst.matrix, 2, Provenance::kIdeal, 0.0};
  }
  throw CircuitError("unknown gate kind");
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

int parse_index(std::string_view tok, std::size_t line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer qubit index, got '" + std::string(tok) + "'", line);
  return value;
}

double parse_angle(std::string_view tok, std::size_t line) {
  double value = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value))
    throw ParseError("expected a decimal angle in radians, got '" + std::string(tok) + "'", line);
  return value;
}

void expect_operands(const std::vector<std::string_view>& toks, std::size_t count,
                     std::size_t line) {
  if (toks.size() != count + 1)
    throw ParseError("'" + std::string(toks[0]) + "' takes " + std::to_string(count) +
                         " operand(s), got " + std::to_string(toks.size() - 1),
                     line);
}

void append_number(std::string& out, double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, res.ptr);
}

}  // namespace

CircuitIR parse_circuit(std::string_view text) {
  CircuitIR circuit;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_tokens(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const std::string_view op = toks[0];
    if (!have_header) {
      if (op != "qubits") throw ParseError("circuit must start with 'qubits N'", line_no);
      expect_operands(toks, 1, line_no);
      circuit.num_qubits = parse_index(toks[1], line_no);
      if (circuit.num_qubits < 1) throw ParseError("qubit count must be positive", line_no);
      have_header = true;
    } else if (op == "qubits") {
      throw ParseError("duplicate 'qubits' header", line_no);
    } else if (op == "h") {
      expect_operands(toks, 1, line_no);
      circuit.add(Instruction::h(parse_index(toks[1], line_no)));
    } else if (op == "p") {
      expect_operands(toks, 2, line_no);
      circuit.add(Instruction::p(parse_index(toks[1], line_no), parse_angle(toks[2], line_no)));
    } else if (op == "cp") {
      expect_operands(toks, 3, line_no);
      circuit.add(Instruction::cp(parse_index(toks[1], line_no), parse_index(toks[2], line_no),
                                  parse_angle(toks[3], line_no)));
    } else if (op == "cnot") {
      expect_operands(toks, 2, line_no);
      circuit.add(Instruction::cnot(parse_index(toks[1], line_no), parse_index(toks[2], line_no)));
    } else if (op == "swap") {
      expect_operands(toks, 2, line_no);
      circuit.add(Instruction::swap(parse_index(toks[1], line_no), parse_index(toks[2], line_no)));
    } else {
      throw ParseError("unknown instruction '" + std::string(op) + "'", line_no);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing 'qubits N' header", line_no == 0 ? 1 : line_no);
  return circuit;
}

CircuitIR read_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open circuit file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

std::string to_text(const CircuitIR& circuit) {
  std::string out = "qubits " + std::to_string(circuit.num_qubits) + "\n";
  for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
    const Instruction& inst = circuit.instructions[i];
    if (inst.kind == GateKind::kU1 || inst.kind == GateKind::kU2)
      throw CircuitError("explicit unitaries have no text form; route the circuit first", i);
    out += to_string(inst.kind);
    for (int q : inst.targets) out += " " + std::to_string(q);
    for (double phi : inst.params) {
      out += ' ';
      append_number(out, phi);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ballistic
