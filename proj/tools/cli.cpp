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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballistic/compiler.hpp"
#include "ballistic/device_physics.hpp"
#include "ballistic/errors.hpp"
#include "ballistic/io.hpp"
#include "ballistic/simulator.hpp"
#include "ballistic/units.hpp"
#include "ballistic/wavepacket.hpp"

namespace ballistic::cli {
namespace {

using json = nlohmann::ordered_json;

struct Config {
  std::string input;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  bool strict = false;

  // curves / calibrate
  std::string kind = "well";
  int n = 1;
  double v_min = 0.0;
  double v_max = 10.0;
  std::size_t samples = 101;
  double target = 0.0;
  std::optional<double> energy_mev;
  double mstar = units::kDefaultEffectiveMass;

  // transmission
  double height = 5.0;
  double barrier_width = 0.1;
  double gap = 1.0;
  double e_min = 0.01;
  double e_max = 4.99;
  std::size_t points = 2048;
  std::size_t max_resonances = 16;

  // route / verify
  bool verify = false;
  double tol = 1e-9;
  bool quick = false;
  double width_scale = 1.0;

  // budget
  double l_phi = 30.0;
  double len_h = 0.14;
  double len_p = 0.1;
  double len_cp = 1.0;

  std::string label = "00";
};

/// Where primary output goes: the caller's stream or a file from --out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      stream_ = file_.get();
    }
  }
  bool ok() const { return static_cast<bool>(*stream_); }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// Parses and validates a circuit file, mapping failures onto exit codes.
std::optional<CircuitIR> load_circuit(const std::string& path, std::ostream& err, int& code) {
  try {
    CircuitIR c = read_circuit_file(path);
    c.validate();
    return c;
  } catch (const ParseError& e) {
    err << path << ": parse error at " << e.what() << '\n';
    code = kParseError;
  } catch (const CircuitError& e) {
    err << path << ": " << e.what() << '\n';
    code = kSemanticError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    code = kParseError;
  }
  return std::nullopt;
}

std::string basis_label(std::size_t index, int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q)
    if ((index >> (n - 1 - q)) & 1) bits[static_cast<std::size_t>(q)] = '1';
  return bits;
}

int write_or_fail(Sink& sink, std::ostream& err, const std::string& path) {
  sink.stream().flush();
  if (!sink.ok()) {
    err << "cannot write output to '" << path << "'\n";
    return kOutputError;
  }
  return kOk;
}

int cmd_run(const Config& cfg, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto circuit = load_circuit(cfg.input, err, code);
  if (!circuit) return code;

  StateVector state(circuit->num_qubits);
  try {
    state = run_circuit(*circuit, RunOptions{.require_adjacent = cfg.strict});
  } catch (const CircuitError& e) {
    err << cfg.input << ": " << e.what() << '\n';
    return kSemanticError;
  }

  Sink sink(cfg.out, out);
  if (!sink.ok()) return write_or_fail(sink, err, cfg.out);
  std::optional<MeasurementRecord> record;
  if (cfg.shots > 0) record = measure_all(state, cfg.shots, cfg.seed);

  if (cfg.format == "json") {
    json j;
    j["num_qubits"] = state.num_qubits();
    j["amplitudes"] = json::parse(io::state_to_json(state));
    if (record) j["measurement"] = json::parse(io::measurement_to_json(*record));
    sink.stream() << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < state.dimension(); ++i) {
      if (std::norm(state[i]) < 1e-30) continue;
      sink.stream() << '|' << basis_label(i, state.num_qubits()) << ">  "
                    << io::format_number(state[i].real()) << ' '
                    << io::format_number(state[i].imag()) << "  p="
                    << io::format_number(std::norm(state[i])) << '\n';
    }
    if (record) {
      sink.stream() << "shots " << record->shots << " seed " << record->seed << '\n';
      for (const auto& [bits, count] : record->counts)
        sink.stream() << bits << ' ' << count << '\n';
    }
  }
  return write_or_fail(sink, err, cfg.out);
}

int cmd_curves(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<CurveSample> rows;
  try {
    rows = fig3_curve(parse_phase_kind(cfg.kind), cfg.n, cfg.v_min, cfg.v_max, cfg.samples);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kSemanticError;
  }
  Sink sink(cfg.out, out);
  if (sink.ok()) io::write_curve_csv(sink.stream(), rows);
  return write_or_fail(sink, err, cfg.out);
}

int cmd_transmission(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto spec = ScatteringRegion::double_barrier(cfg.height, cfg.barrier_width, cfg.gap);
  const EnergyScan scan{cfg.e_min, cfg.e_max, cfg.points};
  std::vector<TransmissionSample> table;
  std::vector<double> peaks;
  try {
    table = double_barrier_transmission(spec, scan);
    peaks = find_resonances(spec, scan, cfg.max_resonances);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kSemanticError;
  }
  Sink sink(cfg.out, out);
  if (sink.ok()) io::write_transmission_csv(sink.stream(), table);
  err << "resonances:";
  for (double p : peaks) err << ' ' << io::format_number(p);
  err << '\n';
  return write_or_fail(sink, err, cfg.out);
}

int cmd_calibrate(const Config& cfg, std::ostream& out, std::ostream& err) {
  PhaseKind kind;
  double v = 0.0, width = 0.0, achieved = 0.0;
  try {
    kind = parse_phase_kind(cfg.kind);
    v = calibrate_phase(cfg.target, kind, cfg.n);
    width = resonance_width(v, kind, cfg.n);
    achieved = phase_for(kind, v, cfg.n);
  } catch (const UnreachableTargetError& e) {
    err << "unreachable target: " << e.what() << '\n';
    return kSemanticError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kSemanticError;
  }

  json j;
  j["kind"] = to_string(kind);
  j["n"] = cfg.n;
  j["target_phase"] = cfg.target;
  j["v_over_e"] = v;
  j["resonance_width_lambda"] = width;
  j["achieved_phase"] = achieved;
  if (cfg.energy_mev) {
    try {
      j["energy_mev"] = *cfg.energy_mev;
      j["mstar"] = cfg.mstar;
      j["wavelength_um"] = units::wavelength_um(*cfg.energy_mev, cfg.mstar);
      j["resonance_width_um"] = units::to_micrometres(width, *cfg.energy_mev, cfg.mstar);
      j["potential_mev"] = (kind == PhaseKind::kStep ? v : -v) * *cfg.energy_mev;
    } catch (const std::exception& e) {
      err << e.what() << '\n';
      return kSemanticError;
    }
  }
  Sink sink(cfg.out, out);
  if (sink.ok()) {
    if (cfg.format == "json") {
      sink.stream() << j.dump(2) << '\n';
    } else {
      for (const auto& [key, value] : j.items()) sink.stream() << key << ": " << value.dump() << '\n';
    }
  }
  return write_or_fail(sink, err, cfg.out);
}

int cmd_route(const Config& cfg, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto circuit = load_circuit(cfg.input, err, code);
  if (!circuit) return code;
  const RoutedCircuit routed = route_lnn(*circuit);

  std::optional<EquivalenceReport> check;
  if (cfg.verify) {
    if (circuit->num_qubits > kMaxUnitaryQubits) {
      err << "verification needs at most " << kMaxUnitaryQubits << " qubits\n";
      return kSemanticError;
    }
    check = verify_equivalence(*circuit, routed.circuit, cfg.tol);
  }

  Sink sink(cfg.out, out);
  if (sink.ok()) {
    auto& s = sink.stream();
    s << "# routed for nearest-neighbour wiring\n";
    s << "# global_phase " << io::format_number(routed.global_phase) << '\n';
    s << "# swaps_inserted " << routed.swaps_inserted << '\n';
    s << "# two_qubit_gates_in " << routed.two_qubit_gates << '\n';
    if (check)
      s << "# verify distance " << io::format_number(check->distance)
        << (check->equivalent ? " ok" : " FAILED") << '\n';
    s << to_text(routed.circuit);
  }
  if (const int w = write_or_fail(sink, err, cfg.out); w != kOk) return w;
  if (check && !check->equivalent) {
    err << "routed circuit differs from input: distance " << check->distance << " > "
        << cfg.tol << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

struct BatteryRow {
  std::string name;
  double value;
  double limit;
  bool pass;
};

int cmd_verify_gates(const Config& cfg, std::ostream& out, std::ostream& err) {
  const double sigma = cfg.quick ? 10.0 : 30.0;
  const double phase_tol = cfg.quick ? 0.05 : 0.02;
  std::vector<BatteryRow> rows;
  double worst_drift = 0.0;

  auto relative = [](const BandwidthRow& r) { return r.phase_error / std::abs(r.expected_phase); };
  try {
    BandwidthRow on;
    for (auto [kind, v] : {std::pair{PhaseKind::kStep, 0.5}, std::pair{PhaseKind::kWell, 3.0}}) {
      const auto r = bandwidth_study(v, kind, 1, {sigma}, cfg.width_scale).front();
      const std::string tag = std::string(to_string(kind)) + " v/E=" + io::format_number(v) +
                              " sigma=" + io::format_number(sigma);
      rows.push_back({tag + " relative phase error", relative(r), phase_tol, relative(r) <= phase_tol});
      rows.push_back({tag + " reflected probability", r.reflected_prob, 1e-3, r.reflected_prob < 1e-3});
      worst_drift = std::max(worst_drift, r.max_norm_drift);
      if (kind == PhaseKind::kStep) on = r;
    }

    const auto off = bandwidth_study(0.5, PhaseKind::kStep, 1, {sigma}, 1.25 * cfg.width_scale).front();
    rows.push_back({"off-resonance (1.25x width) reflects more", off.reflected_prob,
                    on.reflected_prob, off.reflected_prob > on.reflected_prob});
    worst_drift = std::max(worst_drift, off.max_norm_drift);

    if (!cfg.quick) {
      const auto scan = bandwidth_study(0.5, PhaseKind::kStep, 1, {10.0, 20.0, 40.0});
      bool falling = true;
      for (std::size_t i = 1; i < scan.size(); ++i)
        falling &= scan[i].reflected_prob < scan[i - 1].reflected_prob;
      rows.push_back({"reflection falls with sigma (10, 20, 40)", scan.back().reflected_prob,
                      scan.front().reflected_prob, falling});
      rows.push_back({"phase error at sigma=40", relative(scan.back()), 0.02,
                      relative(scan.back()) <= 0.02});
      for (const auto& r : scan) worst_drift = std::max(worst_drift, r.max_norm_drift);
    }
  } catch (const std::exception& e) {
    err << "gate verification aborted: " << e.what() << '\n';
    return kGateCheckFailed;
  }
  rows.push_back({"per-step norm drift", worst_drift, 1e-8, worst_drift <= 1e-8});

  bool all = true;
  for (const auto& r : rows) all &= r.pass;
  Sink sink(cfg.out, out);
  if (sink.ok()) {
    if (cfg.format == "json") {
      json j = json::array();
      for (const auto& r : rows)
        j.push_back({{"check", r.name}, {"value", r.value}, {"limit", r.limit}, {"pass", r.pass}});
      sink.stream() << j.dump(2) << '\n';
    } else {
      for (const auto& r : rows)
        sink.stream() << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  value="
                      << io::format_number(r.value) << " limit=" << io::format_number(r.limit)
                      << '\n';
    }
  }
  if (const int w = write_or_fail(sink, err, cfg.out); w != kOk) return w;
  return all ? kOk : kGateCheckFailed;
}

int cmd_budget(const Config& cfg, std::ostream& out, std::ostream& err) {
  int code = kOk;
  const auto circuit = load_circuit(cfg.input, err, code);
  if (!circuit) return code;
  CoherenceReport report;
  try {
    report = coherence_budget(*circuit, GateLengths::from_basic(cfg.len_h, cfg.len_p, cfg.len_cp),
                              cfg.l_phi);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kSemanticError;
  }
  json j;
  j["max_path_um"] = report.max_path_um;
  j["l_phi_um"] = report.l_phi_um;
  j["ok"] = report.ok;
  j["per_qubit_um"] = report.per_qubit_um;
  Sink sink(cfg.out, out);
  if (sink.ok()) {
    if (cfg.format == "json") {
      sink.stream() << j.dump(2) << '\n';
    } else {
      sink.stream() << "max path " << io::format_number(report.max_path_um) << " um, L_phi "
                    << io::format_number(report.l_phi_um) << " um: "
                    << (report.ok ? "within budget" : "OVER BUDGET") << '\n';
    }
  }
  if (const int w = write_or_fail(sink, err, cfg.out); w != kOk) return w;
  return report.ok ? kOk : kOverBudget;
}

int cmd_bell(const Config& cfg, std::ostream& out, std::ostream& err) {
  CircuitIR c;
  try {
    c = bell_network(cfg.label);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kSemanticError;
  }
  Sink sink(cfg.out, out);
  if (sink.ok()) sink.stream() << "# Bell network, input |" << cfg.label << ">\n" << to_text(c);
  return write_or_fail(sink, err, cfg.out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ballistic-electron dual-rail quantum computer simulator"};
  app.require_subcommand(1);
  Config cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Output file (default stdout)"); };

  auto* run_cmd = app.add_subcommand("run", "Simulate a circuit file");
  run_cmd->add_option("circuit", cfg.input, "Circuit text file")->required();
  run_cmd->add_option("--shots", cfg.shots, "Measurement shots (0: amplitudes only)");
  run_cmd->add_option("--seed", cfg.seed, "RNG seed for sampling");
  run_cmd->add_flag("--strict", cfg.strict, "Reject two-qubit gates on non-adjacent wires");
  add_format(run_cmd);
  add_out(run_cmd);

  auto* curves = app.add_subcommand("curves", "Emit the phase-shift curve as CSV");
  curves->add_option("--kind", cfg.kind)->check(CLI::IsMember({"step", "well"}));
  curves->add_option("--n", cfg.n, "Number of half wavelengths");
  curves->add_option("--vmin", cfg.v_min);
  curves->add_option("--vmax", cfg.v_max);
  curves->add_option("--samples", cfg.samples);
  add_out(curves);

  auto* trans = app.add_subcommand("transmission", "Double-barrier transmission scan as CSV");
  trans->add_option("--height", cfg.height, "Barrier height, V/E0");
  trans->add_option("--width", cfg.barrier_width, "Barrier width, lambda0");
  trans->add_option("--gap", cfg.gap, "Inter-barrier gap, lambda0");
  trans->add_option("--emin", cfg.e_min);
  trans->add_option("--emax", cfg.e_max);
  trans->add_option("--points", cfg.points);
  add_out(trans);

  auto* cal = app.add_subcommand("calibrate", "Potential and width for a target phase");
  cal->add_option("--target", cfg.target, "Target phase, radians")->required();
  cal->add_option("--kind", cfg.kind)->check(CLI::IsMember({"step", "well"}));
  cal->add_option("--n", cfg.n);
  cal->add_option("--energy-mev", cfg.energy_mev, "Electron energy for physical units");
  cal->add_option("--mstar", cfg.mstar, "Effective mass / electron mass");
  add_format(cal);
  add_out(cal);

  auto* route = app.add_subcommand("route", "Route a circuit onto nearest-neighbour wires");
  route->add_option("circuit", cfg.input)->required();
  route->add_flag("--verify", cfg.verify, "Check unitary equivalence with the input");
  route->add_option("--tol", cfg.tol, "Equivalence tolerance");
  add_out(route);

  auto* gates = app.add_subcommand("verify-gates", "Wave-packet check of the gate formulas");
  gates->add_flag("--quick", cfg.quick, "sigma = 10 lambda only, 5% phase tolerance");
  gates->add_option("--width-scale", cfg.width_scale, "Scale the resonant widths");
  add_format(gates);
  add_out(gates);

  auto* budget = app.add_subcommand("budget", "Coherence-length budget of a circuit");
  budget->add_option("circuit", cfg.input)->required();
  budget->add_option("--lphi", cfg.l_phi, "Phase coherence length, um");
  budget->add_option("--len-h", cfg.len_h, "Hadamard length, um");
  budget->add_option("--len-p", cfg.len_p, "Phase shifter length, um");
  budget->add_option("--len-cp", cfg.len_cp, "Coulomb coupler length, um");
  add_format(budget);
  add_out(budget);

  auto* bell = app.add_subcommand("bell", "Emit the Bell-state network for a basis input");
  bell->add_option("--label", cfg.label, "Input basis label (00, 01, 10, 11)");
  add_out(bell);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  if (run_cmd->parsed()) return cmd_run(cfg, out, err);
  if (curves->parsed()) return cmd_curves(cfg, out, err);
  if (trans->parsed()) return cmd_transmission(cfg, out, err);
  if (cal->parsed()) return cmd_calibrate(cfg, out, err);
  if (route->parsed()) return cmd_route(cfg, out, err);
  if (gates->parsed()) return cmd_verify_gates(cfg, out, err);
  if (budget->parsed()) return cmd_budget(cfg, out, err);
  if (bell->parsed()) return cmd_bell(cfg, out, err);
  return kUsage;
}

}  // namespace ballistic::cli
