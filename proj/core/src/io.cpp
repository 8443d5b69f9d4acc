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

#include "ballistic/io.hpp"

#include <bit>
#include <cstdio>

#include <json.hpp>

#include "ballistic/errors.hpp"

namespace ballistic::io {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", value);
  return buf;
}

void write_curve_csv(std::ostream& out, const std::vector<CurveSample>& rows) {
  out << "v_over_e,phase_rad\n";
  for (const auto& r : rows) out << format_number(r.v_over_e) << ',' << format_number(r.phase_rad) << '\n';
}

void write_transmission_csv(std::ostream& out, const std::vector<TransmissionSample>& rows) {
  out << "energy_ratio,transmission\n";
  for (const auto& r : rows)
    out << format_number(r.energy_ratio) << ',' << format_number(r.transmission) << '\n';
}

void write_bandwidth_csv(std::ostream& out, const std::vector<BandwidthRow>& rows) {
  out << "sigma_x,phase_error,reflected_prob\n";
  for (const auto& r : rows)
    out << format_number(r.sigma) << ',' << format_number(r.phase_error) << ','
        << format_number(r.reflected_prob) << '\n';
}

void write_norm_csv(std::ostream& out, const NormHistory& history) {
  out << "step,norm\n";
  for (std::size_t i = 0; i < history.norms.size(); ++i)
    out << i << ',' << format_number(history.norms[i]) << '\n';
}

std::string measurement_to_json(const MeasurementRecord& record) {
  nlohmann::ordered_json j;
  j["shots"] = record.shots;
  j["seed"] = record.seed;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [bits, count] : record.counts) j["counts"][bits] = count;
  return j.dump();
}

MeasurementRecord measurement_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    MeasurementRecord r;
    r.shots = j.at("shots").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    std::uint64_t total = 0;
    for (const auto& [bits, count] : j.at("counts").items()) {
      if (bits.find_first_not_of("01") != std::string::npos)
        throw DomainError("measurement key '" + bits + "' is not a bitstring");
      r.counts[bits] = count.get<std::uint64_t>();
      total += r.counts[bits];
    }
    if (total != r.shots) throw DomainError("measurement counts do not sum to shots");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed measurement JSON: ") + e.what());
  }
}

std::string state_to_json(const StateVector& state) {
  nlohmann::json j = nlohmann::json::array();
  for (const cplx& a : state.amplitudes()) j.push_back({a.real(), a.imag()});
  return j.dump();
}

StateVector state_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array() || j.empty()) throw DomainError("state JSON must be a non-empty array");
    std::vector<cplx> amps;
    amps.reserve(j.size());
    for (const auto& pair : j) {
      if (!pair.is_array() || pair.size() != 2) throw DomainError("each amplitude must be [re, im]");
      amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (!std::has_single_bit(amps.size())) throw DomainError("amplitude count must be a power of two");
    const int n = std::countr_zero(amps.size());
    return StateVector(n, std::move(amps));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed state JSON: ") + e.what());
  }
}

}  // namespace ballistic::io
