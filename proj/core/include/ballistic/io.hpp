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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ballistic/device_physics.hpp"
#include "ballistic/simulator.hpp"
#include "ballistic/wavepacket.hpp"

// CSV tables use a header row, comma separators, LF line endings and 15
// significant digits. JSON documents are compact single-line strings.
namespace ballistic::io {

void write_curve_csv(std::ostream& out, const std::vector<CurveSample>& rows);
void write_transmission_csv(std::ostream& out, const std::vector<TransmissionSample>& rows);
void write_bandwidth_csv(std::ostream& out, const std::vector<BandwidthRow>& rows);
void write_norm_csv(std::ostream& out, const NormHistory& history);

/// {"shots": int, "seed": int, "counts": {bitstring: int}}
std::string measurement_to_json(const MeasurementRecord& record);
MeasurementRecord measurement_from_json(std::string_view text);

/// [[re, im], ...] in basis order.
std::string state_to_json(const StateVector& state);
StateVector state_from_json(std::string_view text);

/// Fixed-format number used by every CSV writer.
std::string format_number(double value);

}  // namespace ballistic::io
