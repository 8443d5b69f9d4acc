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

#include "ballistic/device_physics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ballistic/errors.hpp"
#include "ballistic/units.hpp"

namespace ballistic {
namespace {

constexpr double kPi = std::numbers::pi;

void require_order(int n) {
  if (n < 1) throw DomainError("harmonic order n must be >= 1, got " + std::to_string(n));
}

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw DomainError(std::string(name) + " must be finite");
}

// Local wavenumber for kinetic energy (e - v) in reference units.
cplx local_wavenumber(double e_ratio, double potential) {
  return units::kTwoPi * std::sqrt(cplx(e_ratio - potential, 0.0));
}

// Interface coefficients for amplitudes of exp(+iqx) crossing from q_from
// into q_to, with psi and psi' continuous.
struct Interface {
  cplx r;
  cplx t;
};

Interface interface(cplx q_from, cplx q_to) {
  const cplx sum = q_from + q_to;
  return {(q_from - q_to) / sum, 2.0 * q_from / sum};
}

}  // namespace

ScatteringRegion ScatteringRegion::step(double v_over_e, double length) {
  return {RegionKind::kStep, v_over_e, length, 0.0};
}

ScatteringRegion ScatteringRegion::well(double v_over_e, double length) {
  return {RegionKind::kWell, v_over_e, length, 0.0};
}

ScatteringRegion ScatteringRegion::barrier(double v_over_e, double length) {
  return {RegionKind::kBarrier, v_over_e, length, 0.0};
}

ScatteringRegion ScatteringRegion::double_barrier(double v_over_e, double barrier_width,
                                                  double gap) {
  return {RegionKind::kDoubleBarrier, v_over_e, barrier_width, gap};
}

void ScatteringRegion::validate() const {
  require_finite(v_over_e, "v_over_e");
  require_finite(length, "length");
  require_finite(well_gap, "well_gap");
  if (length <= 0.0) throw DomainError("region length must be positive");
  switch (kind) {
    case RegionKind::kStep:
      if (v_over_e < 0.0 || v_over_e >= 1.0)
        throw DomainError("step requires 0 <= v_over_e < 1");
      break;
    case RegionKind::kWell:
      if (v_over_e < 0.0) throw DomainError("well depth must be non-negative");
      break;
    case RegionKind::kBarrier:
      if (v_over_e < 0.0) throw DomainError("barrier height must be non-negative");
      break;
    case RegionKind::kDoubleBarrier:
      if (v_over_e <= 0.0) throw DomainError("double barrier height must be positive");
      if (well_gap <= 0.0) throw DomainError("double barrier gap must be positive");
      break;
  }
}

double ScatteringRegion::extent() const {
  return kind == RegionKind::kDoubleBarrier ? 2.0 * length + well_gap : length;
}

std::vector<std::pair<double, double>> ScatteringRegion::layers() const {
  switch (kind) {
    case RegionKind::kWell:
      return {{-v_over_e, length}};
    case RegionKind::kDoubleBarrier:
      return {{v_over_e, length}, {0.0, well_gap}, {v_over_e, length}};
    case RegionKind::kStep:
    case RegionKind::kBarrier:
      break;
  }
  return {{v_over_e, length}};
}

void CouplerSpec::validate() const {
  require_finite(coupling_length_um, "coupling_length");
  require_finite(transfer_length_um, "transfer_length");
  if (coupling_length_um < 0.0) throw DomainError("coupling length must be >= 0");
  if (transfer_length_um <= 0.0) throw DomainError("transfer length must be > 0");
}

double phase_step(double v_over_e, int n) {
  require_order(n);
  require_finite(v_over_e, "v_over_e");
  if (v_over_e < 0.0) throw DomainError("step phase needs v_over_e >= 0");
  if (v_over_e >= 1.0)
    throw DomainError("step phase diverges at v_over_e >= 1 (vertical asymptote at V = E)");
  return n * kPi * (1.0 - 1.0 / std::sqrt(1.0 - v_over_e));
}

double phase_well(double v_over_e, int n) {
  require_order(n);
  require_finite(v_over_e, "v_over_e");
  if (v_over_e < 0.0) throw DomainError("well phase needs v_over_e >= 0");
  return n * kPi * (1.0 - 1.0 / std::sqrt(1.0 + v_over_e));
}

double phase_for(PhaseKind kind, double v_over_e, int n) {
  return kind == PhaseKind::kStep ? phase_step(v_over_e, n) : phase_well(v_over_e, n);
}

double resonance_width(double v_over_e, PhaseKind kind, int n) {
  // Validate through the phase formulas so the domains stay identical.
  (void)phase_for(kind, v_over_e, n);
  const double inner = kind == PhaseKind::kStep ? 1.0 - v_over_e : 1.0 + v_over_e;
  return 0.5 * n / std::sqrt(inner);
}

ScatterResult scatter(const ScatteringRegion& region, double e_ratio) {
  region.validate();
  require_finite(e_ratio, "e_ratio");
  if (e_ratio <= 0.0) throw DomainError("incident energy must be positive");

  const cplx k = local_wavenumber(e_ratio, 0.0);
  const auto layers = region.layers();
  std::vector<cplx> q{k};
  std::vector<double> width{0.0};
  for (const auto& [potential, w] : layers) {
    const cplx ql = local_wavenumber(e_ratio, potential);
    if (std::abs(ql) < 1e-12 * std::abs(k))
      throw DegenerateScatteringError("zero wavenumber inside layer (E equals V)");
    q.push_back(ql);
    width.push_back(w);
  }
  q.push_back(k);
  width.push_back(0.0);

  // The layer transfer matrices composed in reflection form: gamma[j] is the
  // reflection seen from layer j at its right interface. Evanescent layers
  // only enter through decaying factors exp(iqd), |exp(iqd)| <= 1, which
  // keeps thick barriers free of cancellation.
  const std::size_t last = q.size() - 1;
  std::vector<cplx> gamma(last, 0.0), shifted(last, 0.0);
  for (std::size_t j = last; j-- > 0;) {
    const cplx r = interface(q[j], q[j + 1]).r;
    shifted[j] = j + 1 == last ? cplx(0.0)
                               : gamma[j + 1] * std::exp(cplx(0.0, 2.0) * q[j + 1] * width[j + 1]);
    gamma[j] = (r + shifted[j]) / (1.0 + r * shifted[j]);
  }

  // Right-moving amplitude carried across each interface.
  cplx amplitude = 1.0;
  for (std::size_t j = 0; j < last; ++j) {
    const auto [r, t] = interface(q[j], q[j + 1]);
    amplitude *= t / (1.0 + r * shifted[j]);
    if (j + 1 < last) amplitude *= std::exp(cplx(0.0, 1.0) * q[j + 1] * width[j + 1]);
  }

  ScatterResult out;
  out.r = gamma[0];
  out.t = amplitude * std::exp(cplx(0.0, -1.0) * k * region.extent());
  out.transmission_prob = std::norm(out.t);
  out.reflection_prob = std::norm(out.r);
  return out;
}

double transmitted_phase(const ScatteringRegion& region, double e_ratio) {
  return std::arg(scatter(region, e_ratio).t);
}

double tunneling_suppression(double length, double v_over_e) {
  require_finite(length, "length");
  require_finite(v_over_e, "v_over_e");
  if (v_over_e <= 1.0) throw DomainError("tunneling regime needs v_over_e > 1");
  if (length < 0.0) throw DomainError("barrier length must be >= 0");
  const double kappa = units::kTwoPi * std::sqrt(v_over_e - 1.0);
  return std::exp(-kappa * length);
}

namespace {

void check_scan(const ScatteringRegion& spec, const EnergyScan& scan) {
  if (spec.kind != RegionKind::kDoubleBarrier)
    throw DomainError("resonance scans need a double-barrier region");
  spec.validate();
  require_finite(scan.start, "scan start");
  require_finite(scan.stop, "scan stop");
  if (scan.points == 0) throw DomainError("empty energy scan");
  if (scan.points > 1 && scan.start == scan.stop) throw DomainError("empty energy scan range");
  const double lo = std::min(scan.start, scan.stop);
  const double hi = std::max(scan.start, scan.stop);
  if (lo <= 0.0 || hi >= spec.v_over_e)
    throw DomainError("energy scan must lie strictly inside (0, barrier height)");
}

// Ascending grid regardless of the direction the scan was specified in.
std::vector<double> scan_grid(const EnergyScan& scan) {
  const double lo = std::min(scan.start, scan.stop);
  const double hi = std::max(scan.start, scan.stop);
  std::vector<double> grid(scan.points);
  if (scan.points == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(scan.points - 1);
  for (std::size_t i = 0; i < scan.points; ++i) grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

double slope(const ScatteringRegion& spec, double e, double h) {
  return scatter(spec, e + h).transmission_prob - scatter(spec, e - h).transmission_prob;
}

}  // namespace

std::vector<TransmissionSample> double_barrier_transmission(const ScatteringRegion& spec,
                                                            const EnergyScan& scan) {
  check_scan(spec, scan);
  std::vector<TransmissionSample> table;
  table.reserve(scan.points);
  for (double e : scan_grid(scan)) table.push_back({e, scatter(spec, e).transmission_prob});
  return table;
}

std::vector<double> find_resonances(const ScatteringRegion& spec, const EnergyScan& scan,
                                    std::size_t max_count) {
  const auto table = double_barrier_transmission(spec, scan);
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < table.size() && peaks.size() < max_count; ++i) {
    const double here = table[i].transmission;
    if (!(here > table[i - 1].transmission && here >= table[i + 1].transmission)) continue;

    // Bisection on the sign of dT/dE inside the bracketing samples.
    double left = table[i - 1].energy_ratio;
    double right = table[i + 1].energy_ratio;
    for (int iter = 0; iter < 200; ++iter) {
      const double width = right - left;
      if (width <= 4.0 * std::numeric_limits<double>::epsilon() * right) break;
      const double mid = 0.5 * (left + right);
      const double h = std::max(width * 1e-3, 1e-14 * mid);
      if (slope(spec, mid, h) > 0.0)
        left = mid;
      else
        right = mid;
    }
    const double peak = 0.5 * (left + right);
    if (peaks.empty() || peak - peaks.back() > 1e-9) peaks.push_back(peak);
  }
  return peaks;
}

Eigen::Matrix2cd coupler_unitary(const CouplerSpec& spec) {
  spec.validate();
  const double theta = 0.5 * kPi * spec.coupling_length_um / spec.transfer_length_um;
  const cplx c(std::cos(theta), 0.0);
  const cplx s(0.0, std::sin(theta));
  Eigen::Matrix2cd u;
  u << c, s, s, c;
  return u;
}

double calibrate_phase(double target_rad, PhaseKind kind, int n) {
  require_order(n);
  if (!std::isfinite(target_rad)) throw UnreachableTargetError("target phase must be finite");
  const double full = n * kPi;
  const double scale = 1.0 - target_rad / full;
  if (kind == PhaseKind::kStep) {
    if (target_rad > 0.0)
      throw UnreachableTargetError("a step only produces phases in (-inf, 0]");
    return 1.0 - 1.0 / (scale * scale);
  }
  if (target_rad < 0.0 || target_rad >= full)
    throw UnreachableTargetError("a well of order n = " + std::to_string(n) +
                                 " only produces phases in [0, " + std::to_string(full) + ")");
  return 1.0 / (scale * scale) - 1.0;
}

std::vector<CurveSample> fig3_curve(PhaseKind kind, int n, double v_min, double v_max,
                                    std::size_t samples) {
  require_order(n);
  require_finite(v_min, "v_min");
  require_finite(v_max, "v_max");
  if (v_min < 0.0 || v_max < v_min) throw DomainError("curve range must satisfy 0 <= v_min <= v_max");
  if (kind == PhaseKind::kStep && v_max >= 1.0)
    throw DomainError("step curve must stay strictly below v_over_e = 1");
  if (samples == 0) throw DomainError("curve needs at least one sample");
  if (samples == 1 && v_min != v_max) throw DomainError("a single sample needs v_min == v_max");

  std::vector<CurveSample> rows;
  rows.reserve(samples);
  const double step = samples > 1 ? (v_max - v_min) / static_cast<double>(samples - 1) : 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double v = i + 1 == samples ? v_max : v_min + step * static_cast<double>(i);
    rows.push_back({v, phase_for(kind, v, n)});
  }
  return rows;
}

const char* to_string(PhaseKind kind) { return kind == PhaseKind::kStep ? "step" : "well"; }

PhaseKind parse_phase_kind(const std::string& text) {
  if (text == "step") return PhaseKind::kStep;
  if (text == "well") return PhaseKind::kWell;
  throw DomainError("unknown region kind '" + text + "' (expected step or well)");
}

namespace units {

double wavelength_um(double energy_mev, double mass_ratio) {
  if (!(energy_mev > 0.0) || !(mass_ratio > 0.0))
    throw DomainError("energy and effective mass must be positive");
  const double energy_j = energy_mev * 1e-3 * kElementaryChargeC;
  return kPlanckJs / std::sqrt(2.0 * mass_ratio * kElectronMassKg * energy_j) * 1e6;
}

}  // namespace units
}  // namespace ballistic
