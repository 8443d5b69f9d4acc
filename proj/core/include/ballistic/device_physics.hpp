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

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ballistic {

using cplx = std::complex<double>;

/// Closed-form gate regions are plateaus (step) or dips (well) of finite width.
enum class PhaseKind { kStep, kWell };

enum class RegionKind { kStep, kWell, kBarrier, kDoubleBarrier };

/// Piecewise-constant 1D potential in internal units.
///
/// `v_over_e` is always stored as a non-negative magnitude; for wells the
/// potential inside is -v_over_e. `length` is the width of the plateau, or of
/// each barrier for the double-barrier kind, whose barriers are separated by
/// `well_gap`.
struct ScatteringRegion {
  RegionKind kind = RegionKind::kStep;
  double v_over_e = 0.0;
  double length = 0.0;
  double well_gap = 0.0;

  static ScatteringRegion step(double v_over_e, double length);
  static ScatteringRegion well(double v_over_e, double length);
  static ScatteringRegion barrier(double v_over_e, double length);
  static ScatteringRegion double_barrier(double v_over_e, double barrier_width, double gap);

  /// Throws DomainError if the fields violate the kind's invariants.
  void validate() const;

  /// Total width occupied by the region.
  double extent() const;

  /// Layers as (signed potential, width) pairs, in order of traversal.
  std::vector<std::pair<double, double>> layers() const;
};

struct ScatterResult {
  cplx t;
  cplx r;
  double transmission_prob = 0.0;
  double reflection_prob = 0.0;
};

struct CouplerSpec {
  double coupling_length_um = 0.0;
  double transfer_length_um = 0.0;

  void validate() const;
};

/// Inclusive, uniformly sampled energy window, E / E0.
struct EnergyScan {
  double start = 0.0;
  double stop = 0.0;
  std::size_t points = 2048;
};

struct TransmissionSample {
  double energy_ratio;
  double transmission;
};

struct CurveSample {
  double v_over_e;
  double phase_rad;
};

/// n*pi*(1 - 1/sqrt(1 - v)), the phase picked up crossing a resonant plateau.
double phase_step(double v_over_e, int n);

/// n*pi*(1 - 1/sqrt(1 + v)); bounded above by n*pi.
double phase_well(double v_over_e, int n);

double phase_for(PhaseKind kind, double v_over_e, int n);

/// Width (in lambda) at which a plateau of the given kind is reflectionless:
/// n half-wavelengths of the wave inside the region.
double resonance_width(double v_over_e, PhaseKind kind, int n);

/// Transfer-matrix solution for a plane wave of energy `e_ratio` (in units of
/// the reference energy) incident from the left. Asymptotic regions are at
/// zero potential; `t` is normalized so free propagation gives t = 1.
ScatterResult scatter(const ScatteringRegion& region, double e_ratio = 1.0);

/// Phase of t, i.e. the transmitted phase relative to free propagation.
double transmitted_phase(const ScatteringRegion& region, double e_ratio = 1.0);

/// exp(-kappa L) with kappa = 2*pi*sqrt(v - 1).
double tunneling_suppression(double length, double v_over_e);

std::vector<TransmissionSample> double_barrier_transmission(const ScatteringRegion& spec,
                                                            const EnergyScan& scan);

/// Resonance energies (ascending), located by a uniform scan and refined by
/// bisection on the sign of dT/dE.
std::vector<double> find_resonances(const ScatteringRegion& spec, const EnergyScan& scan,
                                    std::size_t max_count);

/// Directional coupler: [[cos t, i sin t], [i sin t, cos t]], t = (pi/2) Lc/Lt.
Eigen::Matrix2cd coupler_unitary(const CouplerSpec& spec);

/// Inverse of phase_step / phase_well.
double calibrate_phase(double target_rad, PhaseKind kind, int n);

std::vector<CurveSample> fig3_curve(PhaseKind kind, int n, double v_min, double v_max,
                                    std::size_t samples);

const char* to_string(PhaseKind kind);
PhaseKind parse_phase_kind(const std::string& text);

}  // namespace ballistic
