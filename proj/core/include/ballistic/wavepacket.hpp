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

#include <cstddef>
#include <vector>

#include "ballistic/device_physics.hpp"

namespace ballistic {

/// Uniform grid in lambda units with a fixed time step.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t points = 0;
  double dt = 0.0;

  double dx() const { return (x_max - x_min) / static_cast<double>(points - 1); }
  double x(std::size_t i) const { return x_min + dx() * static_cast<double>(i); }

  /// At least 1024 points, dx <= lambda/20, and dt small enough that the
  /// carrier's group velocity moves the packet at most dx per step.
  void validate() const;
};

/// psi(x) ~ exp(-(x - center)^2 / (4 sigma^2)) exp(i k0 x), so |psi|^2 has
/// standard deviation sigma.
struct GaussianPacket {
  double center = 0.0;
  double sigma = 30.0;
  double k0 = 6.283185307179586;
};

/// A scattering region whose left edge sits at `start`.
struct PlacedRegion {
  ScatteringRegion region;
  double start = 0.0;

  double end() const { return start + region.extent(); }
};

struct PropagationResult {
  double transmitted_prob = 0.0;
  double reflected_prob = 0.0;
  /// arg <psi_free | psi> over the transmitted side.
  double transmitted_phase = 0.0;
  double final_norm = 0.0;
  /// Largest |norm - 1| seen at any step.
  double max_norm_drift = 0.0;
  /// Packet has left the region and a free packet would be fully past it.
  bool cleared = false;
  std::size_t steps = 0;
};

struct NormHistory {
  std::vector<double> norms;
  double max_deviation = 0.0;
};

/// Crank-Nicolson propagation of `packet` through `potential`, alongside a
/// free reference packet on the same grid. Throws BoundaryError if either
/// wavefunction reaches the grid edges.
PropagationResult evolve(const Grid1D& grid, const PlacedRegion& potential,
                         const GaussianPacket& packet, std::size_t steps);

/// Norm after every step (steps + 1 rows, starting with the initial norm).
NormHistory norm_history(const Grid1D& grid, const PlacedRegion& potential,
                         const GaussianPacket& packet, std::size_t steps);

/// Grid, placement and step count for one full transit of a region.
struct TransitPlan {
  Grid1D grid;
  PlacedRegion placed;
  GaussianPacket packet;
  std::size_t steps = 0;
};

inline constexpr double kDefaultPointsPerWavelength = 48.0;

/// Region at [0, extent], packet launched 6 sigma to its left and run until
/// the transmitted part is 6 sigma past it; margins keep the reflected part
/// 6 sigma away from the left edge.
TransitPlan plan_transit(const ScatteringRegion& region, double sigma,
                         double points_per_wavelength = kDefaultPointsPerWavelength);

struct BandwidthRow {
  double sigma = 0.0;
  double transmitted_phase = 0.0;
  double expected_phase = 0.0;
  /// |transmitted_phase - expected_phase| (wrapped), radians.
  double phase_error = 0.0;
  double reflected_prob = 0.0;
  double max_norm_drift = 0.0;
};

/// Runs one transit per sigma through a resonant plateau and compares the
/// transmitted phase to the plane-wave value. `width_scale` multiplies the
/// resonance width (1 = on resonance).
std::vector<BandwidthRow> bandwidth_study(double v_over_e, PhaseKind kind, int n,
                                          const std::vector<double>& sigmas,
                                          double width_scale = 1.0,
                                          double points_per_wavelength = kDefaultPointsPerWavelength);

}  // namespace ballistic
