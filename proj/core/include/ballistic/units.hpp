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

#include <numbers>

// Internal unit system for all scattering math: incident energy E = 1,
// incident wavelength lambda = 1, hbar = 1, so k = 2*pi and the effective
// mass is m = k^2 / (2E) = 2*pi^2. Potentials are ratios V/E, lengths are
// multiples of lambda.
namespace ballistic::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Incident wavenumber in internal units.
inline constexpr double kWavenumber = kTwoPi;

/// Effective mass in internal units.
inline constexpr double kMass = 2.0 * std::numbers::pi * std::numbers::pi;

/// Group velocity of the incident carrier, in lambda per internal time unit.
inline constexpr double kGroupVelocity = kWavenumber / kMass;

inline constexpr double kElectronMassKg = 9.1093837015e-31;
inline constexpr double kPlanckJs = 6.62607015e-34;
inline constexpr double kElementaryChargeC = 1.602176634e-19;

/// Effective-mass multiplier used when none is given (GaAs conduction band).
inline constexpr double kDefaultEffectiveMass = 0.067;

/// de Broglie wavelength in micrometres: lambda = h / sqrt(2 m* E).
double wavelength_um(double energy_mev, double mass_ratio);

/// Converts a length in internal units (multiples of lambda) to micrometres.
inline double to_micrometres(double length_lambda, double energy_mev, double mass_ratio) {
  return length_lambda * wavelength_um(energy_mev, mass_ratio);
}

}  // namespace ballistic::units
