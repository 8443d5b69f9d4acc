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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ballistic/errors.hpp"
#include "ballistic/units.hpp"
#include "oracles.hpp"

namespace ballistic {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(PhaseStep, ClosedFormValues) {
  EXPECT_EQ(phase_step(0.0, 1), 0.0);
  EXPECT_NEAR(phase_step(0.75, 1), -kPi, 1e-15);
  EXPECT_NEAR(phase_step(0.5, 2), -2.602580569137146, 1e-14);
}

TEST(PhaseStep, DomainErrors) {
  EXPECT_THROW(phase_step(1.0, 1), DomainError);
  EXPECT_THROW(phase_step(1.5, 1), DomainError);
  EXPECT_THROW(phase_step(-0.1, 1), DomainError);
  EXPECT_THROW(phase_step(0.5, 0), DomainError);
  EXPECT_THROW(phase_step(std::nan(""), 1), DomainError);
}

TEST(PhaseStep, StrictlyDecreasingAndNonPositive) {
  double prev = phase_step(0.0, 3);
  for (int i = 1; i < 1000; ++i) {
    const double v = i / 1000.0;
    const double phi = phase_step(v, 3);
    EXPECT_LT(phi, prev);
    EXPECT_LE(phi, 0.0);
    prev = phi;
  }
}

TEST(PhaseWell, ClosedFormValuesAndAsymptote) {
  EXPECT_NEAR(phase_well(3.0, 1), kPi / 2, 1e-15);
  EXPECT_EQ(phase_well(0.0, 1), 0.0);
  EXPECT_NEAR(phase_well(1e9, 1), kPi, 1e-4);
  EXPECT_THROW(phase_well(-1.0, 1), DomainError);
}

TEST(PhaseWell, BoundedByNPi) {
  for (int n = 1; n <= 4; ++n)
    for (double v : {1e-6, 0.1, 1.0, 10.0, 1e3, 1e8}) {
      const double phi = phase_well(v, n);
      EXPECT_GT(phi, 0.0);
      EXPECT_LT(phi, n * kPi);
    }
}

TEST(ResonanceWidth, Examples) {
  EXPECT_NEAR(resonance_width(0.75, PhaseKind::kStep, 1), 1.0, 1e-15);
  EXPECT_NEAR(resonance_width(3.0, PhaseKind::kWell, 1), 0.25, 1e-15);
  EXPECT_NEAR(resonance_width(0.0, PhaseKind::kStep, 2), 1.0, 1e-15);
  EXPECT_THROW(resonance_width(1.0, PhaseKind::kStep, 1), DomainError);
}

TEST(Scatter, StepAtResonanceMatchesClosedForm) {
  const auto res = scatter(ScatteringRegion::step(0.75, 1.0));
  EXPECT_NEAR(std::abs(res.t), 1.0, 1e-10);
  EXPECT_NEAR(testing::wrapped_difference(std::arg(res.t), -kPi), 0.0, 1e-10);
}

TEST(Scatter, WellAtResonanceMatchesClosedForm) {
  const auto res = scatter(ScatteringRegion::well(3.0, 0.25));
  EXPECT_NEAR(std::abs(res.t), 1.0, 1e-10);
  EXPECT_NEAR(std::arg(res.t), kPi / 2, 1e-10);
}

TEST(Scatter, VanishingBarrierIsTransparent) {
  const auto res = scatter(ScatteringRegion::barrier(2.0, 1e-12));
  EXPECT_NEAR(std::abs(res.t - cplx(1.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(res.r), 0.0, 1e-9);
}

TEST(Scatter, StepAtUnitRatioIsRejected) {
  ScatteringRegion r{RegionKind::kBarrier, 1.0, 0.5, 0.0};
  EXPECT_THROW(scatter(r), DegenerateScatteringError);
  EXPECT_THROW(scatter(ScatteringRegion::step(1.0, 0.5)), DomainError);
}

// Independent RK4 integration of the Schrodinger equation through the same layers.
TEST(Scatter, AgreesWithOdeOracle) {
  const std::vector<ScatteringRegion> regions = {
      ScatteringRegion::step(0.3, 0.37),        ScatteringRegion::well(2.0, 0.81),
      ScatteringRegion::barrier(1.8, 0.2),      ScatteringRegion::barrier(0.6, 1.3),
      ScatteringRegion::double_barrier(3.0, 0.1, 0.6)};
  for (const auto& region : regions) {
    for (double e : {0.4, 1.0}) {
      const auto tm = scatter(region, e);
      const auto ode = testing::ode_scatter(region.layers(), e);
      EXPECT_NEAR(std::abs(tm.t - ode.t), 0.0, 1e-8);
      EXPECT_NEAR(std::abs(tm.r - ode.r), 0.0, 1e-8);
    }
  }
}

TEST(Scatter, FluxConservation) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> v(0.0, 4.0), len(0.01, 2.0), e(0.05, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const double vv = v(rng);
    ScatteringRegion region = (i % 3 == 0)   ? ScatteringRegion::well(vv, len(rng))
                              : (i % 3 == 1) ? ScatteringRegion::barrier(vv, len(rng))
                                             : ScatteringRegion::double_barrier(vv + 0.1, 0.3 * len(rng), len(rng));
    double energy = e(rng);
    if (std::abs(energy - vv) < 1e-6) energy += 0.01;
    const auto res = scatter(region, energy);
    EXPECT_NEAR(res.transmission_prob + res.reflection_prob, 1.0, 1e-12);
  }
}

TEST(Scatter, OracleEquivalenceOverSeededPairs) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> step_v(0.01, 0.95), well_v(0.01, 50.0);
  std::uniform_int_distribution<int> order(1, 5);
  for (int i = 0; i < 1000; ++i) {
    const bool step = i % 2 == 0;
    const double v = step ? step_v(rng) : well_v(rng);
    const int n = order(rng);
    const PhaseKind kind = step ? PhaseKind::kStep : PhaseKind::kWell;
    const double width = resonance_width(v, kind, n);
    const auto region = step ? ScatteringRegion::step(v, width) : ScatteringRegion::well(v, width);
    const auto res = scatter(region);
    ASSERT_NEAR(std::abs(res.t), 1.0, 1e-10);
    ASSERT_LT(testing::wrapped_difference(std::arg(res.t), phase_for(kind, v, n)), 1e-9)
        << "v=" << v << " n=" << n;
  }
}

TEST(TunnelingSuppression, Examples) {
  const double v = 1.0 + 1.0 / (4.0 * kPi * kPi);
  EXPECT_EQ(tunneling_suppression(0.0, 3.0), 1.0);
  EXPECT_NEAR(tunneling_suppression(1.0, v), 0.36787944117144233, 1e-15);
  EXPECT_NEAR(tunneling_suppression(2.0, v), 0.1353352832366127, 1e-15);
  EXPECT_THROW(tunneling_suppression(1.0, 1.0), DomainError);
  EXPECT_THROW(tunneling_suppression(-1.0, 2.0), DomainError);
}

TEST(TunnelingSuppression, MonotoneInBothArguments) {
  EXPECT_GT(tunneling_suppression(0.5, 2.0), tunneling_suppression(0.6, 2.0));
  EXPECT_GT(tunneling_suppression(0.5, 2.0), tunneling_suppression(0.5, 2.5));
}

const ScatteringRegion kFilter = ScatteringRegion::double_barrier(5.0, 0.1, 1.0);
const EnergyScan kScan{0.01, 4.99, 2048};

TEST(DoubleBarrier, ResonancesReachUnitTransmission) {
  const auto peaks = find_resonances(kFilter, kScan, 10);
  ASSERT_FALSE(peaks.empty());
  for (double e : peaks) {
    EXPECT_GE(scatter(kFilter, e).transmission_prob, 1.0 - 1e-6) << e;
    // Independent check at the located energy.
    const auto ode = testing::ode_scatter(kFilter.layers(), e);
    EXPECT_GE(std::norm(ode.t), 1.0 - 1e-6);
    const double h = 1e-7 * e;
    EXPECT_GE(scatter(kFilter, e).transmission_prob, scatter(kFilter, e - h).transmission_prob);
    EXPECT_GE(scatter(kFilter, e).transmission_prob, scatter(kFilter, e + h).transmission_prob);
  }
}

TEST(DoubleBarrier, WiderGapHasMoreResonances) {
  const auto narrow = find_resonances(kFilter, kScan, 100);
  const auto wide = find_resonances(ScatteringRegion::double_barrier(5.0, 0.1, 2.0), kScan, 100);
  EXPECT_GT(wide.size(), narrow.size());
}

TEST(DoubleBarrier, ScanDirectionDoesNotMatter) {
  const auto up = find_resonances(kFilter, kScan, 100);
  const auto down = find_resonances(kFilter, {kScan.stop, kScan.start, kScan.points}, 100);
  ASSERT_EQ(up.size(), down.size());
  for (std::size_t i = 0; i < up.size(); ++i) EXPECT_NEAR(up[i], down[i], 1e-9);
}

TEST(DoubleBarrier, VanishingGapHasNoResonanceBelowTop) {
  const auto none =
      find_resonances(ScatteringRegion::double_barrier(5.0, 0.1, 1e-6), kScan, 100);
  EXPECT_TRUE(none.empty());
}

TEST(DoubleBarrier, DeepBelowResonanceIsSuppressed) {
  const auto spec = ScatteringRegion::double_barrier(5.0, 0.25, 1.0);
  const double e = 0.02;
  const auto table = double_barrier_transmission(spec, {e, e, 1});
  ASSERT_EQ(table.size(), 1u);
  // Same barrier thickness expressed in the incident wavelength at energy e.
  const double factor = tunneling_suppression(2.0 * spec.length * std::sqrt(e), spec.v_over_e / e);
  EXPECT_LE(table[0].transmission, 100.0 * factor * factor);
  EXPECT_GE(table[0].transmission, 1e-4 * factor * factor);
}

TEST(DoubleBarrier, ThinBarriersAreTransparent) {
  const auto table =
      double_barrier_transmission(ScatteringRegion::double_barrier(5.0, 1e-9, 1.0), kScan);
  for (const auto& row : table) EXPECT_NEAR(row.transmission, 1.0, 1e-6);
}

TEST(DoubleBarrier, ErrorPaths) {
  EXPECT_THROW(double_barrier_transmission(kFilter, {1.0, 2.0, 0}), DomainError);
  EXPECT_THROW(double_barrier_transmission(kFilter, {1.0, 1.0, 10}), DomainError);
  EXPECT_THROW(double_barrier_transmission(kFilter, {0.0, 2.0, 10}), DomainError);
  EXPECT_THROW(double_barrier_transmission(kFilter, {1.0, 5.0, 10}), DomainError);
  EXPECT_THROW(find_resonances(ScatteringRegion::barrier(5.0, 0.1), kScan, 3), DomainError);
}

TEST(Coupler, IdentityAtZeroLength) {
  const auto u = coupler_unitary({0.0, 0.28});
  EXPECT_NEAR((u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(Coupler, FullTransferAtTransferLength) {
  const auto u = coupler_unitary({0.28, 0.28});
  EXPECT_NEAR(std::abs(u(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(u(1, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(u(0, 0)), 0.0, 1e-15);
}

TEST(Coupler, HalfTransferIsSymmetricSplitter) {
  const auto u = coupler_unitary({0.14, 0.28});
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) EXPECT_NEAR(std::abs(u(r, c)), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Coupler, UnitaryForSeededSpecs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lc(0.0, 2.0), lt(0.01, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto u = coupler_unitary({lc(rng), lt(rng)});
    EXPECT_LT((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  }
  EXPECT_THROW(coupler_unitary({-0.1, 0.28}), DomainError);
  EXPECT_THROW(coupler_unitary({0.1, 0.0}), DomainError);
}

TEST(Calibrate, Examples) {
  EXPECT_NEAR(calibrate_phase(-kPi, PhaseKind::kStep, 1), 0.75, 1e-15);
  EXPECT_NEAR(calibrate_phase(kPi / 2, PhaseKind::kWell, 1), 3.0, 1e-14);
  EXPECT_EQ(calibrate_phase(0.0, PhaseKind::kStep, 1), 0.0);
}

TEST(Calibrate, UnreachableTargets) {
  EXPECT_THROW(calibrate_phase(0.5, PhaseKind::kStep, 1), UnreachableTargetError);
  EXPECT_THROW(calibrate_phase(kPi, PhaseKind::kWell, 1), UnreachableTargetError);
  EXPECT_THROW(calibrate_phase(-0.1, PhaseKind::kWell, 2), UnreachableTargetError);
  EXPECT_NO_THROW(calibrate_phase(1.5 * kPi, PhaseKind::kWell, 2));
}

TEST(Calibrate, RoundTrip) {
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= 400; ++i) {
      const double step_target = -4.0 * kPi * i / 400.0;
      EXPECT_NEAR(phase_step(calibrate_phase(step_target, PhaseKind::kStep, n), n), step_target,
                  1e-12);
      const double well_target = n * kPi * i / 401.0;
      EXPECT_NEAR(phase_well(calibrate_phase(well_target, PhaseKind::kWell, n), n), well_target,
                  1e-12);
    }
  }
}

TEST(Fig3Curve, WellTable) {
  const auto rows = fig3_curve(PhaseKind::kWell, 1, 0.0, 10.0, 11);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows.back().v_over_e, 10.0);
  EXPECT_NEAR(rows.back().phase_rad, 2.1943668284903103, 1e-14);
}

TEST(Fig3Curve, StepIsMonotoneAndClipped) {
  const auto rows = fig3_curve(PhaseKind::kStep, 1, 0.0, 0.999, 500);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].phase_rad, rows[i - 1].phase_rad);
  EXPECT_THROW(fig3_curve(PhaseKind::kStep, 1, 0.0, 1.0, 10), DomainError);
}

TEST(Fig3Curve, SingleSample) {
  const auto rows = fig3_curve(PhaseKind::kWell, 1, 0.0, 0.0, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].v_over_e, 0.0);
  EXPECT_EQ(rows[0].phase_rad, 0.0);
  EXPECT_THROW(fig3_curve(PhaseKind::kWell, 1, 0.0, 1.0, 1), DomainError);
  EXPECT_THROW(fig3_curve(PhaseKind::kWell, 1, 2.0, 1.0, 5), DomainError);
}

TEST(Units, WavelengthConversion) {
  EXPECT_NEAR(units::wavelength_um(10.0, 0.067), 0.04738096869764052, 1e-12);
  EXPECT_NEAR(units::to_micrometres(2.0, 10.0, 0.067), 2.0 * 0.04738096869764052, 1e-12);
  EXPECT_THROW(units::wavelength_um(0.0, 0.067), DomainError);
}

}  // namespace
}  // namespace ballistic
