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

#include "ballistic/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <string>

#include "ballistic/compiler.hpp"
#include "ballistic/errors.hpp"
#include "ballistic/units.hpp"

namespace ballistic {
namespace {

constexpr double kEdgeMassLimit = 1e-6;
constexpr std::size_t kEdgeCheckInterval = 32;

// Cell-averaged potential: each grid point sees the fraction of its cell
// [x - dx/2, x + dx/2] covered by every layer.
std::vector<double> sample_potential(const Grid1D& grid, const PlacedRegion& placed) {
  std::vector<double> v(grid.points, 0.0);
  const double dx = grid.dx();
  double left = placed.start;
  for (const auto& [height, width] : placed.region.layers()) {
    const double right = left + width;
    if (height != 0.0) {
      const auto first = static_cast<std::size_t>(
          std::max(0.0, std::floor((left - grid.x_min) / dx - 1.0)));
      const auto last = std::min(
          grid.points - 1,
          static_cast<std::size_t>(std::max(0.0, std::ceil((right - grid.x_min) / dx + 1.0))));
      for (std::size_t i = first; i <= last; ++i) {
        const double x = grid.x(i);
        const double overlap =
            std::max(0.0, std::min(right, x + 0.5 * dx) - std::max(left, x - 0.5 * dx));
        v[i] += height * overlap / dx;
      }
    }
    left = right;
  }
  return v;
}

std::vector<cplx> gaussian(const Grid1D& grid, const GaussianPacket& p) {
  std::vector<cplx> psi(grid.points);
  double total = 0.0;
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.x(i);
    const double u = (x - p.center) / p.sigma;
    psi[i] = std::polar(std::exp(-0.25 * u * u), p.k0 * (x - p.center));
    total += std::norm(psi[i]);
  }
  const double scale = 1.0 / std::sqrt(total * grid.dx());
  for (auto& a : psi) a *= scale;
  return psi;
}

// (1 + i H dt/2) psi' = (1 - i H dt/2) psi with H = -(1/2m) d^2/dx^2 + V and
// psi = 0 outside the grid. The left-hand factorization is computed once.
class CrankNicolson {
 public:
  CrankNicolson(const Grid1D& grid, const std::vector<double>& potential)
      : n_(grid.points), dx_(grid.dx()) {
    const double alpha = 1.0 / (2.0 * units::kMass * dx_ * dx_);
    const cplx half_step(0.0, 0.5 * grid.dt);
    off_ = -half_step * alpha;
    rhs_diag_.resize(n_);
    inv_den_.resize(n_);
    upper_.resize(n_);
    scratch_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const double h_diag = 2.0 * alpha + potential[i];
      rhs_diag_[i] = 1.0 - half_step * h_diag;
      const cplx den = 1.0 + half_step * h_diag - (i > 0 ? off_ * upper_[i - 1] : cplx(0.0));
      inv_den_[i] = 1.0 / den;
      upper_[i] = off_ * inv_den_[i];
    }
  }

  // Advances psi one step and returns the new norm.
  double step(std::vector<cplx>& psi) {
    const cplx rhs_off = -off_;
    cplx prev_d = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      cplx b = rhs_diag_[i] * psi[i];
      if (i > 0) b += rhs_off * psi[i - 1];
      if (i + 1 < n_) b += rhs_off * psi[i + 1];
      prev_d = (b - off_ * prev_d) * inv_den_[i];
      scratch_[i] = prev_d;
    }
    double total = 0.0;
    cplx next = 0.0;
    for (std::size_t i = n_; i-- > 0;) {
      next = scratch_[i] - upper_[i] * next;
      psi[i] = next;
      total += std::norm(next);
    }
    return total * dx_;
  }

 private:
  std::size_t n_;
  double dx_;
  cplx off_;
  std::vector<cplx> rhs_diag_, inv_den_, upper_, scratch_;
};

double edge_mass(const std::vector<cplx>& psi, double dx) {
  const std::size_t guard = std::max<std::size_t>(16, psi.size() / 200);
  double mass = 0.0;
  for (std::size_t i = 0; i < guard; ++i)
    mass += std::norm(psi[i]) + std::norm(psi[psi.size() - 1 - i]);
  return mass * dx;
}

void check_inputs(const Grid1D& grid, const PlacedRegion& placed, const GaussianPacket& packet) {
  grid.validate();
  placed.region.validate();
  if (!(packet.sigma >= 5.0)) throw DomainError("packet width must be >= 5 lambda");
  if (packet.center - 5.0 * packet.sigma < grid.x_min ||
      packet.center + 5.0 * packet.sigma > grid.x_max)
    throw DomainError("packet must start at least 5 sigma from the grid edges");
  if (placed.start < grid.x_min || placed.end() > grid.x_max)
    throw DomainError("scattering region lies outside the grid");
}

struct RunOutput {
  std::vector<cplx> psi;
  std::vector<double> norms;
  double max_drift = 0.0;
};

RunOutput run(const Grid1D& grid, const std::vector<double>& potential,
              const GaussianPacket& packet, std::size_t steps, bool keep_norms,
              const char* label) {
  RunOutput out;
  out.psi = gaussian(grid, packet);
  CrankNicolson stepper(grid, potential);
  const double dx = grid.dx();
  if (keep_norms) {
    out.norms.reserve(steps + 1);
    double initial = 0.0;
    for (const auto& a : out.psi) initial += std::norm(a);
    out.norms.push_back(initial * dx);
  }
  for (std::size_t s = 1; s <= steps; ++s) {
    const double norm = stepper.step(out.psi);
    out.max_drift = std::max(out.max_drift, std::abs(norm - 1.0));
    if (keep_norms) out.norms.push_back(norm);
    if (s % kEdgeCheckInterval == 0 || s == steps) {
      const double mass = edge_mass(out.psi, dx);
      if (mass > kEdgeMassLimit)
        throw BoundaryError(std::string(label) + " wave packet reached the grid edge at step " +
                            std::to_string(s) + " (edge probability " + std::to_string(mass) +
                            "); enlarge the grid or reduce the step count");
    }
  }
  return out;
}

}  // namespace

void Grid1D::validate() const {
  if (points < 1024) throw DomainError("grid needs at least 1024 points");
  if (!(x_max > x_min)) throw DomainError("grid needs x_max > x_min");
  if (dx() > 1.0 / 20.0 + 1e-15) throw DomainError("grid spacing must resolve lambda/20");
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  if (units::kGroupVelocity * dt > dx() * (1.0 + 1e-12))
    throw DomainError("time step moves the packet more than one grid spacing");
}

PropagationResult evolve(const Grid1D& grid, const PlacedRegion& potential,
                         const GaussianPacket& packet, std::size_t steps) {
  check_inputs(grid, potential, packet);
  const std::vector<double> v = sample_potential(grid, potential);
  const std::vector<double> free_v(grid.points, 0.0);

  auto reference = std::async(std::launch::async, [&] {
    return run(grid, free_v, packet, steps, false, "reference");
  });
  const RunOutput scattered = run(grid, v, packet, steps, false, "scattered");
  const RunOutput ref = reference.get();

  const double dx = grid.dx();
  PropagationResult result;
  result.steps = steps;
  result.max_norm_drift = std::max(scattered.max_drift, ref.max_drift);
  cplx overlap = 0.0;
  double inside = 0.0;
  double ref_behind = 0.0;
  for (std::size_t i = 0; i < grid.points; ++i) {
    const double x = grid.x(i);
    const double p = std::norm(scattered.psi[i]) * dx;
    result.final_norm += p;
    if (x < potential.start) {
      result.reflected_prob += p;
      ref_behind += std::norm(ref.psi[i]) * dx;
    } else if (x > potential.end()) {
      result.transmitted_prob += p;
      overlap += std::conj(ref.psi[i]) * scattered.psi[i];
    } else {
      inside += p;
      ref_behind += std::norm(ref.psi[i]) * dx;
    }
  }
  result.transmitted_phase = std::arg(overlap);
  result.cleared = inside < 1e-8 && ref_behind < 1e-8;
  return result;
}

NormHistory norm_history(const Grid1D& grid, const PlacedRegion& potential,
                         const GaussianPacket& packet, std::size_t steps) {
  check_inputs(grid, potential, packet);
  const RunOutput out =
      run(grid, sample_potential(grid, potential), packet, steps, true, "scattered");
  NormHistory h;
  h.norms = out.norms;
  for (double n : h.norms) h.max_deviation = std::max(h.max_deviation, std::abs(n - 1.0));
  return h;
}

TransitPlan plan_transit(const ScatteringRegion& region, double sigma,
                         double points_per_wavelength) {
  region.validate();
  if (!(sigma >= 5.0)) throw DomainError("packet width must be >= 5 lambda");
  if (!(points_per_wavelength >= 20.0))
    throw DomainError("need at least 20 points per wavelength");
  const double extent = region.extent();
  const double margin = 6.0 * sigma;
  const double dx = 1.0 / points_per_wavelength;

  TransitPlan plan;
  plan.placed = {region, 0.0};
  plan.packet = {-margin, sigma, units::kWavenumber};
  const double travel = 2.0 * margin + extent;
  const double x_min = -2.0 * margin - extent - 1.0;
  const double x_max = extent + 2.0 * margin + 1.0;
  const auto intervals = static_cast<std::size_t>(std::ceil((x_max - x_min) / dx));
  plan.grid = {x_min, x_min + dx * static_cast<double>(intervals), intervals + 1,
               dx / units::kGroupVelocity};
  plan.steps = static_cast<std::size_t>(std::ceil(travel / dx));
  return plan;
}

std::vector<BandwidthRow> bandwidth_study(double v_over_e, PhaseKind kind, int n,
                                          const std::vector<double>& sigmas, double width_scale,
                                          double points_per_wavelength) {
  if (sigmas.empty()) throw DomainError("bandwidth study needs at least one sigma");
  for (double s : sigmas)
    if (!(s >= 5.0)) throw DomainError("packet widths must be >= 5 lambda");
  if (!(width_scale > 0.0)) throw DomainError("width scale must be positive");

  const double expected = phase_for(kind, v_over_e, n);
  const double width = resonance_width(v_over_e, kind, n) * width_scale;
  const ScatteringRegion region = kind == PhaseKind::kStep
                                      ? ScatteringRegion::step(v_over_e, width)
                                      : ScatteringRegion::well(v_over_e, width);

  std::vector<BandwidthRow> rows;
  for (double sigma : sigmas) {
    const TransitPlan plan = plan_transit(region, sigma, points_per_wavelength);
    const PropagationResult res = evolve(plan.grid, plan.placed, plan.packet, plan.steps);
    BandwidthRow row;
    row.sigma = sigma;
    row.transmitted_phase = res.transmitted_phase;
    row.expected_phase = expected;
    row.phase_error = std::abs(wrap_angle(res.transmitted_phase - expected));
    row.reflected_prob = res.reflected_prob;
    row.max_norm_drift = res.max_norm_drift;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ballistic
