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

// Test-only oracles. Nothing here calls into the code paths it checks.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace ballistic::testing {

using cplx = std::complex<double>;

struct OdeScatter {
  cplx t;
  cplx r;
};

/// Integrates psi'' = -(2 pi)^2 (e - V(x)) psi with RK4 from the right edge
/// (pure outgoing wave) back to the left edge, then splits the left-side
/// solution into incident and reflected parts. `layers` are (V, width).
inline OdeScatter ode_scatter(const std::vector<std::pair<double, double>>& layers, double e,
                              int steps_per_layer = 20000) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double k = two_pi * std::sqrt(e);
  double total = 0.0;
  for (const auto& l : layers) total += l.second;

  const cplx i(0.0, 1.0);
  cplx psi = 1.0, dpsi = i * k;  // at x = total
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    const double q2 = two_pi * two_pi * (e - it->first);
    const double h = -it->second / steps_per_layer;
    auto f = [&](cplx y, cplx dy) { return std::pair<cplx, cplx>{dy, -q2 * y}; };
    for (int s = 0; s < steps_per_layer; ++s) {
      auto [k1a, k1b] = f(psi, dpsi);
      auto [k2a, k2b] = f(psi + 0.5 * h * k1a, dpsi + 0.5 * h * k1b);
      auto [k3a, k3b] = f(psi + 0.5 * h * k2a, dpsi + 0.5 * h * k2b);
      auto [k4a, k4b] = f(psi + h * k3a, dpsi + h * k3b);
      psi += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
      dpsi += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    }
  }
  const cplx incident = 0.5 * (psi + dpsi / (i * k));
  const cplx reflected = 0.5 * (psi - dpsi / (i * k));
  return {1.0 / incident * std::exp(-i * k * total), reflected / incident};
}

/// Full-register matrix of a gate on the given targets, built with Kronecker
/// products and an explicit basis permutation (qubit 0 most significant).
inline Eigen::MatrixXcd embed(const Eigen::MatrixXcd& gate, const std::vector<int>& targets,
                              int n) {
  const int dim = 1 << n;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  auto bit = [n](int idx, int q) { return (idx >> (n - 1 - q)) & 1; };
  for (int row = 0; row < dim; ++row)
    for (int col = 0; col < dim; ++col) {
      bool others_match = true;
      for (int q = 0; q < n; ++q) {
        bool is_target = false;
        for (int t : targets) is_target |= (t == q);
        if (!is_target && bit(row, q) != bit(col, q)) others_match = false;
      }
      if (!others_match) continue;
      int gr = 0, gc = 0;
      for (int t : targets) {
        gr = 2 * gr + bit(row, t);
        gc = 2 * gc + bit(col, t);
      }
      full(row, col) = gate(gr, gc);
    }
  return full;
}

/// Haar-random unitary from the QR decomposition of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd z(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) z(r, c) = cplx(g(rng), g(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) q.col(c) *= std::polar(1.0, std::arg(rr(c, c)));
  return q;
}

inline double wrapped_difference(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * std::numbers::pi));
}

}  // namespace ballistic::testing
