// Copyright 2026 The dicke-sim Authors
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

// Mean-field limit of the zero-temperature Dicke model. With s = <J>/j,
// s- = sx - i sy and scaled time tau = j gamma_a t, factorizing the
// Heisenberg equations gives
//
//   ds-/dtau = i Omega_r sz + sz s-
//   dsz/dtau = (i Omega_r / 2)(s- - s+) - s+ s-
//
// or in real components
//
//   dsx/dtau = sz sx
//   dsy/dtau = sz (sy - Omega_r)
//   dsz/dtau = Omega_r sy - sx^2 - sy^2.
//
// |s|^2 is conserved, so the Jacobian always has a zero eigenvalue along s.
// Stability is decided by the two eigenvalues on the tangent plane.

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "dicke/settings.hpp"

namespace dicke::semiclassical {

struct BlochState {
  double sx = 0.0;
  double sy = 0.0;
  double sz = -1.0;

  double length_squared() const noexcept { return sx * sx + sy * sy + sz * sz; }
  double norm() const noexcept;
};

using Jacobian = std::array<std::array<double, 3>, 3>;

struct FixedPointReport {
  BlochState point;
  /// All three Jacobian eigenvalues, including the conserved-direction zero.
  std::array<std::complex<double>, 3> jacobian_eigenvalues;
  /// Largest real part among the two tangent-plane eigenvalues.
  double leading_real = 0.0;
  bool stable = false;
};

BlochState meanfield_rhs(const BlochState& s, double omega_r);

Jacobian jacobian_analytic(const BlochState& s, double omega_r);
/// Central differences with the given step.
Jacobian jacobian_finite_difference(const BlochState& s, double omega_r,
                                    double step = 1e-6);

/// Eigenvalues of the 3x3 Jacobian at a fixed point (residual must be below
/// settings.fixed_point_tol, else ValidationError).
std::array<std::complex<double>, 3> jacobian_eigenvalues(
    const BlochState& point, double omega_r,
    const NumericSettings& settings = {});

/// Eigenvalues restricted to the plane orthogonal to the point.
std::array<std::complex<double>, 2> tangent_eigenvalues(
    const BlochState& point, double omega_r);

/// On-sphere fixed points. Omega_r < 1: sx = 0, sy = Omega_r,
/// sz = -+sqrt(1 - Omega_r^2) (lower one first). Omega_r >= 1: sz = 0,
/// sy = 1/Omega_r, sx = +-sqrt(1 - sy^2) (a single point at Omega_r = 1).
std::vector<FixedPointReport> find_fixed_points(
    double omega_r, const NumericSettings& settings = {});

/// The branch continued from the stable south-pole fixed point: the lower
/// on-sphere point below Omega_r = 1, the sx >= 0 equator point above.
FixedPointReport tracked_branch(double omega_r,
                                const NumericSettings& settings = {});

/// Omega_r where the tracked branch stops being stable, bracketed on the
/// ascending grid and refined by bisection. NotFoundError without a change.
double bifurcation_scan(std::span<const double> omega_r_grid,
                        const NumericSettings& settings = {});

/// RK4 integration of the mean-field equations, returning the state at every
/// step (steps + 1 entries).
std::vector<BlochState> integrate(const BlochState& s0, double omega_r,
                                  double tau_end, int steps);

}  // namespace dicke::semiclassical
