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

#include "dicke/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "dicke/errors.hpp"

namespace dicke::semiclassical {

namespace {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

Vec3 to_vec(const BlochState& s) { return {s.sx, s.sy, s.sz}; }
BlochState from_vec(const Vec3& v) { return {v(0), v(1), v(2)}; }

Mat3 to_mat(const Jacobian& j) {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = j[r][c];
  return m;
}

double residual(const BlochState& s, double omega_r) {
  return to_vec(meanfield_rhs(s, omega_r)).norm();
}

void require_omega_r(double omega_r) {
  if (!std::isfinite(omega_r) || omega_r < 0.0) {
    std::ostringstream msg;
    msg << "omega_r must be finite and >= 0, got " << omega_r;
    throw ValidationError(msg.str());
  }
}

// Gauss-Newton on f(s) = 0. The Jacobian is rank deficient along s, so the
// minimum-norm step from a complete orthogonal decomposition is used.
BlochState polish(const BlochState& start, double omega_r) {
  BlochState best = start;
  double best_res = residual(start, omega_r);
  Vec3 s = to_vec(start);
  for (int it = 0; it < 4 && best_res > 0.0; ++it) {
    const Mat3 jac = to_mat(jacobian_analytic(from_vec(s), omega_r));
    const Vec3 f = to_vec(meanfield_rhs(from_vec(s), omega_r));
    s -= jac.completeOrthogonalDecomposition().solve(f);
    const double res = residual(from_vec(s), omega_r);
    if (!(res < best_res)) break;
    best_res = res;
    best = from_vec(s);
  }
  return best;
}

FixedPointReport report(const BlochState& raw, double omega_r,
                        const NumericSettings& settings) {
  FixedPointReport out;
  out.point = polish(raw, omega_r);
  out.jacobian_eigenvalues = jacobian_eigenvalues(out.point, omega_r, settings);
  const auto tangent = tangent_eigenvalues(out.point, omega_r);
  out.leading_real = std::max(tangent[0].real(), tangent[1].real());
  out.stable = out.leading_real < -settings.stability_tol;
  return out;
}

}  // namespace

double BlochState::norm() const noexcept { return std::sqrt(length_squared()); }

BlochState meanfield_rhs(const BlochState& s, double omega_r) {
  return {s.sz * s.sx, s.sz * (s.sy - omega_r),
          omega_r * s.sy - s.sx * s.sx - s.sy * s.sy};
}

Jacobian jacobian_analytic(const BlochState& s, double omega_r) {
  return {{{s.sz, 0.0, s.sx},
           {0.0, s.sz, s.sy - omega_r},
           {-2.0 * s.sx, omega_r - 2.0 * s.sy, 0.0}}};
}

Jacobian jacobian_finite_difference(const BlochState& s, double omega_r,
                                    double step) {
  Jacobian out{};
  for (int c = 0; c < 3; ++c) {
    Vec3 plus = to_vec(s);
    Vec3 minus = to_vec(s);
    plus(c) += step;
    minus(c) -= step;
    const Vec3 diff = (to_vec(meanfield_rhs(from_vec(plus), omega_r)) -
                       to_vec(meanfield_rhs(from_vec(minus), omega_r))) /
                      (2.0 * step);
    for (int r = 0; r < 3; ++r) out[r][c] = diff(r);
  }
  return out;
}

std::array<std::complex<double>, 3> jacobian_eigenvalues(
    const BlochState& point, double omega_r, const NumericSettings& settings) {
  require_omega_r(omega_r);
  const double res = residual(point, omega_r);
  if (!(res <= settings.fixed_point_tol)) {
    std::ostringstream msg;
    msg << "jacobian_eigenvalues: (" << point.sx << ", " << point.sy << ", "
        << point.sz << ") is not a fixed point for omega_r = " << omega_r
        << " (residual " << res << ")";
    throw ValidationError(msg.str());
  }
  Eigen::EigenSolver<Mat3> solver(to_mat(jacobian_analytic(point, omega_r)),
                                  false);
  std::array<std::complex<double>, 3> out;
  for (int k = 0; k < 3; ++k) out[k] = solver.eigenvalues()(k);
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  return out;
}

std::array<std::complex<double>, 2> tangent_eigenvalues(
    const BlochState& point, double omega_r) {
  const Vec3 n = to_vec(point).normalized();
  // Seed with the axis least aligned with n.
  Eigen::Index axis = 0;
  n.cwiseAbs().minCoeff(&axis);
  Vec3 seed = Vec3::Zero();
  seed(axis) = 1.0;
  const Vec3 e1 = (seed - seed.dot(n) * n).normalized();
  const Vec3 e2 = n.cross(e1);
  Eigen::Matrix<double, 3, 2> basis;
  basis << e1, e2;
  const Eigen::Matrix2d t =
      basis.transpose() * to_mat(jacobian_analytic(point, omega_r)) * basis;
  const double half_trace = 0.5 * t.trace();
  const std::complex<double> disc =
      std::sqrt(std::complex<double>(half_trace * half_trace - t.determinant()));
  return {half_trace + disc, half_trace - disc};
}

std::vector<FixedPointReport> find_fixed_points(double omega_r,
                                                const NumericSettings& settings) {
  require_omega_r(omega_r);
  std::vector<FixedPointReport> out;
  if (omega_r < 1.0) {
    const double sz = std::sqrt((1.0 - omega_r) * (1.0 + omega_r));
    out.push_back(report({0.0, omega_r, -sz}, omega_r, settings));
    out.push_back(report({0.0, omega_r, sz}, omega_r, settings));
  } else if (omega_r == 1.0) {
    out.push_back(report({0.0, 1.0, 0.0}, omega_r, settings));
  } else {
    const double sy = 1.0 / omega_r;
    const double sx = std::sqrt((1.0 - sy) * (1.0 + sy));
    out.push_back(report({sx, sy, 0.0}, omega_r, settings));
    out.push_back(report({-sx, sy, 0.0}, omega_r, settings));
  }
  return out;
}

FixedPointReport tracked_branch(double omega_r, const NumericSettings& settings) {
  return find_fixed_points(omega_r, settings).front();
}

double bifurcation_scan(std::span<const double> grid,
                        const NumericSettings& settings) {
  if (grid.size() < 2) {
    throw ValidationError("bifurcation_scan: grid needs at least two points");
  }
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) {
      throw ValidationError("bifurcation_scan: grid must be strictly ascending");
    }
  }
  auto stable_at = [&](double w) { return tracked_branch(w, settings).stable; };

  bool previous = stable_at(grid[0]);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const bool current = stable_at(grid[k]);
    if (previous && !current) {
      double lo = grid[k - 1];
      double hi = grid[k];
      for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (stable_at(mid) ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    previous = current;
  }
  std::ostringstream msg;
  msg << "bifurcation_scan: no loss of stability on the grid [" << grid.front()
      << ", " << grid.back() << "]";
  throw NotFoundError(msg.str());
}

std::vector<BlochState> integrate(const BlochState& s0, double omega_r,
                                  double tau_end, int steps) {
  require_omega_r(omega_r);
  if (steps < 1 || !std::isfinite(tau_end) || tau_end < 0.0) {
    throw ValidationError("integrate: need steps >= 1 and a finite tau_end >= 0");
  }
  const double h = tau_end / steps;
  auto f = [omega_r](const Vec3& v) {
    return to_vec(meanfield_rhs(from_vec(v), omega_r));
  };
  std::vector<BlochState> out;
  out.reserve(steps + 1);
  Vec3 s = to_vec(s0);
  out.push_back(s0);
  for (int k = 0; k < steps; ++k) {
    const Vec3 k1 = f(s);
    const Vec3 k2 = f(s + 0.5 * h * k1);
    const Vec3 k3 = f(s + 0.5 * h * k2);
    const Vec3 k4 = f(s + h * k3);
    s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.push_back(from_vec(s));
  }
  return out;
}

}  // namespace dicke::semiclassical
