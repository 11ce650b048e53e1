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

#include "dicke/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

using linalg::Complex;
using linalg::ComplexMatrix;

namespace {

bool finite_non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

// Dissipator r * (A . A^dagger - 1/2 {A^dagger A, .}) as a superoperator.
ComplexMatrix dissipator(const ComplexMatrix& a, double rate) {
  const Eigen::Index d = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix ada = a.adjoint() * a;
  return rate * (linalg::kron(a.conjugate(), a) -
                 0.5 * linalg::kron(id, ada) -
                 0.5 * linalg::kron(ada.transpose(), id));
}

ComplexMatrix hamiltonian_part(const ComplexMatrix& h) {
  const Eigen::Index d = h.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const Complex minus_i(0.0, -1.0);
  return minus_i * (linalg::kron(id, h) - linalg::kron(h.transpose(), id));
}

}  // namespace

void ModelParams::validate() const {
  if (!finite_non_negative(omega) || !finite_non_negative(gamma_a) ||
      !finite_non_negative(nbar)) {
    std::ostringstream msg;
    msg << "ModelParams: omega, gamma_a and nbar must be finite and >= 0 (got "
        << omega << ", " << gamma_a << ", " << nbar << ")";
    throw ValidationError(msg.str());
  }
  if (omega == 0.0 && gamma_a == 0.0) {
    throw ValidationError("ModelParams: omega and gamma_a cannot both be zero");
  }
}

double ModelParams::gamma() const {
  if (!(omega > 0.0)) {
    throw ValidationError("ModelParams::gamma: requires omega > 0");
  }
  return gamma_a / omega;
}

double ModelParams::omega_r() const {
  if (!(gamma_a > 0.0) || j.two_j() == 0) {
    throw ValidationError("ModelParams::omega_r: requires gamma_a > 0 and j > 0");
  }
  return omega / (j.j() * gamma_a);
}

Superoperator build_liouvillian(const ModelParams& p) {
  p.validate();
  const ComplexMatrix jm = build_jminus(p.j).matrix;
  const ComplexMatrix jp = build_jplus(p.j).matrix;
  ComplexMatrix l = hamiltonian_part(0.5 * p.omega * (jp + jm));
  if (p.nbar > 0.0) l += dissipator(jp, p.gamma_a * p.nbar);
  l += dissipator(jm, p.gamma_a * (p.nbar + 1.0));
  const int d = p.j.dim();
  return {d * d, std::move(l)};
}

Superoperator build_dicke_liouvillian(SpinQuantum j, double omega,
                                      double gamma_a) {
  ModelParams{j, omega, gamma_a, 0.0}.validate();
  const int d = j.dim();
  const ComplexMatrix jm = build_jminus(j).matrix;
  const ComplexMatrix jp = jm.adjoint();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix drive = 0.5 * omega * (jp + jm);
  const ComplexMatrix jpjm = jp * jm;
  const Complex i(0.0, 1.0);
  // -i(H rho - rho H) + (gamma/2)(2 J- rho J+ - J+J- rho - rho J+J-)
  ComplexMatrix l = -i * linalg::kron(id, drive) + i * linalg::kron(drive.transpose(), id);
  l += 0.5 * gamma_a *
       (2.0 * linalg::kron(jp.transpose(), jm) - linalg::kron(id, jpjm) -
        linalg::kron(jpjm.transpose(), id));
  return {d * d, std::move(l)};
}

MasterEquation::MasterEquation(const ModelParams& p)
    : jminus_(build_jminus(p.j).matrix),
      jplus_(build_jplus(p.j).matrix),
      down_rate_(p.gamma_a * (p.nbar + 1.0)),
      up_rate_(p.gamma_a * p.nbar) {
  p.validate();
  const Complex i(0.0, 1.0);
  const ComplexMatrix h = 0.5 * p.omega * (jplus_ + jminus_);
  effective_ = -i * h - 0.5 * down_rate_ * (jplus_ * jminus_) -
               0.5 * up_rate_ * (jminus_ * jplus_);
  const double jnorm = jminus_.norm();
  norm_bound_ = 2.0 * effective_.norm() +
                (down_rate_ + up_rate_) * jnorm * jnorm;
}

ComplexMatrix MasterEquation::apply(const ComplexMatrix& rho) const {
  ComplexMatrix out = effective_ * rho;
  out += rho * effective_.adjoint();
  out += down_rate_ * (jminus_ * rho * jplus_);
  if (up_rate_ > 0.0) out += up_rate_ * (jplus_ * rho * jminus_);
  return out;
}

namespace {

ComplexMatrix rk4_steps(const MasterEquation& eq, const ComplexMatrix& rho0,
                        double span, long steps) {
  const double h = span / double(steps);
  ComplexMatrix rho = rho0;
  for (long s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = eq.apply(rho);
    const ComplexMatrix k2 = eq.apply(rho + 0.5 * h * k1);
    const ComplexMatrix k3 = eq.apply(rho + 0.5 * h * k2);
    const ComplexMatrix k4 = eq.apply(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint()).eval();
  }
  return rho;
}

}  // namespace

Trajectory evolve(const DensityMatrix& rho0, const ModelParams& p,
                  std::span<const double> t_grid,
                  const NumericSettings& settings) {
  p.validate();
  if (!(rho0.basis() == p.j)) {
    throw ValidationError("evolve: initial state and parameters use different j");
  }
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw ValidationError("evolve: time grid must be non-empty and start at 0");
  }
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!std::isfinite(t_grid[k]) || !(t_grid[k] >= t_grid[k - 1])) {
      throw ValidationError("evolve: time grid must be finite and ascending");
    }
  }

  const MasterEquation eq(p);
  Trajectory out;
  out.times.assign(t_grid.begin(), t_grid.end());
  out.states.reserve(t_grid.size());
  out.states.push_back(rho0);

  ComplexMatrix rho = rho0.matrix();
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    const double span = t_grid[k] - t_grid[k - 1];
    if (span > 0.0) {
      const double initial = std::ceil(span * eq.norm_bound());
      long steps = std::max(1L, static_cast<long>(std::min(initial, 1e9)));
      ComplexMatrix coarse = rk4_steps(eq, rho, span, steps);
      const Complex trace_before = rho.trace();
      for (;;) {
        if (2 * steps > settings.max_substeps) {
          std::ostringstream msg;
          msg << "evolve: step size underflow at t = " << t_grid[k - 1]
              << " (substeps > " << settings.max_substeps << ")";
          throw IntegrationError(msg.str(), t_grid[k - 1]);
        }
        ComplexMatrix fine = rk4_steps(eq, rho, span, 2 * steps);
        const double err = (fine - coarse).cwiseAbs().maxCoeff() / 15.0;
        const double drift = std::abs(fine.trace() - trace_before);
        if (!linalg::all_finite(fine)) {
          throw IntegrationError("evolve: state became non-finite", t_grid[k - 1]);
        }
        if (err <= settings.integrator_tol && drift <= settings.trace_drift_tol) {
          rho = std::move(fine);
          break;
        }
        coarse = std::move(fine);
        steps *= 2;
      }
    }
    out.states.emplace_back(p.j, rho, settings);
  }
  return out;
}

DensityMatrix steady_state_numeric(const ModelParams& p,
                                   const NumericSettings& settings) {
  p.validate();
  if (!(p.omega > 0.0) && p.nbar != 0.0) {
    throw ValidationError(
        "steady_state_numeric: omega = 0 requires nbar = 0");
  }
  const int d = p.j.dim();
  if (d > kMaxDenseDim) {
    std::ostringstream msg;
    msg << "steady_state_numeric: dimension " << d << " exceeds the dense limit "
        << kMaxDenseDim << "; use steady_state_analytic for nbar = 0";
    throw CapacityError(msg.str());
  }
  const Superoperator l = build_liouvillian(p);
  const linalg::ComplexVector kernel = linalg::null_vector(l.matrix, settings);
  ComplexMatrix rho = linalg::unvec(kernel, d);
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(p.j, std::move(rho), settings);
}

}  // namespace dicke
