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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "dicke/dynamics.hpp"
#include "dicke/errors.hpp"
#include "test_util.hpp"

using namespace dicke;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

namespace {

std::vector<double> linear_grid(double t_max, int steps) {
  std::vector<double> t(steps + 1);
  for (int k = 0; k <= steps; ++k) t[k] = t_max * k / steps;
  return t;
}

double min_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

TEST_CASE("ModelParams validation and derived ratios") {
  CHECK_THROWS_AS((ModelParams{SpinQuantum(2), 0.0, 0.0, 0.0}.validate()),
                  ValidationError);
  CHECK_THROWS_AS((ModelParams{SpinQuantum(2), -1.0, 1.0, 0.0}.validate()),
                  ValidationError);
  CHECK_THROWS_AS((ModelParams{SpinQuantum(2), 1.0, 1.0, -0.1}.validate()),
                  ValidationError);
  const ModelParams p{SpinQuantum(8), 2.0, 0.5, 0.0};
  CHECK(p.gamma() == 0.25);
  CHECK(p.omega_r() == 1.0);
  CHECK_THROWS_AS((ModelParams{SpinQuantum(2), 0.0, 1.0, 0.0}.gamma()),
                  ValidationError);
  CHECK_THROWS_AS((ModelParams{SpinQuantum(2), 1.0, 0.0, 0.0}.omega_r()),
                  ValidationError);
}

TEST_CASE("Liouvillian annihilates the trace functional") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int two_j : {1, 2, 3, 6, 12}) {
    for (int trial = 0; trial < 4; ++trial) {
      const ModelParams p{SpinQuantum(two_j), u(rng), u(rng) + 0.1, u(rng)};
      const Superoperator l = build_liouvillian(p);
      const int d = p.j.dim();
      CHECK(l.dim == d * d);
      const ComplexVector trace_row =
          linalg::vec(ComplexMatrix::Identity(d, d)).adjoint() * l.matrix;
      CHECK(trace_row.cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, l.matrix.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("Liouvillian maps Hermitian matrices to Hermitian matrices") {
  std::mt19937_64 rng(8);
  for (int two_j : {1, 2, 5}) {
    const ModelParams p{SpinQuantum(two_j), 1.3, 0.7, 0.4};
    const Superoperator l = build_liouvillian(p);
    const int d = p.j.dim();
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix h = dicke::testing::random_hermitian(d, rng);
      const ComplexMatrix out = linalg::unvec(l.matrix * linalg::vec(h), d);
      CHECK(linalg::hermiticity_defect(out) < 1e-12);
    }
  }
}

TEST_CASE("two-level decay rate at j=1/2") {
  const ModelParams p{SpinQuantum(1), 0.0, 0.8, 0.0};
  const Superoperator l = build_liouvillian(p);
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(0, 0) = 1.0;
  const ComplexMatrix rate = linalg::unvec(l.matrix * linalg::vec(excited), 2);
  CHECK(std::abs(rate(0, 0) + 0.8) < 1e-15);
  CHECK(std::abs(rate(1, 1) - 0.8) < 1e-15);
}

TEST_CASE("known j=1 steady state lies in the kernel") {
  const Superoperator l = build_liouvillian({SpinQuantum(2), 1.0, 1.0, 0.0});
  const ComplexVector r = l.matrix * linalg::vec(dicke::testing::reference_j1_gamma1());
  CHECK(r.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("thermal generator at nbar=0 equals the Dicke generator entrywise") {
  for (int two_j : {1, 2, 4, 9, 16}) {
    for (double omega : {0.0, 0.5, 2.0}) {
      const SpinQuantum j(two_j);
      const Superoperator a = build_liouvillian({j, omega, 1.7, 0.0});
      const Superoperator b = build_dicke_liouvillian(j, omega, 1.7);
      CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() <=
            1e-14 * a.matrix.cwiseAbs().maxCoeff());
    }
  }
}

TEST_CASE("operator-form right-hand side matches the dense superoperator") {
  std::mt19937_64 rng(9);
  for (int two_j : {1, 2, 7}) {
    const ModelParams p{SpinQuantum(two_j), 0.9, 1.1, 0.6};
    const Superoperator l = build_liouvillian(p);
    const MasterEquation eq(p);
    const int d = p.j.dim();
    const ComplexMatrix rho = dicke::testing::random_density(d, rng);
    const ComplexMatrix dense = linalg::unvec(l.matrix * linalg::vec(rho), d);
    CHECK((eq.apply(rho) - dense).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("evolve: dark state is stationary") {
  for (int two_j : {1, 2, 6}) {
    const SpinQuantum j(two_j);
    const auto ground = DensityMatrix::basis_projector(j, j.dim() - 1);
    const auto grid = linear_grid(5.0, 10);
    const Trajectory traj = evolve(ground, {j, 0.0, 1.0, 0.0}, grid);
    REQUIRE(traj.states.size() == grid.size());
    for (const auto& s : traj.states) {
      CHECK((s.matrix() - ground.matrix()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("evolve: closed-system Rabi rotation") {
  const SpinQuantum j(2);
  const double omega = 1.3;
  const auto ground = DensityMatrix::basis_projector(j, 2);
  const auto grid = linear_grid(10.0, 50);
  const Trajectory traj = evolve(ground, {j, omega, 0.0, 0.0}, grid);
  const Operator jz = build_jz(j);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double expected = -std::cos(omega * grid[k]);
    CHECK(std::abs(expectation(traj.states[k], jz).real() - expected) < 1e-8);
  }
}

TEST_CASE("evolve: superradiant ladder populations") {
  const SpinQuantum j(2);
  const double gamma_a = 0.7;
  const auto excited = DensityMatrix::basis_projector(j, 0);
  const auto grid = linear_grid(8.0, 80);
  const Trajectory traj = evolve(excited, {j, 0.0, gamma_a, 0.0}, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto oracle = dicke::testing::ladder_populations_j1(gamma_a, grid[k]);
    const ComplexMatrix& rho = traj.states[k].matrix();
    CHECK(std::abs(rho(0, 0).real() - oracle.top) < 1e-8);
    CHECK(std::abs(rho(1, 1).real() - oracle.middle) < 1e-8);
    CHECK(std::abs(rho(2, 2).real() - oracle.bottom) < 1e-8);
  }
}

TEST_CASE("evolve: trace, Hermiticity and positivity along trajectories") {
  struct Case { int two_j; double omega, gamma_a, nbar; };
  for (const Case c : {Case{2, 1.0, 1.0, 0.0}, Case{2, 1.0, 1.0, 1.0},
                       Case{4, 2.0, 0.5, 0.3}, Case{7, 0.5, 1.0, 2.0}}) {
    const SpinQuantum j(c.two_j);
    const auto excited = DensityMatrix::basis_projector(j, 0);
    const Trajectory traj =
        evolve(excited, {j, c.omega, c.gamma_a, c.nbar}, linear_grid(10.0, 40));
    for (const auto& s : traj.states) {
      CHECK(std::abs(s.matrix().trace() - 1.0) < 1e-9);
      CHECK(linalg::hermiticity_defect(s.matrix()) < 1e-9);
      CHECK(min_eigenvalue(s.matrix()) >= -1e-8);
    }
  }
}

TEST_CASE("evolve: rejects malformed time grids and mismatched j") {
  const SpinQuantum j(2);
  const auto rho = DensityMatrix::basis_projector(j, 0);
  const ModelParams p{j, 1.0, 1.0, 0.0};
  const std::vector<double> late{0.5, 1.0};
  const std::vector<double> descending{0.0, 1.0, 0.5};
  CHECK_THROWS_AS(evolve(rho, p, late), ValidationError);
  CHECK_THROWS_AS(evolve(rho, p, descending), ValidationError);
  CHECK_THROWS_AS(evolve(rho, {SpinQuantum(3), 1.0, 1.0, 0.0}, linear_grid(1.0, 2)),
                  ValidationError);
}

TEST_CASE("evolve: substep budget exhaustion is an integration failure") {
  NumericSettings tight;
  tight.max_substeps = 4;
  const SpinQuantum j(8);
  const auto rho = DensityMatrix::basis_projector(j, 0);
  try {
    evolve(rho, {j, 1.0, 5.0, 0.0}, linear_grid(10.0, 2), tight);
    FAIL("expected an integration failure");
  } catch (const IntegrationError& e) {
    CHECK(e.time_reached() == 0.0);
  }
}

TEST_CASE("steady_state_numeric: undriven decay ends in the ground state") {
  for (int two_j : {1, 2, 5, 10}) {
    const SpinQuantum j(two_j);
    const DensityMatrix ss = steady_state_numeric({j, 0.0, 1.0, 0.0});
    const auto ground = DensityMatrix::basis_projector(j, j.dim() - 1);
    CHECK(trace_distance(ss, ground) < 1e-10);
  }
}

TEST_CASE("steady_state_numeric: j=1, gamma=1 reproduces the closed form") {
  const DensityMatrix ss = steady_state_numeric({SpinQuantum(2), 1.0, 1.0, 0.0});
  CHECK(dicke::testing::max_abs_diff(ss.matrix(), dicke::testing::reference_j1_gamma1()) <
        1e-12);
}

TEST_CASE("steady_state_numeric agrees with long-time integration") {
  const SpinQuantum j(2);
  const ModelParams p{j, 1.0, 1.0, 2.0};
  const DensityMatrix ss = steady_state_numeric(p);
  const Trajectory traj =
      evolve(DensityMatrix::basis_projector(j, 0), p, linear_grid(50.0, 50));
  CHECK(trace_distance(traj.states.back(), ss) < 1e-6);
  const ComplexVector residual =
      build_liouvillian(p).matrix * linalg::vec(ss.matrix());
  CHECK(residual.norm() <= 1e-9 * build_liouvillian(p).matrix.norm());
}

TEST_CASE("steady state is a fixed point of the evolution") {
  for (int two_j : {2, 4}) {
    const SpinQuantum j(two_j);
    const ModelParams p{j, 1.0, 0.8, 0.5};
    const DensityMatrix ss = steady_state_numeric(p);
    const Trajectory traj = evolve(ss, p, linear_grid(10.0 / p.gamma_a, 10));
    CHECK(trace_distance(traj.states.back(), ss) < 1e-7);
  }
}

TEST_CASE("steady state does not depend on the initial state") {
  const SpinQuantum j(2);
  const ModelParams p{j, 1.0, 1.0, 0.5};
  const auto grid = linear_grid(50.0, 25);
  const Trajectory from_top = evolve(DensityMatrix::basis_projector(j, 0), p, grid);
  const Trajectory from_bottom = evolve(DensityMatrix::basis_projector(j, 2), p, grid);
  CHECK(trace_distance(from_top.states.back(), from_bottom.states.back()) < 1e-6);
}

TEST_CASE("steady_state_numeric: error paths") {
  CHECK_THROWS_AS(steady_state_numeric({SpinQuantum(34), 1.0, 1.0, 0.0}),
                  CapacityError);
  // Unitary dynamics: every function of the drive is stationary.
  CHECK_THROWS_AS(steady_state_numeric({SpinQuantum(2), 1.0, 0.0, 0.0}),
                  DegeneracyError);
  CHECK_THROWS_AS(steady_state_numeric({SpinQuantum(2), 0.0, 1.0, 1.0}),
                  ValidationError);
}
