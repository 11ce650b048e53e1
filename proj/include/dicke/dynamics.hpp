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

// Collective master equation with thermal occupation nbar:
//
//   drho/dt = -i (Omega/2) [J+ + J-, rho]
//             + gamma_a nbar/2     (2 J+ rho J- - J- J+ rho - rho J- J+)
//             + gamma_a (nbar+1)/2 (2 J- rho J+ - J+ J- rho - rho J+ J-)
//
// Superoperators act on column-stacked density matrices, so
// vec(A X B) = kron(B^T, A) vec(X).

#pragma once

#include <span>
#include <vector>

#include "dicke/density_matrix.hpp"
#include "dicke/settings.hpp"
#include "dicke/spin_ops.hpp"

namespace dicke {

/// Largest dimension 2j + 1 served by the dense superoperator path.
inline constexpr int kMaxDenseDim = 33;

struct ModelParams {
  SpinQuantum j{2};
  double omega = 1.0;    // Rabi frequency
  double gamma_a = 1.0;  // collective decay rate
  double nbar = 0.0;     // mean phonon number

  /// Throws ValidationError for negative/non-finite values or when both
  /// omega and gamma_a vanish.
  void validate() const;

  /// gamma_a / omega; requires omega > 0.
  double gamma() const;
  /// omega / (j gamma_a); requires gamma_a > 0 and j > 0.
  double omega_r() const;
};

struct Superoperator {
  int dim = 0;  // d^2
  linalg::ComplexMatrix matrix;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
};

Superoperator build_liouvillian(const ModelParams& p);

/// Zero-temperature Dicke generator assembled on its own (single J- channel).
/// Used to cross-check build_liouvillian at nbar = 0.
Superoperator build_dicke_liouvillian(SpinQuantum j, double omega,
                                      double gamma_a);

/// Right-hand side L(rho) evaluated in operator form, O(d^3).
class MasterEquation {
 public:
  explicit MasterEquation(const ModelParams& p);
  linalg::ComplexMatrix apply(const linalg::ComplexMatrix& rho) const;
  /// Upper bound on the operator norm of the generator.
  double norm_bound() const noexcept { return norm_bound_; }

 private:
  linalg::ComplexMatrix effective_;  // -iH - 1/2 sum_k r_k A_k^dagger A_k
  linalg::ComplexMatrix jminus_;
  linalg::ComplexMatrix jplus_;
  double down_rate_;
  double up_rate_;
  double norm_bound_;
};

/// Integrates drho/dt = L rho onto t_grid (ascending, starting at 0) with
/// classical RK4. Each output interval is split into equal substeps; the
/// substep count doubles until the step-doubling error estimate and the trace
/// drift both meet settings. rho is re-symmetrized after every substep.
Trajectory evolve(const DensityMatrix& rho0, const ModelParams& p,
                  std::span<const double> t_grid,
                  const NumericSettings& settings = {});

/// Kernel of the Liouvillian, trace-normalized. Requires omega > 0 or
/// (omega = 0 and nbar = 0), and 2j + 1 <= kMaxDenseDim.
DensityMatrix steady_state_numeric(const ModelParams& p,
                                   const NumericSettings& settings = {});

}  // namespace dicke
