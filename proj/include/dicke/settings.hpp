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

#pragma once

namespace dicke {

/// Shared numeric thresholds. Every routine that takes a tolerance reads it
/// from here so callers can override all of them in one place.
struct NumericSettings {
  /// max |A - A^dagger| entrywise accepted as Hermitian.
  double hermitian_tol = 1e-10;
  /// Eigenvalues in [-psd_clamp, 0) are clamped to zero in PSD contexts.
  double psd_clamp = 1e-10;
  /// Smallest eigenvalue allowed in a density matrix.
  double density_min_eigenvalue = -1e-9;
  /// |Tr(rho) - 1| accepted for a density matrix.
  double trace_tol = 1e-10;
  /// null_vector: sigma_min must be <= null_tol * ||A||_F ...
  double null_tol = 1e-9;
  /// ... and sigma_2 >= null_gap * ||A||_F.
  double null_gap = 1e-8;
  /// solve_linear: reciprocal condition estimate below this is singular.
  double singular_rcond = 1e-15;
  /// Local error target of the step-doubling RK4 integrator (max-norm).
  double integrator_tol = 1e-11;
  /// Allowed trace drift per output interval before the step is halved.
  double trace_drift_tol = 1e-12;
  /// Substeps per output interval above which integration gives up.
  long max_substeps = 1L << 24;
  /// Eigenvalues of rho * rho_tilde with |mu| below this count as zero.
  double concurrence_clamp = 1e-12;
  /// Imaginary parts of those eigenvalues beyond this are an error.
  double concurrence_imag_tol = 1e-8;
  /// Fixed points must satisfy ||f(s)|| below this.
  double fixed_point_tol = 1e-8;
  /// Leading tangent eigenvalue real part below -stability_tol is stable.
  double stability_tol = 1e-12;
};

}  // namespace dicke
