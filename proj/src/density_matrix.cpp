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

#include "dicke/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

void validate_density(const linalg::ComplexMatrix& m,
                      const NumericSettings& settings) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw ValidationError("density matrix: not square");
  }
  if (!linalg::all_finite(m)) {
    throw ValidationError("density matrix: non-finite entries");
  }
  const double defect = linalg::hermiticity_defect(m);
  if (defect > settings.hermitian_tol) {
    std::ostringstream msg;
    msg << "density matrix: not Hermitian (defect " << defect << ")";
    throw ValidationError(msg.str());
  }
  const linalg::Complex tr = m.trace();
  if (std::abs(tr - 1.0) > settings.trace_tol) {
    std::ostringstream msg;
    msg << "density matrix: trace is " << tr.real() << "+" << tr.imag()
        << "i, expected 1";
    throw ValidationError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<linalg::ComplexMatrix> solver(
      0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues()(0);
  if (lowest < settings.density_min_eigenvalue) {
    std::ostringstream msg;
    msg << "density matrix: not positive semidefinite (eigenvalue " << lowest
        << ")";
    throw ValidationError(msg.str());
  }
}

DensityMatrix::DensityMatrix(SpinQuantum basis, linalg::ComplexMatrix matrix,
                             const NumericSettings& settings)
    : basis_(basis), matrix_(std::move(matrix)) {
  if (matrix_.rows() != basis_.dim() || matrix_.cols() != basis_.dim()) {
    std::ostringstream msg;
    msg << "density matrix: expected " << basis_.dim() << "x" << basis_.dim()
        << " for 2j = " << basis_.two_j() << ", got " << matrix_.rows() << "x"
        << matrix_.cols();
    throw ValidationError(msg.str());
  }
  validate_density(matrix_, settings);
}

DensityMatrix DensityMatrix::basis_projector(SpinQuantum basis, int index) {
  if (index < 0 || index >= basis.dim()) {
    throw ValidationError("basis_projector: index " + std::to_string(index) +
                          " out of range for dimension " +
                          std::to_string(basis.dim()));
  }
  linalg::ComplexMatrix m =
      linalg::ComplexMatrix::Zero(basis.dim(), basis.dim());
  m(index, index) = 1.0;
  return DensityMatrix(Unchecked{}, basis, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(SpinQuantum basis) {
  const int d = basis.dim();
  return DensityMatrix(Unchecked{}, basis,
                       linalg::ComplexMatrix::Identity(d, d) / double(d));
}

linalg::Complex expectation(const DensityMatrix& rho, const Operator& a) {
  if (!(rho.basis() == a.basis) || a.matrix.rows() != rho.dim()) {
    throw ValidationError("expectation: dimension mismatch between state and operator");
  }
  // Tr(rho A) = sum_ij rho_ij A_ji
  return rho.matrix().cwiseProduct(a.matrix.transpose()).sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.basis() == b.basis())) {
    throw ValidationError("trace_distance: states live on different spaces");
  }
  return linalg::trace_distance(a.matrix(), b.matrix());
}

}  // namespace dicke
