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

// Dense complex linear algebra used by every other module. The routines are
// thin contracts over Eigen's decompositions: each one validates its input,
// runs the decomposition and reports failures through dicke::Error.

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "dicke/settings.hpp"

namespace dicke::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // column k belongs to values[k]
};

/// Eigen-decomposition of a Hermitian matrix. Throws ValidationError for a
/// non-square, non-finite or non-Hermitian input.
HermitianEigen hermitian_eig(const ComplexMatrix& a,
                             const NumericSettings& settings = {});

/// Eigenvalues of a general square matrix (unordered).
ComplexVector general_eigenvalues(const ComplexMatrix& a);

/// Solves a x = b by LU with partial pivoting. Throws SingularError when the
/// reciprocal condition estimate falls below settings.singular_rcond.
ComplexVector solve_linear(const ComplexMatrix& a, const ComplexVector& b,
                           const NumericSettings& settings = {});

/// Principal square root of a Hermitian PSD matrix. Eigenvalues down to
/// -settings.psd_clamp are clamped to zero, anything lower raises NotPsdError.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a,
                              const NumericSettings& settings = {});

/// Unit vector spanning the kernel of a, taken from the smallest singular
/// triplet. The phase is fixed so the largest-magnitude entry is real and
/// positive. Throws DegeneracyError unless the numerical nullity is exactly 1.
ComplexVector null_vector(const ComplexMatrix& a,
                          const NumericSettings& settings = {});

/// max_{ij} |A_ij - conj(A_ji)|.
double hermiticity_defect(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

/// 1/2 * sum |eig(a - b)| for Hermitian a, b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// kron(a, b) in the usual block layout.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column-stacking vectorization: vec(A X B) = kron(B^T, A) vec(X).
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim);

}  // namespace dicke::linalg
