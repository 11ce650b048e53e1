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

#include "dicke/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke::linalg {

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    std::ostringstream msg;
    msg << op << ": matrix must be square and non-empty (got " << a.rows()
        << "x" << a.cols() << ")";
    throw ValidationError(msg.str());
  }
  if (!all_finite(a)) {
    throw ValidationError(std::string(op) + ": matrix has non-finite entries");
  }
}

void require_hermitian(const ComplexMatrix& a, const char* op,
                       double tol) {
  const double defect = hermiticity_defect(a);
  if (defect > tol) {
    std::ostringstream msg;
    msg << op << ": matrix is not Hermitian (max |A - A^dagger| = " << defect
        << " > " << tol << ")";
    throw ValidationError(msg.str());
  }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (!std::isfinite(a(r, c).real()) || !std::isfinite(a(r, c).imag())) {
        return false;
      }
    }
  }
  return true;
}

HermitianEigen hermitian_eig(const ComplexMatrix& a,
                             const NumericSettings& settings) {
  require_square(a, "hermitian_eig");
  require_hermitian(a, "hermitian_eig", settings.hermitian_tol);
  // Only the lower triangle is read; symmetrize so tiny defects average out.
  const ComplexMatrix h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("hermitian_eig: eigen-solver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexVector general_eigenvalues(const ComplexMatrix& a) {
  require_square(a, "general_eigenvalues");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("general_eigenvalues: eigen-solver did not converge");
  }
  return solver.eigenvalues();
}

ComplexVector solve_linear(const ComplexMatrix& a, const ComplexVector& b,
                           const NumericSettings& settings) {
  require_square(a, "solve_linear");
  if (b.size() != a.rows()) {
    throw ValidationError("solve_linear: right-hand side length mismatch");
  }
  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  // Eigen's estimate misses exactly zero pivots, so check U's diagonal too.
  const RealVector pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pivot_ratio = pivots.minCoeff() / pivots.maxCoeff();
  const double rcond = std::min(lu.rcond(), pivot_ratio);
  if (!(rcond >= settings.singular_rcond)) {
    std::ostringstream msg;
    msg << "solve_linear: matrix is singular to working precision (rcond = "
        << rcond << ")";
    throw SingularError(msg.str(), rcond);
  }
  return lu.solve(b);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& a,
                              const NumericSettings& settings) {
  const HermitianEigen eig = hermitian_eig(a, settings);
  const double lowest = eig.values(0);
  if (lowest < -settings.psd_clamp) {
    std::ostringstream msg;
    msg << "matrix_sqrt_psd: matrix is not PSD (eigenvalue " << lowest << ")";
    throw NotPsdError(msg.str(), lowest);
  }
  // Eigenvalues at the rounding floor are zero; their square roots would
  // otherwise inject O(sqrt(eps)) noise.
  const double floor = double(a.rows()) * std::numeric_limits<double>::epsilon() *
                       eig.values.cwiseAbs().maxCoeff();
  const RealVector roots =
      eig.values.unaryExpr([floor](double v) { return v <= floor ? 0.0 : std::sqrt(v); });
  ComplexMatrix r = eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (r + r.adjoint());
}

ComplexVector null_vector(const ComplexMatrix& a,
                          const NumericSettings& settings) {
  require_square(a, "null_vector");
  const double scale = a.norm();
  const Eigen::Index n = a.rows();
  if (scale == 0.0) {
    if (n == 1) return ComplexVector::Ones(1);
    throw DegeneracyError("null_vector: zero matrix has nullity > 1", 0.0, 0.0);
  }
  Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();  // descending
  const double smallest = sv(n - 1);
  const double second = n > 1 ? sv(n - 2) : std::numeric_limits<double>::infinity();
  if (smallest > settings.null_tol * scale || second < settings.null_gap * scale) {
    std::ostringstream msg;
    msg << "null_vector: numerical nullity is not 1 (smallest singular values "
        << smallest << ", " << second << "; ||A||_F = " << scale << ")";
    throw DegeneracyError(msg.str(), smallest, second);
  }
  ComplexVector x = svd.matrixV().col(n - 1);
  Eigen::Index pivot = 0;
  x.cwiseAbs().maxCoeff(&pivot);
  x *= std::conj(x(pivot)) / std::abs(x(pivot));
  x(pivot) = Complex(x(pivot).real(), 0.0);
  return x / x.norm();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("trace_distance: dimension mismatch");
  }
  const ComplexMatrix diff = a - b;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      0.5 * (diff + diff.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) {
    throw ValidationError("unvec: vector length is not dim^2");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

}  // namespace dicke::linalg
