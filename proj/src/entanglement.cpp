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

#include "dicke/entanglement.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

using linalg::Complex;
using linalg::ComplexMatrix;

TwoQubitState::TwoQubitState(ComplexMatrix matrix,
                             const NumericSettings& settings)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 4 || matrix_.cols() != 4) {
    throw ValidationError("TwoQubitState: expected a 4x4 matrix");
  }
  validate_density(matrix_, settings);
}

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  // sy x sy is real: antidiagonal (-1, 1, 1, -1).
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy * rho.conjugate() * yy;
}

Concurrence concurrence(const TwoQubitState& state,
                        const NumericSettings& settings) {
  const ComplexMatrix& rho = state.matrix();
  const linalg::ComplexVector mu =
      linalg::general_eigenvalues(rho * spin_flip(rho));
  std::array<double, 4> roots{};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(mu(k).imag()) > settings.concurrence_imag_tol) {
      std::ostringstream msg;
      msg << "concurrence: eigenvalue " << mu(k).real() << "+" << mu(k).imag()
          << "i of rho*rho_tilde has a non-negligible imaginary part";
      throw ValidationError(msg.str());
    }
    const double re = mu(k).real();
    roots[k] = re <= settings.concurrence_clamp ? 0.0 : std::sqrt(re);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return {std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3])};
}

TwoQubitState triplet_to_two_qubit(const DensityMatrix& rho3) {
  if (rho3.basis().two_j() != 2) {
    throw ValidationError("triplet_to_two_qubit: requires j = 1");
  }
  const double h = std::numbers::sqrt2 / 2.0;
  ComplexMatrix v = ComplexMatrix::Zero(4, 3);
  v(0, 0) = 1.0;
  v(1, 1) = h;
  v(2, 1) = h;
  v(3, 2) = 1.0;
  return TwoQubitState(v * rho3.matrix() * v.adjoint());
}

TwoQubitState pair_reduced_state(const DensityMatrix& rho) {
  const SpinQuantum j = rho.basis();
  if (j.two_j() < 2) {
    throw ValidationError("pair_reduced_state: requires j >= 1 (two or more ions)");
  }
  const int d = j.dim();
  const double n = j.ion_count();
  const ComplexMatrix jz = build_jz(j).matrix;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);

  // Collective sum over ions of the single-ion unit |x><y| (0 = e, 1 = g).
  std::array<std::array<ComplexMatrix, 2>, 2> unit;
  unit[0][0] = 0.5 * n * id + jz;
  unit[1][1] = 0.5 * n * id - jz;
  unit[0][1] = build_jplus(j).matrix;
  unit[1][0] = build_jminus(j).matrix;

  std::array<std::array<ComplexMatrix, 2>, 2> rho_unit;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) rho_unit[x][y] = rho.matrix() * unit[x][y];

  // sum_{i != k} <X_i Y_k> = Tr(rho X Y) - sum_i <(XY)_i>, with
  // |x><y| |z><w| = delta_yz |x><w| on the same ion.
  auto two_site = [&](int x, int y, int z, int w) {
    Complex value = rho_unit[x][y].cwiseProduct(unit[z][w].transpose()).sum();
    if (y == z) value -= rho_unit[x][w].trace();
    return value;
  };

  const double pairs = n * (n - 1.0);
  ComplexMatrix out(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      for (int b = 0; b < 2; ++b)
        for (int dd = 0; dd < 2; ++dd) {
          // <ac| rho2 |b dd> = < |b><a|_1 (x) |dd><c|_2 >, averaged over
          // both operator orderings so the result is exactly swap-symmetric.
          const Complex v = 0.5 * (two_site(b, a, dd, c) + two_site(dd, c, b, a));
          out(2 * a + c, 2 * b + dd) = v / pairs;
        }
  out = 0.5 * (out + out.adjoint()).eval();
  return TwoQubitState(std::move(out));
}

TwoQubitState pair_reduced_brute_force(const DensityMatrix& rho) {
  const SpinQuantum j = rho.basis();
  const int n = j.ion_count();
  if (n < 2) {
    throw ValidationError("pair_reduced_brute_force: requires j >= 1 (two or more ions)");
  }
  if (n > kMaxBruteForceIons) {
    std::ostringstream msg;
    msg << "pair_reduced_brute_force: " << n << " ions exceeds the limit of "
        << kMaxBruteForceIons;
    throw CapacityError(msg.str());
  }
  const int full = 1 << n;
  const int d = j.dim();
  // Basis row i (m = j - i) has N - i excitations; bit value 0 is |e>, so
  // its Dicke state is the uniform superposition of strings with i set bits.
  ComplexMatrix embed = ComplexMatrix::Zero(full, d);
  std::vector<int> count(d, 0);
  for (int s = 0; s < full; ++s) ++count[std::popcount(static_cast<unsigned>(s))];
  for (int s = 0; s < full; ++s) {
    const int i = std::popcount(static_cast<unsigned>(s));
    embed(s, i) = 1.0 / std::sqrt(double(count[i]));
  }
  const ComplexMatrix big = embed * rho.matrix() * embed.adjoint();

  // Ion 1 is the most significant bit; trace out the low n - 2 bits.
  const int rest = 1 << (n - 2);
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int r = 0; r < rest; ++r) out(a, b) += big(a * rest + r, b * rest + r);
  return TwoQubitState(std::move(out));
}

Concurrence pair_concurrence(const DensityMatrix& rho,
                             const NumericSettings& settings) {
  if (rho.basis().two_j() == 2) {
    return concurrence(triplet_to_two_qubit(rho), settings);
  }
  return concurrence(pair_reduced_state(rho), settings);
}

}  // namespace dicke
