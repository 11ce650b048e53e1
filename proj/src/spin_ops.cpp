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

#include "dicke/spin_ops.hpp"

#include <cmath>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

SpinQuantum::SpinQuantum(int two_j) : two_j_(two_j) {
  if (two_j < 0) {
    throw ValidationError("SpinQuantum: 2j must be non-negative, got " +
                          std::to_string(two_j));
  }
}

SpinQuantum SpinQuantum::from_j(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(j) || j < 0.0 || std::abs(twice - rounded) > 1e-9 ||
      rounded > 1e6) {
    throw ValidationError("SpinQuantum: j must be a non-negative half-integer, got " +
                          std::to_string(j));
  }
  return SpinQuantum(static_cast<int>(rounded));
}

double lowering_coefficient(SpinQuantum j, int column_index) {
  const double jj = j.j();
  const double m = j.m(column_index);
  return std::sqrt(jj * (jj + 1.0) - m * (m - 1.0));
}

Operator build_jminus(SpinQuantum j) {
  const int d = j.dim();
  linalg::ComplexMatrix m = linalg::ComplexMatrix::Zero(d, d);
  for (int c = 0; c + 1 < d; ++c) {
    m(c + 1, c) = lowering_coefficient(j, c);
  }
  return {j, std::move(m)};
}

Operator build_jplus(SpinQuantum j) {
  Operator minus = build_jminus(j);
  return {j, minus.matrix.adjoint()};
}

Operator build_jz(SpinQuantum j) {
  const int d = j.dim();
  linalg::ComplexMatrix m = linalg::ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = j.m(i);
  return {j, std::move(m)};
}

Operator build_identity(SpinQuantum j) {
  return {j, linalg::ComplexMatrix::Identity(j.dim(), j.dim())};
}

Operator operator*(const Operator& a, const Operator& b) {
  if (!(a.basis == b.basis)) {
    throw ValidationError("Operator product: basis mismatch");
  }
  return {a.basis, a.matrix * b.matrix};
}

}  // namespace dicke
