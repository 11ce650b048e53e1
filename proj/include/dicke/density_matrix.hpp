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

#include "dicke/settings.hpp"
#include "dicke/spin_ops.hpp"

namespace dicke {

/// Hermitian, unit-trace, positive semidefinite state on the spin-j space.
/// Construction validates; a DensityMatrix that exists satisfies all three.
class DensityMatrix {
 public:
  DensityMatrix(SpinQuantum basis, linalg::ComplexMatrix matrix,
                const NumericSettings& settings = {});

  /// |j, m><j, m| for basis row `index` (0 is m = +j).
  static DensityMatrix basis_projector(SpinQuantum basis, int index);
  /// I / (2j + 1).
  static DensityMatrix maximally_mixed(SpinQuantum basis);

  SpinQuantum basis() const noexcept { return basis_; }
  int dim() const noexcept { return basis_.dim(); }
  const linalg::ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, SpinQuantum basis, linalg::ComplexMatrix matrix)
      : basis_(basis), matrix_(std::move(matrix)) {}

  SpinQuantum basis_;
  linalg::ComplexMatrix matrix_;
};

/// Checks the density-matrix invariants without constructing one. Throws
/// ValidationError naming the first violated check.
void validate_density(const linalg::ComplexMatrix& m,
                      const NumericSettings& settings = {});

/// Tr(rho A).
linalg::Complex expectation(const DensityMatrix& rho, const Operator& a);

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace dicke
