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

#include "dicke/density_matrix.hpp"
#include "dicke/settings.hpp"

namespace dicke {

/// Two-qubit state in the basis (|ee>, |eg>, |ge>, |gg>).
class TwoQubitState {
 public:
  explicit TwoQubitState(linalg::ComplexMatrix matrix,
                         const NumericSettings& settings = {});
  const linalg::ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  linalg::ComplexMatrix matrix_;
};

struct Concurrence {
  double value = 0.0;
};

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), l_i the descending square
/// roots of the eigenvalues of rho * (sy x sy) rho^* (sy x sy).
Concurrence concurrence(const TwoQubitState& rho,
                        const NumericSettings& settings = {});

/// (sy x sy) rho^* (sy x sy).
linalg::ComplexMatrix spin_flip(const linalg::ComplexMatrix& rho);

/// Embeds a j = 1 state via |1,1> -> |ee>, |1,0> -> (|eg> + |ge>)/sqrt2,
/// |1,-1> -> |gg>.
TwoQubitState triplet_to_two_qubit(const DensityMatrix& rho3);

/// Reduced state of any two ions of the permutation-symmetric N = 2j ion
/// state, built from collective moments in O(d^3).
TwoQubitState pair_reduced_state(const DensityMatrix& rho);

/// Same reduction by explicit embedding into the 2^N-dimensional space and
/// partial trace over ions 3..N. Limited to N <= 8.
TwoQubitState pair_reduced_brute_force(const DensityMatrix& rho);

inline constexpr int kMaxBruteForceIons = 8;

/// concurrence(pair_reduced_state(rho)), with the j = 1 embedding as the
/// N = 2 special case.
Concurrence pair_concurrence(const DensityMatrix& rho,
                             const NumericSettings& settings = {});

}  // namespace dicke
