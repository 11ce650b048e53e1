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

// Exact zero-temperature steady state of the driven Dicke model:
//
//   rho_S = (1/D) sum_{l,l'=0}^{2j} (J-/g*)^l (J+/g)^l' ,   g = i/gamma
//
// The double sum factorizes as M M^dagger with M = sum_l (J-/g*)^l, a lower
// triangular matrix whose entries are products of ladder coefficients times
// (i gamma)^(r-c). D is the trace of M M^dagger.

#pragma once

#include "dicke/density_matrix.hpp"
#include "dicke/spin_ops.hpp"

namespace dicke {

/// gamma = gamma_a / omega. gamma = 0 selects the pure-drive limit.
class DriveRatio {
 public:
  explicit DriveRatio(double gamma);
  double gamma() const noexcept { return gamma_; }
  /// |g| = 1 / gamma.
  double abs_g() const noexcept;

 private:
  double gamma_;
};

struct NormalizationD {
  /// ln D; always finite.
  double log_value = 0.0;
  /// D itself; +inf when D exceeds the double range (large j and gamma).
  double value = 1.0;
};

DensityMatrix steady_state_analytic(SpinQuantum j, DriveRatio r);

NormalizationD normalization_D(SpinQuantum j, DriveRatio r);

/// The explicit j = 1 matrix, normalized by D = 3 + 4 gamma^2 + 4 gamma^4.
DensityMatrix closed_form_j1(DriveRatio r);

}  // namespace dicke
