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

#include "dicke/linalg.hpp"

namespace dicke {

/// Spin quantum number j stored as the integer 2j (= number of ions N).
class SpinQuantum {
 public:
  explicit SpinQuantum(int two_j);

  /// Accepts any j with 2j a non-negative integer (0.5, 1, 1.5, ...).
  static SpinQuantum from_j(double j);

  int two_j() const noexcept { return two_j_; }
  int ion_count() const noexcept { return two_j_; }
  double j() const noexcept { return 0.5 * two_j_; }
  int dim() const noexcept { return two_j_ + 1; }

  /// Magnetic quantum number of basis row `index` (row 0 is m = +j).
  double m(int index) const noexcept { return j() - index; }

  friend bool operator==(SpinQuantum, SpinQuantum) = default;

 private:
  int two_j_;
};

/// Operator on the |j, m> basis, rows and columns ordered m = +j ... -j.
struct Operator {
  SpinQuantum basis;
  linalg::ComplexMatrix matrix;
};

Operator build_jminus(SpinQuantum j);
Operator build_jplus(SpinQuantum j);
Operator build_jz(SpinQuantum j);

/// Identity on the spin-j space.
Operator build_identity(SpinQuantum j);

/// Product a * b; both must share a basis.
Operator operator*(const Operator& a, const Operator& b);

/// sqrt(j(j+1) - m(m-1)): the <j, m-1| J_- |j, m> ladder coefficient.
double lowering_coefficient(SpinQuantum j, int column_index);

}  // namespace dicke
