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

#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "dicke/analytic_ss.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/errors.hpp"
#include "test_util.hpp"

using namespace dicke;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

TEST_CASE("DriveRatio validation") {
  CHECK(DriveRatio(0.5).abs_g() == 2.0);
  CHECK(DriveRatio(0.0).gamma() == 0.0);
  CHECK_THROWS_AS(DriveRatio(-1.0), ValidationError);
  CHECK_THROWS_AS(DriveRatio(std::numeric_limits<double>::quiet_NaN()),
                  ValidationError);
  CHECK_THROWS_AS(DriveRatio(std::numeric_limits<double>::infinity()),
                  ValidationError);
}

TEST_CASE("j=1, gamma=1 reproduces the explicit matrix") {
  const DensityMatrix rho = steady_state_analytic(SpinQuantum(2), DriveRatio(1.0));
  CHECK(dicke::testing::max_abs_diff(rho.matrix(),
                                     dicke::testing::reference_j1_gamma1()) < 1e-12);
}

TEST_CASE("j=1 normalization closed form") {
  for (double g : {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double expected = 3.0 + 4.0 * g * g + 4.0 * g * g * g * g;
    const NormalizationD d = normalization_D(SpinQuantum(2), DriveRatio(g));
    CHECK(std::abs(d.value - expected) <= 1e-12 * expected);
    CHECK(std::abs(d.log_value - std::log(expected)) <= 1e-12);
  }
  CHECK(normalization_D(SpinQuantum(2), DriveRatio(1.0)).value == doctest::Approx(11.0));
}

TEST_CASE("normalization matches exact term-by-term summation") {
  CHECK(dicke::testing::normalization_by_summation(4, 0.5) == 22.0);
  CHECK(normalization_D(SpinQuantum(4), DriveRatio(0.5)).value ==
        doctest::Approx(22.0).epsilon(1e-13));
  for (int two_j : {1, 2, 3, 4, 5, 8, 12}) {
    for (double g : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const double oracle = dicke::testing::normalization_by_summation(two_j, g);
      const double value = normalization_D(SpinQuantum(two_j), DriveRatio(g)).value;
      CHECK(std::abs(value - oracle) <= 1e-12 * oracle);
    }
  }
}

TEST_CASE("normalization is monotone in gamma") {
  for (int two_j : {1, 2, 8, 32, 128}) {
    double previous = -std::numeric_limits<double>::infinity();
    for (double g = 0.0; g <= 20.0; g += 0.25) {
      const double log_d = normalization_D(SpinQuantum(two_j), DriveRatio(g)).log_value;
      CHECK(log_d > previous);
      previous = log_d;
    }
  }
}

TEST_CASE("normalization stays representable in log form at large j") {
  const NormalizationD d = normalization_D(SpinQuantum(128), DriveRatio(50.0));
  CHECK(std::isfinite(d.log_value));
  CHECK(d.log_value > 700.0);
  CHECK(std::isinf(d.value));
}

TEST_CASE("closed_form_j1 equals the general construction") {
  for (double g : {0.0, 0.01, 0.3, 1.0, 1.32, 4.0, 100.0}) {
    const DensityMatrix a = closed_form_j1(DriveRatio(g));
    const DensityMatrix b = steady_state_analytic(SpinQuantum(2), DriveRatio(g));
    CHECK(dicke::testing::max_abs_diff(a.matrix(), b.matrix()) < 1e-12);
  }
  const DensityMatrix mixed = closed_form_j1(DriveRatio(0.0));
  CHECK(dicke::testing::max_abs_diff(mixed.matrix(),
                                     ComplexMatrix::Identity(3, 3) / 3.0) < 1e-15);
}

TEST_CASE("pure-drive and pure-decay limits") {
  for (int two_j : {1, 2, 6, 20}) {
    const SpinQuantum j(two_j);
    const int d = j.dim();
    const DensityMatrix drive = steady_state_analytic(j, DriveRatio(0.0));
    CHECK(dicke::testing::max_abs_diff(drive.matrix(),
                                       ComplexMatrix::Identity(d, d) / double(d)) < 1e-15);
    const DensityMatrix near_drive = steady_state_analytic(j, DriveRatio(1e-9));
    CHECK(dicke::testing::max_abs_diff(near_drive.matrix(),
                                       ComplexMatrix::Identity(d, d) / double(d)) < 1e-6);
    const DensityMatrix decay = steady_state_analytic(j, DriveRatio(1e6));
    CHECK(trace_distance(decay, DensityMatrix::basis_projector(j, d - 1)) < 1e-5);
  }
}

TEST_CASE("analytic state is annihilated by the Liouvillian") {
  for (int two_j : {1, 2, 3, 8, 16, 32}) {
    for (double g : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const SpinQuantum j(two_j);
      const DensityMatrix rho = steady_state_analytic(j, DriveRatio(g));
      const ComplexMatrix l = build_liouvillian({j, 1.0, g, 0.0}).matrix;
      const ComplexVector r = l * linalg::vec(rho.matrix());
      CHECK(r.cwiseAbs().maxCoeff() < 1e-8);
      CHECK(linalg::hermiticity_defect(rho.matrix()) < 1e-12);
    }
  }
}

TEST_CASE("analytic and numeric steady states agree") {
  for (int two_j : {1, 2, 4, 8}) {
    for (double g : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const SpinQuantum j(two_j);
      const DensityMatrix a = steady_state_analytic(j, DriveRatio(g));
      const DensityMatrix n = steady_state_numeric({j, 1.0, g, 0.0});
      CHECK(trace_distance(a, n) < 1e-8);
    }
  }
}

TEST_CASE("large j stays finite and valid") {
  for (double g : {0.01, 0.1, 1.0, 10.0, 1000.0}) {
    const DensityMatrix rho = steady_state_analytic(SpinQuantum(128), DriveRatio(g));
    CHECK(linalg::all_finite(rho.matrix()));
    CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-12);
  }
}

TEST_CASE("requires at least one ion") {
  CHECK_THROWS_AS(steady_state_analytic(SpinQuantum(0), DriveRatio(1.0)),
                  ValidationError);
}
