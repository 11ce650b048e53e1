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

#include "dicke/analytic_ss.hpp"

#include <climits>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dicke/errors.hpp"

namespace dicke {

using linalg::Complex;
using linalg::ComplexMatrix;

DriveRatio::DriveRatio(double gamma) : gamma_(gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0) {
    std::ostringstream msg;
    msg << "DriveRatio: gamma must be finite and >= 0, got " << gamma;
    throw ValidationError(msg.str());
  }
}

double DriveRatio::abs_g() const noexcept { return 1.0 / gamma_; }

namespace {

// |value| = mantissa * 2^exponent with mantissa in [0.5, 1).
struct Scaled {
  double mantissa = 0.0;
  long exponent = LONG_MIN;
};

Scaled scaled_product(Scaled x, double factor) {
  int e = 0;
  const double m = std::frexp(x.mantissa * factor, &e);
  return {m, x.exponent + e};
}

// Lower-triangular M = sum_l (i gamma J-)^l, scaled by 2^-max_exponent so the
// largest entry lies in [0.5, 1). Entries far below the largest underflow to
// zero, which cannot affect rho at double precision.
struct ScaledSum {
  ComplexMatrix m;
  long exponent = 0;
};

ScaledSum ladder_sum(SpinQuantum j, double gamma) {
  const int d = j.dim();
  std::vector<std::vector<Scaled>> mags(d);
  long top = LONG_MIN;
  for (int c = 0; c < d; ++c) {
    Scaled run{0.5, 1};  // 1.0
    mags[c].resize(d);
    mags[c][c] = run;
    top = std::max(top, run.exponent);
    for (int r = c + 1; r < d; ++r) {
      run = scaled_product(run, lowering_coefficient(j, r - 1) * gamma);
      mags[c][r] = run;
      top = std::max(top, run.exponent);
    }
  }
  static constexpr Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = c; r < d; ++r) {
      const long shift = mags[c][r].exponent - top;
      if (shift < -1100) continue;
      const double mag = std::ldexp(mags[c][r].mantissa, static_cast<int>(shift));
      m(r, c) = mag * kPhase[(r - c) % 4];
    }
  }
  return {std::move(m), top};
}

void require_spin(SpinQuantum j, const char* op) {
  if (j.two_j() < 1) {
    throw ValidationError(std::string(op) + ": requires j >= 1/2");
  }
}

}  // namespace

DensityMatrix steady_state_analytic(SpinQuantum j, DriveRatio r) {
  require_spin(j, "steady_state_analytic");
  const int d = j.dim();
  if (r.gamma() == 0.0) return DensityMatrix::maximally_mixed(j);

  const ScaledSum sum = ladder_sum(j, r.gamma());
  ComplexMatrix rho = sum.m * sum.m.adjoint();
  const double trace = rho.trace().real();
  if (!(trace > 0.0) || !std::isfinite(trace)) {
    std::ostringstream msg;
    msg << "steady_state_analytic: numeric range exceeded for j = " << j.j()
        << ", gamma = " << r.gamma();
    throw RangeError(msg.str());
  }
  rho /= trace;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  for (int i = 0; i < d; ++i) rho(i, i) = rho(i, i).real();
  return DensityMatrix(j, std::move(rho));
}

NormalizationD normalization_D(SpinQuantum j, DriveRatio r) {
  require_spin(j, "normalization_D");
  if (r.gamma() == 0.0) {
    const double d = j.dim();
    return {std::log(d), d};
  }
  const ScaledSum sum = ladder_sum(j, r.gamma());
  const double s = sum.m.squaredNorm();
  const double log_value =
      std::log(s) + 2.0 * double(sum.exponent) * std::numbers::ln2;
  if (!std::isfinite(log_value)) {
    std::ostringstream msg;
    msg << "normalization_D: numeric range exceeded for j = " << j.j()
        << ", gamma = " << r.gamma();
    throw RangeError(msg.str());
  }
  const double value =
      sum.exponent > INT_MAX / 4 ? HUGE_VAL
                                 : std::ldexp(s, static_cast<int>(2 * sum.exponent));
  return {log_value, value};
}

DensityMatrix closed_form_j1(DriveRatio r) {
  const double g = r.gamma();
  const double g2 = g * g;
  const double s2 = std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  const double norm = 3.0 + 4.0 * g2 + 4.0 * g2 * g2;
  ComplexMatrix m(3, 3);
  m << 1.0, -i * s2 * g, -2.0 * g2,
       i * s2 * g, 1.0 + 2.0 * g2, -i * (s2 * g + 2.0 * s2 * g2 * g),
       -2.0 * g2, i * (s2 * g + 2.0 * s2 * g2 * g), 1.0 + 2.0 * g2 + 4.0 * g2 * g2;
  return DensityMatrix(SpinQuantum(2), m / norm);
}

}  // namespace dicke
