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

#include "dicke/dicke.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "dicke/analytic_ss.hpp"
#include "dicke/dynamics.hpp"
#include "dicke/entanglement.hpp"
#include "dicke/errors.hpp"
#include "dicke/semiclassical.hpp"

struct dicke_context {
  dicke::NumericSettings settings;
};

struct dicke_state {
  dicke::DensityMatrix rho;
};

struct dicke_trajectory {
  std::vector<double> times;
  std::vector<dicke_state> states;
};

namespace {

thread_local std::string last_error;

const dicke::NumericSettings kDefaults{};

const dicke::NumericSettings& settings_of(const dicke_context* ctx) {
  return ctx ? ctx->settings : kDefaults;
}

dicke_status status_of(dicke::ErrorKind kind) {
  switch (kind) {
    case dicke::ErrorKind::Validation: return DICKE_ERR_VALIDATION;
    case dicke::ErrorKind::Singular: return DICKE_ERR_SINGULAR;
    case dicke::ErrorKind::Degenerate: return DICKE_ERR_DEGENERATE;
    case dicke::ErrorKind::NotPsd: return DICKE_ERR_NOT_PSD;
    case dicke::ErrorKind::Capacity: return DICKE_ERR_CAPACITY;
    case dicke::ErrorKind::Integration: return DICKE_ERR_INTEGRATION;
    case dicke::ErrorKind::Range: return DICKE_ERR_RANGE;
    case dicke::ErrorKind::NotFound: return DICKE_ERR_NOT_FOUND;
  }
  return DICKE_ERR_INTERNAL;
}

dicke_status fail(dicke_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
dicke_status guarded(F&& body) {
  try {
    body();
    return DICKE_OK;
  } catch (const dicke::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DICKE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DICKE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DICKE_ERR_INTERNAL, "unknown error");
  }
}

#define DICKE_REQUIRE(ptr)                                                  \
  do {                                                                      \
    if ((ptr) == nullptr)                                                   \
      return fail(DICKE_ERR_NULL_ARGUMENT, "null argument: " #ptr);         \
  } while (0)

dicke::ModelParams to_params(const dicke_params& p) {
  return {dicke::SpinQuantum(p.two_j), p.omega, p.gamma_a, p.nbar};
}

dicke::linalg::ComplexMatrix from_arrays(const double* re, const double* im,
                                         int dim) {
  dicke::linalg::ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = {re[r * dim + c], im ? im[r * dim + c] : 0.0};
  return m;
}

void to_arrays(const dicke::linalg::ComplexMatrix& m, double* re, double* im) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      re[r * cols + c] = m(r, c).real();
      if (im) im[r * cols + c] = m(r, c).imag();
    }
}

void fill_fixed_point(const dicke::semiclassical::FixedPointReport& in,
                      dicke_fixed_point* out) {
  out->sx = in.point.sx;
  out->sy = in.point.sy;
  out->sz = in.point.sz;
  for (int k = 0; k < 3; ++k) {
    out->eigenvalue_re[k] = in.jacobian_eigenvalues[k].real();
    out->eigenvalue_im[k] = in.jacobian_eigenvalues[k].imag();
  }
  out->leading_real = in.leading_real;
  out->stable = in.stable ? 1 : 0;
}

}  // namespace

extern "C" {

const char* dicke_version(void) { return "1.0.0"; }

const char* dicke_status_string(dicke_status status) {
  switch (status) {
    case DICKE_OK: return "ok";
    case DICKE_ERR_NULL_ARGUMENT: return "null argument";
    case DICKE_ERR_VALIDATION: return "validation error";
    case DICKE_ERR_SINGULAR: return "singular matrix";
    case DICKE_ERR_DEGENERATE: return "degenerate kernel";
    case DICKE_ERR_NOT_PSD: return "matrix not positive semidefinite";
    case DICKE_ERR_CAPACITY: return "capacity exceeded";
    case DICKE_ERR_INTEGRATION: return "integration failure";
    case DICKE_ERR_RANGE: return "numeric range exceeded";
    case DICKE_ERR_NOT_FOUND: return "not found";
    case DICKE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* dicke_last_error(void) { return last_error.c_str(); }

dicke_status dicke_context_create(dicke_context** out) {
  DICKE_REQUIRE(out);
  return guarded([&] { *out = new dicke_context{}; });
}

void dicke_context_destroy(dicke_context* ctx) { delete ctx; }

dicke_status dicke_context_set_integrator_tolerance(dicke_context* ctx,
                                                    double tol) {
  DICKE_REQUIRE(ctx);
  if (!std::isfinite(tol) || !(tol > 0.0)) {
    return fail(DICKE_ERR_VALIDATION, "integrator tolerance must be finite and > 0");
  }
  ctx->settings.integrator_tol = tol;
  return DICKE_OK;
}

dicke_status dicke_context_get_integrator_tolerance(const dicke_context* ctx,
                                                    double* tol) {
  DICKE_REQUIRE(tol);
  *tol = settings_of(ctx).integrator_tol;
  return DICKE_OK;
}

dicke_status dicke_state_create_basis(int two_j, int index, dicke_state** out) {
  DICKE_REQUIRE(out);
  return guarded([&] {
    *out = new dicke_state{
        dicke::DensityMatrix::basis_projector(dicke::SpinQuantum(two_j), index)};
  });
}

dicke_status dicke_state_create(int two_j, const double* re, const double* im,
                                dicke_state** out) {
  DICKE_REQUIRE(re);
  DICKE_REQUIRE(im);
  DICKE_REQUIRE(out);
  return guarded([&] {
    const dicke::SpinQuantum j(two_j);
    *out = new dicke_state{dicke::DensityMatrix(j, from_arrays(re, im, j.dim()))};
  });
}

dicke_status dicke_state_clone(const dicke_state* state, dicke_state** out) {
  DICKE_REQUIRE(state);
  DICKE_REQUIRE(out);
  return guarded([&] { *out = new dicke_state{state->rho}; });
}

void dicke_state_destroy(dicke_state* state) { delete state; }

int dicke_state_two_j(const dicke_state* state) {
  return state ? state->rho.basis().two_j() : -1;
}

int dicke_state_dim(const dicke_state* state) {
  return state ? state->rho.dim() : 0;
}

dicke_status dicke_state_entries(const dicke_state* state, double* re,
                                 double* im, size_t capacity) {
  DICKE_REQUIRE(state);
  DICKE_REQUIRE(re);
  DICKE_REQUIRE(im);
  const auto n = static_cast<size_t>(state->rho.dim()) * state->rho.dim();
  if (capacity < n) {
    return fail(DICKE_ERR_CAPACITY, "output arrays shorter than dim*dim (" +
                                        std::to_string(n) + ")");
  }
  to_arrays(state->rho.matrix(), re, im);
  return DICKE_OK;
}

dicke_status dicke_state_expectation(const dicke_state* state,
                                     dicke_observable obs, double* re,
                                     double* im) {
  DICKE_REQUIRE(state);
  DICKE_REQUIRE(re);
  DICKE_REQUIRE(im);
  return guarded([&] {
    const dicke::SpinQuantum j = state->rho.basis();
    dicke::Operator op = dicke::build_jz(j);
    switch (obs) {
      case DICKE_OBS_JZ: break;
      case DICKE_OBS_JPLUS: op = dicke::build_jplus(j); break;
      case DICKE_OBS_JMINUS: op = dicke::build_jminus(j); break;
      case DICKE_OBS_JPLUS_JMINUS:
        op = dicke::build_jplus(j) * dicke::build_jminus(j);
        break;
      default: throw dicke::ValidationError("unknown observable");
    }
    const auto value = dicke::expectation(state->rho, op);
    *re = value.real();
    *im = value.imag();
  });
}

dicke_status dicke_state_trace_distance(const dicke_state* a,
                                        const dicke_state* b, double* out) {
  DICKE_REQUIRE(a);
  DICKE_REQUIRE(b);
  DICKE_REQUIRE(out);
  return guarded([&] { *out = dicke::trace_distance(a->rho, b->rho); });
}

dicke_status dicke_steady_state_numeric(const dicke_context* ctx,
                                        const dicke_params* params,
                                        dicke_state** out) {
  DICKE_REQUIRE(params);
  DICKE_REQUIRE(out);
  return guarded([&] {
    *out = new dicke_state{
        dicke::steady_state_numeric(to_params(*params), settings_of(ctx))};
  });
}

dicke_status dicke_steady_state_analytic(int two_j, double gamma,
                                         dicke_state** out) {
  DICKE_REQUIRE(out);
  return guarded([&] {
    *out = new dicke_state{dicke::steady_state_analytic(
        dicke::SpinQuantum(two_j), dicke::DriveRatio(gamma))};
  });
}

dicke_status dicke_closed_form_j1(double gamma, dicke_state** out) {
  DICKE_REQUIRE(out);
  return guarded([&] {
    *out = new dicke_state{dicke::closed_form_j1(dicke::DriveRatio(gamma))};
  });
}

dicke_status dicke_normalization(int two_j, double gamma, double* log_value,
                                 double* value) {
  DICKE_REQUIRE(log_value);
  DICKE_REQUIRE(value);
  return guarded([&] {
    const auto d = dicke::normalization_D(dicke::SpinQuantum(two_j),
                                          dicke::DriveRatio(gamma));
    *log_value = d.log_value;
    *value = d.value;
  });
}

dicke_status dicke_pair_concurrence(const dicke_context* ctx,
                                    const dicke_state* state, double* out) {
  DICKE_REQUIRE(state);
  DICKE_REQUIRE(out);
  return guarded([&] {
    *out = dicke::pair_concurrence(state->rho, settings_of(ctx)).value;
  });
}

dicke_status dicke_two_qubit_concurrence(const dicke_context* ctx,
                                         const double* re, const double* im,
                                         double* out) {
  DICKE_REQUIRE(re);
  DICKE_REQUIRE(im);
  DICKE_REQUIRE(out);
  return guarded([&] {
    const dicke::TwoQubitState state(from_arrays(re, im, 4), settings_of(ctx));
    *out = dicke::concurrence(state, settings_of(ctx)).value;
  });
}

dicke_status dicke_pair_reduced_state(const dicke_state* state, double* re,
                                      double* im) {
  DICKE_REQUIRE(state);
  DICKE_REQUIRE(re);
  DICKE_REQUIRE(im);
  return guarded([&] {
    to_arrays(dicke::pair_reduced_state(state->rho).matrix(), re, im);
  });
}

dicke_status dicke_evolve(const dicke_context* ctx, const dicke_state* initial,
                          const dicke_params* params, const double* times,
                          size_t count, dicke_trajectory** out) {
  DICKE_REQUIRE(initial);
  DICKE_REQUIRE(params);
  DICKE_REQUIRE(times);
  DICKE_REQUIRE(out);
  return guarded([&] {
    dicke::Trajectory traj =
        dicke::evolve(initial->rho, to_params(*params),
                      std::span<const double>(times, count), settings_of(ctx));
    auto result = std::make_unique<dicke_trajectory>();
    result->times = std::move(traj.times);
    result->states.reserve(traj.states.size());
    for (auto& s : traj.states) result->states.push_back(dicke_state{std::move(s)});
    *out = result.release();
  });
}

void dicke_trajectory_destroy(dicke_trajectory* trajectory) { delete trajectory; }

size_t dicke_trajectory_size(const dicke_trajectory* trajectory) {
  return trajectory ? trajectory->times.size() : 0;
}

dicke_status dicke_trajectory_time(const dicke_trajectory* trajectory,
                                   size_t index, double* out) {
  DICKE_REQUIRE(trajectory);
  DICKE_REQUIRE(out);
  if (index >= trajectory->times.size()) {
    return fail(DICKE_ERR_VALIDATION, "trajectory index out of range");
  }
  *out = trajectory->times[index];
  return DICKE_OK;
}

dicke_status dicke_trajectory_state(const dicke_trajectory* trajectory,
                                    size_t index, const dicke_state** out) {
  DICKE_REQUIRE(trajectory);
  DICKE_REQUIRE(out);
  if (index >= trajectory->states.size()) {
    return fail(DICKE_ERR_VALIDATION, "trajectory index out of range");
  }
  *out = &trajectory->states[index];
  return DICKE_OK;
}

dicke_status dicke_fixed_points(const dicke_context* ctx, double omega_r,
                                dicke_fixed_point* out, size_t capacity,
                                size_t* count) {
  DICKE_REQUIRE(count);
  if (capacity > 0) DICKE_REQUIRE(out);
  return guarded([&] {
    const auto points =
        dicke::semiclassical::find_fixed_points(omega_r, settings_of(ctx));
    *count = points.size();
    for (size_t k = 0; k < points.size() && k < capacity; ++k) {
      fill_fixed_point(points[k], &out[k]);
    }
  });
}

dicke_status dicke_tracked_fixed_point(const dicke_context* ctx, double omega_r,
                                       dicke_fixed_point* out) {
  DICKE_REQUIRE(out);
  return guarded([&] {
    fill_fixed_point(
        dicke::semiclassical::tracked_branch(omega_r, settings_of(ctx)), out);
  });
}

dicke_status dicke_bifurcation_scan(const dicke_context* ctx,
                                    const double* omega_r_grid, size_t count,
                                    double* critical) {
  DICKE_REQUIRE(omega_r_grid);
  DICKE_REQUIRE(critical);
  return guarded([&] {
    *critical = dicke::semiclassical::bifurcation_scan(
        std::span<const double>(omega_r_grid, count), settings_of(ctx));
  });
}

}  // extern "C"
