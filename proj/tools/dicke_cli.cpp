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

// dicke-cli: parameter scans and figure data for the driven Dicke model.
// Links only the C API.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "dicke/dicke.h"

namespace {

using dicke_cli::Cell;
using dicke_cli::Format;
using dicke_cli::RunError;
using dicke_cli::Table;
using dicke_cli::UsageError;

struct StateDeleter {
  void operator()(dicke_state* s) const { dicke_state_destroy(s); }
};
struct TrajectoryDeleter {
  void operator()(dicke_trajectory* t) const { dicke_trajectory_destroy(t); }
};
struct ContextDeleter {
  void operator()(dicke_context* c) const { dicke_context_destroy(c); }
};
using StatePtr = std::unique_ptr<dicke_state, StateDeleter>;
using TrajectoryPtr = std::unique_ptr<dicke_trajectory, TrajectoryDeleter>;
using ContextPtr = std::unique_ptr<dicke_context, ContextDeleter>;

void check(dicke_status status, const std::string& what) {
  if (status == DICKE_OK) return;
  throw RunError(what + ": " + dicke_status_string(status) + ": " +
                 dicke_last_error());
}

struct Globals {
  std::string output;
  std::string format = "csv";
  unsigned jobs = 0;
  std::optional<double> tolerance;
  bool gnuplot = false;

  Format fmt() const { return format == "json" ? Format::Json : Format::Csv; }
};

struct Plot {
  std::string x, y, group;
  bool log_x = false;
};

ContextPtr make_context(const Globals& g) {
  dicke_context* raw = nullptr;
  check(dicke_context_create(&raw), "context");
  ContextPtr ctx(raw);
  if (g.tolerance) {
    check(dicke_context_set_integrator_tolerance(ctx.get(), *g.tolerance),
          "tolerance");
  }
  return ctx;
}

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text << std::flush;
    if (!std::cout) throw RunError("failed writing to standard output");
    return;
  }
  std::ofstream file(g.output, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) throw RunError("cannot write " + g.output);
}

void emit_gnuplot(const Globals& g, const Table& table, const Plot& plot) {
  if (!g.gnuplot) return;
  const std::filesystem::path csv(g.output);
  std::filesystem::path script = csv;
  script.replace_extension(".gp");
  std::ofstream file(script, std::ios::binary | std::ios::trunc);
  file << dicke_cli::gnuplot_script(csv.filename().string(), table, plot.x,
                                    plot.y, plot.group, plot.log_x);
  file.close();
  if (!file) throw RunError("cannot write " + script.string());
}

void emit_table(const Globals& g, const Table& table, const Plot& plot) {
  std::ostringstream text;
  dicke_cli::write_table(text, table, g.fmt());
  emit(g, text.str());
  emit_gnuplot(g, table, plot);
}

std::vector<double> grid_option(const std::string& spec, const char* name,
                                double min, bool strict) {
  std::vector<double> values;
  try {
    values = dicke_cli::parse_grid(spec);
  } catch (const UsageError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
  for (double v : values) {
    if (strict ? !(v > min) : !(v >= min)) {
      throw UsageError(std::string("--") + name + ": values must be " +
                       (strict ? "> " : ">= ") + dicke_cli::format_number(min) +
                       ", got " + dicke_cli::format_number(v));
    }
  }
  return values;
}

double pair_concurrence(const dicke_context* ctx, const dicke_state* s) {
  double c = 0.0;
  check(dicke_pair_concurrence(ctx, s, &c), "concurrence");
  return c;
}

// ---- steady ---------------------------------------------------------------

struct SteadyArgs {
  std::string j;
  std::optional<double> gamma;
  double omega = 1.0;
  double gamma_a = 1.0;
  double nbar = 0.0;
  std::string method = "numeric";
};

void run_steady(const Globals& g, const SteadyArgs& a) {
  if (g.gnuplot) throw UsageError("--gnuplot is not available for steady");
  const int two_j = dicke_cli::parse_two_j(a.j);
  if (two_j < 1) throw UsageError("--j must be at least 1/2");
  const double omega = a.gamma ? 1.0 : a.omega;
  const double gamma_a = a.gamma ? *a.gamma : a.gamma_a;
  const ContextPtr ctx = make_context(g);

  dicke_state* raw = nullptr;
  if (a.method == "analytic") {
    if (a.nbar > 0.0) {
      throw UsageError("--method analytic covers nbar = 0 only; use --method numeric");
    }
    if (!(omega > 0.0)) throw UsageError("--method analytic needs omega > 0");
    check(dicke_steady_state_analytic(two_j, gamma_a / omega, &raw),
          "analytic steady state");
  } else {
    const dicke_params p{two_j, omega, gamma_a, a.nbar};
    check(dicke_steady_state_numeric(ctx.get(), &p, &raw), "numeric steady state");
  }
  const StatePtr state(raw);

  const int d = dicke_state_dim(state.get());
  std::vector<double> re(std::size_t(d) * d), im(std::size_t(d) * d);
  check(dicke_state_entries(state.get(), re.data(), im.data(), re.size()),
        "entries");
  Table matrix{{"row", "col", "re", "im"}, {}};
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      matrix.rows.push_back({double(r), double(c), re[r * d + c], im[r * d + c]});

  std::vector<std::pair<std::string, Table>> sections{{"matrix", matrix}};
  if (two_j >= 2) {
    const std::string name = two_j == 2 ? "concurrence" : "pair_concurrence";
    sections.push_back(
        {"entanglement", Table{{name}, {{pair_concurrence(ctx.get(), state.get())}}}});
  }
  std::ostringstream text;
  dicke_cli::write_sections(text, sections, g.fmt());
  emit(g, text.str());
}

// ---- figure scans -----------------------------------------------------------

struct Fig1Args {
  std::string gamma = "log:0.001:1000:61";
  std::string nbar = "0:0.1:11";
};

void run_fig1(const Globals& g, const Fig1Args& a) {
  const auto gammas = grid_option(a.gamma, "gamma", 0.0, true);
  const auto nbars = grid_option(a.nbar, "nbar", 0.0, false);
  const ContextPtr ctx = make_context(g);
  Table t{{"gamma", "nbar", "concurrence"},
          std::vector<std::vector<Cell>>(gammas.size() * nbars.size())};
  dicke_cli::parallel_for(t.rows.size(), g.jobs, [&](std::size_t i) {
    const double nbar = nbars[i / gammas.size()];
    const double gamma = gammas[i % gammas.size()];
    const dicke_params p{2, 1.0, gamma, nbar};
    dicke_state* raw = nullptr;
    check(dicke_steady_state_numeric(ctx.get(), &p, &raw),
          "steady state at gamma=" + dicke_cli::format_number(gamma) +
              ", nbar=" + dicke_cli::format_number(nbar));
    const StatePtr s(raw);
    t.rows[i] = {gamma, nbar, pair_concurrence(ctx.get(), s.get())};
  });
  emit_table(g, t, {"gamma", "concurrence", "nbar", true});
}

struct Fig2Args {
  std::string gamma = "log:0.001:1000:121";
};

void run_fig2(const Globals& g, const Fig2Args& a) {
  const auto gammas = grid_option(a.gamma, "gamma", 0.0, true);
  const ContextPtr ctx = make_context(g);
  Table t{{"gamma", "abs_g", "concurrence"},
          std::vector<std::vector<Cell>>(gammas.size())};
  dicke_cli::parallel_for(t.rows.size(), g.jobs, [&](std::size_t i) {
    const double gamma = gammas[i];
    dicke_state* raw = nullptr;
    check(dicke_closed_form_j1(gamma, &raw),
          "closed form at gamma=" + dicke_cli::format_number(gamma));
    const StatePtr s(raw);
    t.rows[i] = {gamma, 1.0 / gamma, pair_concurrence(ctx.get(), s.get())};
  });
  emit_table(g, t, {"gamma", "concurrence", "", true});
}

struct Fig3Args {
  std::vector<std::string> j{"1", "4", "16", "64"};
  std::string omega_r = "0.05:3:60";
};

void run_fig3(const Globals& g, const Fig3Args& a) {
  std::vector<int> two_js;
  for (const auto& text : a.j) {
    const int two_j = dicke_cli::parse_two_j(text);
    if (two_j < 2) throw UsageError("--j values must be at least 1 (two ions)");
    two_js.push_back(two_j);
  }
  const auto omegas = grid_option(a.omega_r, "omega-r", 0.0, true);
  const ContextPtr ctx = make_context(g);
  Table t{{"j", "omega_r", "pair_concurrence"},
          std::vector<std::vector<Cell>>(two_js.size() * omegas.size())};
  dicke_cli::parallel_for(t.rows.size(), g.jobs, [&](std::size_t i) {
    const int two_j = two_js[i / omegas.size()];
    const double omega_r = omegas[i % omegas.size()];
    const double j = 0.5 * two_j;
    // omega_r = omega / (j gamma_a) and gamma = gamma_a / omega.
    const double gamma = 1.0 / (j * omega_r);
    dicke_state* raw = nullptr;
    check(dicke_steady_state_analytic(two_j, gamma, &raw),
          "analytic steady state at j=" + dicke_cli::format_number(j) +
              ", omega_r=" + dicke_cli::format_number(omega_r));
    const StatePtr s(raw);
    t.rows[i] = {j, omega_r, pair_concurrence(ctx.get(), s.get())};
  });
  emit_table(g, t, {"omega_r", "pair_concurrence", "j", false});
}

// ---- semiclassical --------------------------------------------------------

struct SemiclassicalArgs {
  std::string omega_r = "0:3:301";
};

// Returns false when no bifurcation lies on the grid.
bool run_semiclassical(const Globals& g, const SemiclassicalArgs& a) {
  const auto omegas = grid_option(a.omega_r, "omega-r", 0.0, false);
  if (omegas.size() < 2) throw UsageError("--omega-r needs at least two points");
  for (std::size_t k = 1; k < omegas.size(); ++k) {
    if (!(omegas[k] > omegas[k - 1])) {
      throw UsageError("--omega-r must be strictly ascending");
    }
  }
  const ContextPtr ctx = make_context(g);
  Table t{{"omega_r", "sz_stable", "leading_eigenvalue_real"},
          std::vector<std::vector<Cell>>(omegas.size())};
  dicke_cli::parallel_for(t.rows.size(), g.jobs, [&](std::size_t i) {
    dicke_fixed_point fp{};
    check(dicke_tracked_fixed_point(ctx.get(), omegas[i], &fp), "fixed point");
    t.rows[i] = {omegas[i], fp.sz, fp.leading_real};
  });
  emit_table(g, t, {"omega_r", "leading_eigenvalue_real", "", false});

  double critical = 0.0;
  const dicke_status st =
      dicke_bifurcation_scan(ctx.get(), omegas.data(), omegas.size(), &critical);
  if (st == DICKE_ERR_NOT_FOUND) {
    std::cerr << "dicke-cli: " << dicke_last_error() << '\n';
    return false;
  }
  check(st, "bifurcation scan");
  std::ostream& info = g.output.empty() ? std::cerr : std::cout;
  info << "critical_omega_r," << dicke_cli::format_number(critical) << '\n';
  return true;
}

// ---- evolve ---------------------------------------------------------------

struct EvolveArgs {
  std::string j;
  double omega = 1.0;
  double gamma_a = 1.0;
  double nbar = 0.0;
  double t_max = 10.0;
  int steps = 100;
  std::string initial = "excited";
};

void run_evolve(const Globals& g, const EvolveArgs& a) {
  const int two_j = dicke_cli::parse_two_j(a.j);
  if (two_j < 1) throw UsageError("--j must be at least 1/2");
  const ContextPtr ctx = make_context(g);

  dicke_state* raw = nullptr;
  check(dicke_state_create_basis(two_j, a.initial == "excited" ? 0 : two_j, &raw),
        "initial state");
  const StatePtr initial(raw);

  std::vector<double> times(std::size_t(a.steps) + 1);
  for (int k = 0; k <= a.steps; ++k) times[k] = a.t_max * k / a.steps;
  times.back() = a.t_max;

  const dicke_params p{two_j, a.omega, a.gamma_a, a.nbar};
  dicke_trajectory* traj_raw = nullptr;
  check(dicke_evolve(ctx.get(), initial.get(), &p, times.data(), times.size(),
                     &traj_raw),
        "evolve");
  const TrajectoryPtr traj(traj_raw);

  const int d = two_j + 1;
  std::vector<double> re(std::size_t(d) * d), im(std::size_t(d) * d);
  Table t{{"t", "jz_expect", "p_top", "p_bottom", "concurrence_if_j1"}, {}};
  for (std::size_t k = 0; k < times.size(); ++k) {
    const dicke_state* s = nullptr;
    check(dicke_trajectory_state(traj.get(), k, &s), "trajectory");
    double jz = 0.0, jz_im = 0.0;
    check(dicke_state_expectation(s, DICKE_OBS_JZ, &jz, &jz_im), "expectation");
    check(dicke_state_entries(s, re.data(), im.data(), re.size()), "entries");
    Cell c;
    if (two_j == 2) c = pair_concurrence(ctx.get(), s);
    t.rows.push_back({times[k], jz, re[0], re[std::size_t(d) * d - 1], c});
  }
  emit_table(g, t, {"t", "jz_expect", "", false});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady states, dynamics and entanglement of the driven, "
               "collectively damped Dicke model"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key = value file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Globals g;
  app.add_option("-o,--output", g.output, "Write results to this file");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-j,--jobs", g.jobs, "Worker threads for scans (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tolerance", g.tolerance, "Integrator local error target")
      ->check(CLI::PositiveNumber);
  app.add_flag("--gnuplot", g.gnuplot,
               "Also write a gnuplot script next to the CSV output");

  SteadyArgs steady;
  auto* s = app.add_subcommand("steady", "Steady state and its entanglement");
  s->add_option("--j", steady.j, "Spin j = N/2")->required();
  auto* sg = s->add_option("--gamma", steady.gamma, "gamma_a / omega (sets omega = 1)")
                 ->check(CLI::NonNegativeNumber);
  auto* so = s->add_option("--omega", steady.omega, "Rabi frequency")
                 ->check(CLI::NonNegativeNumber);
  auto* sa = s->add_option("--gamma-a", steady.gamma_a, "Collective decay rate")
                 ->check(CLI::NonNegativeNumber);
  sg->excludes(so)->excludes(sa);
  s->add_option("--nbar", steady.nbar, "Mean phonon number")
      ->check(CLI::NonNegativeNumber);
  s->add_option("--method", steady.method, "numeric or analytic")
      ->check(CLI::IsMember({"numeric", "analytic"}));

  Fig1Args fig1;
  auto* f1 = app.add_subcommand("fig1", "j = 1 concurrence over gamma and nbar");
  f1->add_option("--gamma", fig1.gamma, "gamma grid spec");
  f1->add_option("--nbar", fig1.nbar, "nbar grid spec");

  Fig2Args fig2;
  auto* f2 = app.add_subcommand("fig2", "j = 1 zero-temperature concurrence over gamma");
  f2->add_option("--gamma", fig2.gamma, "gamma grid spec");

  Fig3Args fig3;
  auto* f3 = app.add_subcommand("fig3", "Two-ion concurrence over omega_r for several j");
  f3->add_option("--j", fig3.j, "Comma-separated spin values")->delimiter(',');
  f3->add_option("--omega-r", fig3.omega_r, "omega_r grid spec");

  SemiclassicalArgs semi;
  auto* sc = app.add_subcommand("semiclassical", "Mean-field fixed points and bifurcation");
  sc->add_option("--omega-r", semi.omega_r, "Ascending omega_r grid spec");

  EvolveArgs ev;
  auto* e = app.add_subcommand("evolve", "Time evolution from a ladder end state");
  e->add_option("--j", ev.j, "Spin j = N/2")->required();
  e->add_option("--omega", ev.omega, "Rabi frequency")->check(CLI::NonNegativeNumber);
  e->add_option("--gamma-a", ev.gamma_a, "Collective decay rate")
      ->check(CLI::NonNegativeNumber);
  e->add_option("--nbar", ev.nbar, "Mean phonon number")->check(CLI::NonNegativeNumber);
  e->add_option("--t-max", ev.t_max, "Final time")->check(CLI::PositiveNumber);
  e->add_option("--steps", ev.steps, "Output intervals")->check(CLI::Range(1, 100000000));
  e->add_option("--initial", ev.initial, "excited or ground")
      ->check(CLI::IsMember({"excited", "ground"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.gnuplot) {
      if (g.output.empty()) throw UsageError("--gnuplot needs --output");
      if (g.fmt() != Format::Csv) throw UsageError("--gnuplot needs --format csv");
    }
    if (*s) run_steady(g, steady);
    else if (*f1) run_fig1(g, fig1);
    else if (*f2) run_fig2(g, fig2);
    else if (*f3) run_fig3(g, fig3);
    else if (*sc) return run_semiclassical(g, semi) ? 0 : 1;
    else if (*e) run_evolve(g, ev);
    return 0;
  } catch (const UsageError& err) {
    std::cerr << "dicke-cli: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "dicke-cli: " << err.what() << '\n';
    return 1;
  }
}
