#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "zakharov/acceptance.hpp"
#include "zakharov/csv.hpp"
#include "zakharov/errors.hpp"
#include "zakharov/harness.hpp"

namespace fs = std::filesystem;
using namespace zakharov;

namespace {

constexpr double kPi = std::numbers::pi;

struct Config {
  std::string scheme = "second";
  std::string problem = "soliton";
  std::size_t K = 0;
  double L = 0.0;
  double tau = 0.0;
  double cfl = 0.0;
  double T = 1.0;
  std::size_t sample_every = 1;
  double s_norm = 0.0;
  double B = 0.5;
  double C = 0.15;
  bool dealias = false;
  std::string out_dir;
  std::string input;
  std::vector<double> times{0.0, 25.0, 50.0, 75.0, 100.0};
  std::vector<double> tau_list{4e-3, 2e-3, 1e-3, 5e-4};
  std::vector<int> criteria;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

fs::path out_dir(const Config& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("ZAK_OUT_DIR"); env && *env) return env;
  return "out";
}

ProblemSetup make_setup(const Config& c) {
  ProblemSetup setup;
  setup.problem = parse_problem(c.problem);
  setup.soliton = {c.B, c.C};
  switch (setup.problem) {
    case Problem::example1:
      if (c.L != 0.0 && std::abs(c.L - 2.0 * kPi) > 1e-12) {
        throw UsageError("example1 lives on [-pi, pi); --L must be 2*pi");
      }
      setup.grid = make_grid(2.0 * kPi, c.K ? c.K : 1024);
      break;
    case Problem::soliton:
      setup.grid = make_grid(c.L > 0.0 ? c.L : 20.0 * kPi, c.K ? c.K : 512);
      break;
    case Problem::custom: {
      if (c.input.empty()) throw UsageError("--problem custom needs --input <snapshot.csv>");
      FieldTriple data = csv::read_snapshot(c.input);
      if (c.K && c.K != data.E.grid().modes()) {
        throw UsageError("--K disagrees with the number of rows in --input");
      }
      setup.grid = data.E.grid_ptr();
      setup.custom_data = std::move(data);
      break;
    }
  }
  return setup;
}

StepOptions step_options(const Config& c) {
  StepOptions o;
  o.dealias = c.dealias ? Dealiasing::two_thirds : Dealiasing::none;
  return o;
}

std::vector<Method> schemes(const Config& c, const std::string& fallback) {
  const std::string name = c.scheme.empty() ? fallback : c.scheme;
  if (name == "both") return {Method::first_order, Method::second_order};
  return {parse_method(name)};
}

void add_common_params(Params& p, const Config& c) {
  p.emplace_back("dealias", c.dealias ? "two_thirds" : "none");
}

double resolve_tau(const Config& c, const TorusGrid& grid, double T, double default_tau) {
  if (c.cfl > 0.0) return cfl_step(grid, c.cfl, T);
  return c.tau > 0.0 ? c.tau : default_tau;
}

int cmd_run(const Config& c) {
  const ProblemSetup setup = make_setup(c);
  const Method method = schemes(c, "second").at(0);
  const double tau = resolve_tau(c, *setup.grid, c.T, 1e-3);
  RunOptions opt;
  opt.sample_every = c.sample_every;
  opt.step = step_options(c);
  RunRecord record = make_run_record(run(method, setup.initial_data(), tau, c.T, opt), setup);
  add_common_params(record.params, c);
  const fs::path path =
      out_dir(c) / ("run_" + to_string(method) + "_" + to_string(setup.problem) + ".csv");
  csv::write_run(record, path);
  const RunRow& last = record.rows.back();
  std::cout << "wrote " << path.string() << " (" << record.rows.size() << " rows, tau "
            << num(tau) << ")\n"
            << "final t " << num(last.t) << "  dev_l2 " << num(last.dev_l2) << "  dev_H "
            << num(last.dev_H) << "\n";
  if (record.mean_zero_warning) std::cout << "warning: mean(u') != 0, energy not conserved\n";
  return 0;
}

int cmd_converge(const Config& c) {
  const ProblemSetup setup = make_setup(c);
  if (c.tau_list.empty()) throw UsageError("--tau-list is empty");
  StudyOptions opt;
  opt.step = step_options(c);
  double tau_min = c.tau_list.front();
  for (double t : c.tau_list) tau_min = std::min(tau_min, t);
  const Reference ref = reference_solution(setup, c.T, tau_min, opt.step);
  if (ref.kind != "exact") {
    std::cout << "reference: " << ref.kind << ", tau_ref " << num(ref.tau_ref) << ", cross-check "
              << num(ref.cross_check) << "\n";
  }
  for (Method m : schemes(c, "both")) {
    if (m == Method::rk4) throw UsageError("converge supports --scheme first, second or both");
    ConvergenceRecord record =
        convergence_study(m, setup, c.tau_list, c.T, c.s_norm, opt, &ref);
    const fs::path path =
        out_dir(c) / ("converge_" + to_string(m) + "_" + to_string(setup.problem) + ".csv");
    csv::write_convergence(record, path);
    const OrderFit fit = fit_order(record);
    std::cout << to_string(m) << ": slope " << num(fit.slope) << " (r2 " << num(fit.r2) << ", "
              << fit.used << " rows) -> " << path.string() << "\n";
  }
  return 0;
}

int cmd_soliton(const Config& c) {
  Config sc = c;
  sc.problem = "soliton";
  const ProblemSetup setup = make_setup(sc);
  if (c.times.empty()) throw UsageError("--times is empty");
  double T = 0.0;
  for (double t : c.times) {
    if (t < 0.0) throw UsageError("--times must be nonnegative");
    T = std::max(T, t);
  }
  if (c.tau <= 0.0 && c.cfl <= 0.0) sc.cfl = 3.2;
  double tau = resolve_tau(sc, *setup.grid, T, 0.0);
  if (sc.cfl > 0.0 && T > 0.0) {
    // Round against the smallest positive time so every requested time is hit.
    double base = T;
    for (double t : c.times) {
      if (t > 0.0) base = std::min(base, t);
    }
    bool commensurate = true;
    for (double t : c.times) {
      const double r = t / base;
      commensurate = commensurate && std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, r);
    }
    if (commensurate) tau = cfl_step(*setup.grid, sc.cfl, base);
  }
  RunOptions opt;
  opt.sample_every = std::max<std::size_t>(c.sample_every, 1);
  opt.snapshot_times = c.times;
  opt.step = step_options(c);
  const Method method = schemes(c, "second").at(0);
  const Trajectory tr = run(method, setup.initial_data(), tau, T, opt);
  for (const auto& sample : tr.samples) {
    if (!sample.snapshot) continue;
    Params p{{"kind", "snapshot"}, {"scheme", to_string(method)}};
    for (const auto& kv : setup.params()) p.push_back(kv);
    p.emplace_back("tau", csv::format_value(tau));
    p.emplace_back("t", csv::format_value(sample.t));
    add_common_params(p, c);
    const fs::path path =
        out_dir(c) / ("soliton_" + to_string(method) + "_t" + num(sample.t) + ".csv");
    csv::write_snapshot(*sample.snapshot, p, path);
    const FieldTriple exact = soliton_exact(setup.soliton, setup.grid, sample.t);
    std::cout << "t " << num(sample.t) << ": error " << num(composite_error(*sample.snapshot, exact, 0.0))
              << " -> " << path.string() << "\n";
  }
  return 0;
}

int cmd_conserve(const Config& c) {
  const ProblemSetup setup = make_setup(c);
  const double dx = setup.grid->spacing();
  const double cfl = c.cfl > 0.0 ? c.cfl : (c.tau > 0.0 ? c.tau / (dx * dx) : 3.2);
  RunOptions opt;
  opt.sample_every = c.sample_every;
  opt.step = step_options(c);
  for (Method m : schemes(c, "second")) {
    RunRecord record = conservation_run(m, setup, cfl, c.T, opt);
    add_common_params(record.params, c);
    const fs::path path = out_dir(c) / ("conserve_" + to_string(m) + "_" + to_string(setup.problem) +
                                        "_cfl" + num(cfl) + ".csv");
    csv::write_run(record, path);
    double max_l2 = 0.0, max_h = 0.0;
    for (const auto& r : record.rows) {
      max_l2 = std::max(max_l2, std::abs(r.dev_l2));
      max_h = std::max(max_h, std::abs(r.dev_H));
    }
    std::cout << to_string(m) << ": tau " << num(record.tau) << ", max |dev_l2| " << num(max_l2)
              << ", max |dev_H| " << num(max_h) << " -> " << path.string() << "\n";
    if (record.mean_zero_warning) std::cout << "warning: mean(u') != 0, energy not conserved\n";
  }
  return 0;
}

int cmd_selftest(const Config& c) {
  const std::vector<int> ids = c.criteria.empty() ? acceptance::criterion_ids() : c.criteria;
  const auto results = acceptance::run_all(ids, std::cout);
  for (const auto& r : results) {
    if (!r.passed) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trigonometric time integrators for the Zakharov system on a periodic domain"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; command-line flags override it");

  Config c;
  c.scheme.clear();
  app.add_option("--scheme", c.scheme, "first | second | rk4 | both")
      ->default_str("second (converge: both)");
  app.add_option("--problem", c.problem, "soliton | example1 | custom")->capture_default_str();
  app.add_option("--K", c.K, "Fourier modes, a power of two")
      ->default_str("512 soliton, 1024 example1");
  app.add_option("--L", c.L, "torus length")->default_str("20*pi soliton, 2*pi example1");
  auto* tau = app.add_option("--tau", c.tau, "step size")->default_str("1e-3 (run)");
  auto* cfl = app.add_option("--CFL", c.cfl, "step size as tau / dx^2, rounded to divide T")
                  ->default_str("3.2 (soliton, conserve)");
  tau->excludes(cfl);
  cfl->excludes(tau);
  app.add_option("--T", c.T, "final time")->capture_default_str();
  app.add_option("--sample-every", c.sample_every, "diagnostics every n steps")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--s-norm", c.s_norm, "Sobolev index s of the error norm")->capture_default_str();
  app.add_option("--B", c.B, "soliton width parameter")->capture_default_str();
  app.add_option("--C", c.C, "soliton speed")->capture_default_str();
  app.add_flag("--dealias", c.dealias, "2/3-rule dealiasing of products")->capture_default_str();
  app.add_option("--out-dir", c.out_dir, "output directory")->default_str("$ZAK_OUT_DIR or ./out");
  app.add_option("--input", c.input, "snapshot CSV with initial data for --problem custom")
      ->default_str("none");
  app.add_option("--times", c.times, "snapshot times (soliton)")
      ->delimiter(',')
      ->default_str("0,25,50,75,100");
  app.add_option("--tau-list", c.tau_list, "step sizes (converge)")
      ->delimiter(',')
      ->default_str("4e-3,2e-3,1e-3,5e-4");
  app.add_option("--criteria", c.criteria, "criterion ids (selftest)")
      ->delimiter(',')
      ->default_str("all");

  auto* run_cmd = app.add_subcommand("run", "single trajectory, writes a run CSV");
  auto* converge_cmd = app.add_subcommand("converge", "error vs tau study, one CSV per scheme");
  auto* soliton_cmd = app.add_subcommand("soliton", "soliton snapshots at --times");
  auto* conserve_cmd = app.add_subcommand("conserve", "L2 and energy deviation series");
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (!(c.T >= 0.0)) throw UsageError("--T must be nonnegative");
    if (c.tau < 0.0 || c.cfl < 0.0) throw UsageError("--tau and --CFL must be positive");
    if (*run_cmd) return cmd_run(c);
    if (*converge_cmd) return cmd_converge(c);
    if (*soliton_cmd) return cmd_soliton(c);
    if (*conserve_cmd) return cmd_conserve(c);
    if (*selftest_cmd) return cmd_selftest(c);
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }
  return 1;
}
