#include "zakharov/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

#include "zakharov/errors.hpp"

namespace zakharov {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_tau_list(const std::vector<double>& taus, double T) {
  if (taus.size() < 4) {
    throw std::invalid_argument("convergence_study: need at least four step sizes");
  }
  for (std::size_t i = 1; i < taus.size(); ++i) {
    if (!(taus[i] < taus[i - 1])) {
      throw std::invalid_argument("convergence_study: step sizes must be distinct");
    }
  }
  for (double tau : taus) step_count(tau, T);
}

FieldTriple spectral(const FieldTriple& s) {
  return {to_spectral(s.E), to_spectral(s.u), to_spectral(s.uprime)};
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::first_order: return "first";
    case Method::second_order: return "second";
    case Method::rk4: return "rk4";
  }
  return "?";
}

std::string to_string(Problem p) {
  switch (p) {
    case Problem::soliton: return "soliton";
    case Problem::example1: return "example1";
    case Problem::custom: return "custom";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "first") return Method::first_order;
  if (name == "second") return Method::second_order;
  if (name == "rk4") return Method::rk4;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

Problem parse_problem(const std::string& name) {
  if (name == "soliton") return Problem::soliton;
  if (name == "example1") return Problem::example1;
  if (name == "custom") return Problem::custom;
  throw std::invalid_argument("unknown problem '" + name + "'");
}

FieldTriple ProblemSetup::initial_data() const {
  switch (problem) {
    case Problem::soliton:
      return spectral(soliton_exact(soliton, grid, 0.0));
    case Problem::example1:
      return example1_data(grid);
    case Problem::custom:
      if (!custom_data) throw std::invalid_argument("custom problem without initial data");
      return spectral(*custom_data);
  }
  throw std::invalid_argument("unknown problem");
}

Params ProblemSetup::params() const {
  Params p{{"problem", to_string(problem)},
           {"K", std::to_string(grid->modes())},
           {"L", num(grid->length())},
           {"dx", num(grid->spacing())}};
  if (problem == Problem::soliton) {
    p.emplace_back("B", num(soliton.B));
    p.emplace_back("C", num(soliton.C));
  }
  if (problem == Problem::example1) p.emplace_back("normalization", "E/H2,u/H1,uprime/L2");
  return p;
}

Reference reference_solution(const ProblemSetup& setup, double T, double tau_min,
                             const StepOptions& options) {
  if (setup.problem == Problem::soliton) {
    return Reference{spectral(soliton_exact(setup.soliton, setup.grid, T)), "exact", 0.0, 0.0};
  }
  const FieldTriple data = setup.initial_data();
  if (T == 0.0) return Reference{data, "initial", 0.0, 0.0};

  double tau_rk4 = std::min(tau_min / 100.0, rk4_max_stable_tau(*setup.grid));
  tau_rk4 = T / std::ceil(T / tau_rk4 - 1e-9);
  const double tau_fine = T / std::max(1.0, std::round(T / (tau_min / 100.0)));

  RunOptions run_options;
  run_options.sample_every = static_cast<std::size_t>(-1);
  run_options.step = options;
  auto oracle = std::async(std::launch::async, [&] {
    return run(Method::rk4, data, tau_rk4, T, run_options).final_state;
  });
  const FieldTriple fine = run(Method::second_order, data, tau_fine, T, run_options).final_state;
  const FieldTriple rk4 = oracle.get();

  const double gap = composite_error(rk4, fine, 0.0);
  if (!(gap <= kReferenceAgreement)) {
    throw ReferenceDisagreementError("reference solutions disagree: ||rk4 - second||_(0) = " +
                                     num(gap) + " > " + num(kReferenceAgreement));
  }
  return Reference{rk4, "rk4+second", tau_rk4, gap};
}

ConvergenceRecord convergence_study(Method scheme, const ProblemSetup& setup,
                                    std::vector<double> tau_list, double T, double s,
                                    const StudyOptions& options, const Reference* reference) {
  std::sort(tau_list.begin(), tau_list.end(), std::greater<>());
  check_tau_list(tau_list, T);

  std::optional<Reference> computed;
  if (reference == nullptr) {
    computed = reference_solution(setup, T, tau_list.back(), options.step);
    reference = &*computed;
  }
  const FieldTriple data = setup.initial_data();

  RunOptions run_options;
  run_options.sample_every = static_cast<std::size_t>(-1);
  run_options.step = options.step;
  auto cell = [&](double tau) {
    const FieldTriple final_state = run(scheme, data, tau, T, run_options).final_state;
    const ComponentErrors e = component_errors(final_state, reference->state, s);
    return ConvergenceRow{tau, e.E, e.u, e.uprime, e.composite()};
  };

  ConvergenceRecord record{scheme, setup.problem, s, T, setup.params(), {}};
  if (options.parallel) {
    std::vector<std::future<ConvergenceRow>> futures;
    for (double tau : tau_list) futures.push_back(std::async(std::launch::async, cell, tau));
    for (auto& f : futures) record.rows.push_back(f.get());
  } else {
    for (double tau : tau_list) record.rows.push_back(cell(tau));
  }

  Params head{{"kind", "convergence"}, {"scheme", to_string(scheme)}, {"s", num(s)},
              {"T", num(T)}};
  record.params.insert(record.params.begin(), head.begin(), head.end());
  record.params.emplace_back("reference", reference->kind);
  if (reference->tau_ref > 0.0) record.params.emplace_back("tau_ref", num(reference->tau_ref));
  if (options.step.dealias == Dealiasing::two_thirds) record.params.emplace_back("dealias", "2/3");
  return record;
}

OrderFit fit_order(std::span<const std::pair<double, double>> rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [tau, err] : rows) {
    if (tau > 0.0 && err > kRoundingFloor && std::isfinite(err)) {
      pts.emplace_back(std::log(tau), std::log(err));
    }
  }
  OrderFit fit;
  fit.used = pts.size();
  fit.excluded = rows.size() - pts.size();
  if (pts.size() < 2) {
    throw std::invalid_argument("fit_order: fewer than two usable rows");
  }
  const double n = static_cast<double>(pts.size());
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_order: all step sizes identical");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

OrderFit fit_order(const ConvergenceRecord& record) {
  std::vector<std::pair<double, double>> rows;
  for (const auto& r : record.rows) rows.emplace_back(r.tau, r.err_composite);
  return fit_order(rows);
}

RunRecord make_run_record(const Trajectory& trajectory, const ProblemSetup& setup) {
  const double dx = setup.grid->spacing();
  RunRecord record;
  record.scheme = trajectory.method;
  record.problem = setup.problem;
  record.tau = trajectory.tau;
  record.cfl = trajectory.tau / (dx * dx);
  record.params = Params{{"kind", "run"}, {"scheme", to_string(trajectory.method)}};
  for (const auto& kv : setup.params()) record.params.push_back(kv);
  record.params.emplace_back("tau", num(trajectory.tau));
  record.params.emplace_back("CFL", num(record.cfl));
  record.params.emplace_back("T", num(static_cast<double>(trajectory.steps) * trajectory.tau));
  if (trajectory.samples.empty()) return record;

  const Diagnostics& first = trajectory.samples.front().diagnostics;
  for (const auto& sample : trajectory.samples) {
    const Diagnostics& d = sample.diagnostics;
    record.mean_zero_warning = record.mean_zero_warning || d.mean_zero_warning;
    record.rows.push_back(RunRow{sample.t, d.l2_E, d.hamiltonian, d.l2_E - first.l2_E,
                                 d.hamiltonian - first.hamiltonian, d.mean_u, d.mean_uprime});
  }
  if (record.mean_zero_warning) record.params.emplace_back("warning", "mean(uprime)!=0");
  return record;
}

double cfl_step(const TorusGrid& grid, double cfl, double T) {
  if (!(cfl > 0.0) || !(T >= 0.0)) {
    throw std::invalid_argument("cfl_step: need CFL > 0 and T >= 0");
  }
  const double dx = grid.spacing();
  if (T == 0.0) return cfl * dx * dx;
  const double steps = std::max(1.0, std::round(T / (cfl * dx * dx)));
  return T / steps;
}

RunRecord conservation_run(Method scheme, const ProblemSetup& setup, double cfl, double T,
                           const RunOptions& options) {
  const double tau = cfl_step(*setup.grid, cfl, T);
  RunRecord record = make_run_record(run(scheme, setup.initial_data(), tau, T, options), setup);
  record.params.insert(record.params.begin() + 1, {"CFL_requested", num(cfl)});
  record.params.front().second = "conservation";
  return record;
}

}  // namespace zakharov
