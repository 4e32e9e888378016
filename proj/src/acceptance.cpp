#include "zakharov/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "zakharov/harness.hpp"
#include "zakharov/multiplier.hpp"

namespace zakharov::acceptance {
namespace {

constexpr double kPi = std::numbers::pi;
const std::vector<double> kTauGrid{4e-3, 2e-3, 1e-3, 5e-4};

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

ProblemSetup soliton_setup(std::size_t K) {
  return ProblemSetup{Problem::soliton, make_grid(20.0 * kPi, K), SolitonParams{0.5, 0.15}, {}};
}

// (1 - Lap) E0 against i F0 - (u0 - 1) E0.
double elliptic_residual(const FieldTriple& data, Scheme scheme) {
  const ZakharovState s = init_state(data, scheme, 1e-3);
  std::vector<Complex> helm(s.E.size());
  for (std::size_t k = 0; k < helm.size(); ++k) {
    const double kap = s.E.grid().wavenumber(k);
    helm[k] = (1.0 + kap * kap) * s.E[k];
  }
  const Field helmholtz(s.E.grid_ptr(), std::move(helm), Representation::spectral);
  const Field one(s.E.grid_ptr(), std::vector<Complex>(s.E.size(), 1.0),
                  Representation::physical);
  const Field rhs = Complex(0.0, 1.0) * s.F -
                    to_spectral(product_physical(to_physical(s.u) - one, s.E));
  return sobolev_norm(helmholtz - rhs, 0.0) / sobolev_norm(helmholtz, 0.0);
}

Outcome elliptic_identity() {
  double worst = 0.0;
  const FieldTriple ex1 = example1_data(make_grid(2.0 * kPi, 1024));
  const FieldTriple sol = soliton_setup(512).initial_data();
  for (auto scheme : {Scheme::first_order, Scheme::second_order}) {
    worst = std::max(worst, elliptic_residual(ex1, scheme));
    worst = std::max(worst, elliptic_residual(sol, scheme));
  }
  return {worst <= 1e-12, "max relative residual " + fmt("%.2e", worst) + " (tol 1e-12)"};
}

Outcome linear_exactness() {
  const auto grid = make_grid(2.0 * kPi, 256);
  std::mt19937_64 rng(20240611);
  const Field u0 = to_spectral(random_real_field(grid, rng, 100));
  const Field u1 = to_spectral(random_real_field(grid, rng, 100));
  const Field zero = Field::zeros(grid);
  const double tau = 0.1;
  const std::size_t steps = 1000;
  const double t = static_cast<double>(steps) * tau;

  double scale = 0.0;
  for (std::size_t k = 0; k < u0.size(); ++k) {
    scale = std::max({scale, std::abs(u0[k]), std::abs(u1[k])});
  }
  double worst = 0.0;
  for (auto scheme : {Scheme::first_order, Scheme::second_order}) {
    const PropagatorSet P(*grid, tau);
    ZakharovState s = init_state(zero, u0, u1, scheme, tau);
    for (std::size_t n = 0; n < steps; ++n) s = step(s, P);
    for (std::size_t k = 0; k < u0.size(); ++k) {
      const double kap = std::abs(grid->wavenumber(k));
      Complex u_exact, up_exact;
      if (kap == 0.0) {
        u_exact = u0[k] + t * u1[k];
        up_exact = u1[k];
      } else {
        u_exact = std::cos(kap * t) * u0[k] + std::sin(kap * t) / kap * u1[k];
        up_exact = -kap * std::sin(kap * t) * u0[k] + std::cos(kap * t) * u1[k];
      }
      worst = std::max({worst, std::abs(s.u[k] - u_exact) / (scale * (1.0 + t)),
                        std::abs(s.uprime[k] - up_exact) / (scale * (1.0 + kap))});
    }
  }
  return {worst <= 1e-12, "max relative modal error after 1000 steps of tau=0.1 (CFL " +
                              fmt("%.0f", tau / (grid->spacing() * grid->spacing())) +
                              "): " + fmt("%.2e", worst) + " (tol 1e-12)"};
}

Outcome multiplier_bounds() {
  const auto grid = make_grid(2.0 * kPi, 1024);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<long> mode(-512, 512);
  double worst_unit = 0.0, worst_d1 = 0.0, worst_sinc = 0.0, worst_omc = 0.0, worst_d2 = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double tau = 1.0 - unit(rng);  // (0, 1]
    long k = mode(rng);
    if (k == 0) k = 1;
    const double kap = static_cast<double>(k);
    auto eval = [&](SymbolKind kind) { return evaluate_symbol({kind, tau}, kap); };
    worst_unit = std::max(worst_unit, std::abs(std::abs(eval(SymbolKind::free_schrodinger)) - 1.0));
    worst_d1 = std::max(worst_d1, std::abs(eval(SymbolKind::phi_d1)));
    worst_sinc = std::max(worst_sinc, std::abs(eval(SymbolKind::wave_sinc)));
    worst_omc = std::max(worst_omc, std::abs(eval(SymbolKind::wave_one_minus_cos)));
    worst_d2 = std::max(worst_d2, std::abs(tau * eval(SymbolKind::phi_d2) * (-kap * kap)) / tau);
  }
  const bool bounds = worst_unit <= 1e-15 && worst_d1 <= 2.0 && worst_sinc <= 1.0 &&
                      worst_omc <= 2.0 && worst_d2 <= 3.0;

  // Zero-mode limits, at kappa = 0 and just inside the series branch.
  double worst_limit = 0.0;
  const double tau = 0.37;
  const std::vector<std::pair<SymbolKind, Complex>> limits{
      {SymbolKind::free_schrodinger, 1.0},   {SymbolKind::phi_d1, -1.0},
      {SymbolKind::phi_d2, Complex(0.0, -tau / 2.0)},
      {SymbolKind::wave_cos, 1.0},           {SymbolKind::wave_sin_over_abs, tau},
      {SymbolKind::wave_abs_sin, 0.0},       {SymbolKind::wave_one_minus_cos, 0.0},
      {SymbolKind::wave_sinc, 1.0},          {SymbolKind::inverse_helmholtz, 1.0}};
  for (const auto& [kind, expected] : limits) {
    for (double kap : {0.0, 1e-13, -1e-13}) {
      worst_limit = std::max(worst_limit, std::abs(evaluate_symbol({kind, tau}, kap) - expected));
    }
  }
  std::ostringstream detail;
  detail << "max |exp|-1 " << fmt("%.1e", worst_unit) << ", |D1| " << fmt("%.4f", worst_d1)
         << ", |sinc| " << fmt("%.4f", worst_sinc) << ", |(1-cos)/x| " << fmt("%.4f", worst_omc)
         << ", |tau D2 Lap|/tau " << fmt("%.4f", worst_d2) << ", zero-mode limit error "
         << fmt("%.1e", worst_limit);
  return {bounds && worst_limit <= 1e-12, detail.str()};
}

Outcome slopes_within(const ConvergenceRecord& first, const ConvergenceRecord& second,
                      const std::string& extra = "") {
  const double s1 = fit_order(first).slope;
  const double s2 = fit_order(second).slope;
  const bool ok = s1 >= 0.85 && s1 <= 1.15 && s2 >= 1.75 && s2 <= 2.25;
  return {ok, "slopes first " + fmt("%.4f", s1) + " in [0.85,1.15], second " + fmt("%.4f", s2) +
                  " in [1.75,2.25]" + extra};
}

Outcome soliton_convergence() {
  const ProblemSetup setup = soliton_setup(512);
  const auto first = convergence_study(Method::first_order, setup, kTauGrid, 1.0, 0.0);
  const auto second = convergence_study(Method::second_order, setup, kTauGrid, 1.0, 0.0);
  return slopes_within(first, second);
}

Outcome example1_convergence() {
  const ProblemSetup setup{Problem::example1, make_grid(2.0 * kPi, 256), {}, {}};
  const Reference ref = reference_solution(setup, 1.0, kTauGrid.back());
  const auto first = convergence_study(Method::first_order, setup, kTauGrid, 1.0, 0.0, {}, &ref);
  const auto second =
      convergence_study(Method::second_order, setup, kTauGrid, 1.0, 0.0, {}, &ref);
  Outcome o = slopes_within(first, second, "; reference gap " + fmt("%.2e", ref.cross_check) +
                                               " (tol 1e-7)");
  o.passed = o.passed && ref.cross_check <= kReferenceAgreement;
  return o;
}

double soliton_error(std::size_t K, double tau, double s) {
  const ProblemSetup setup = soliton_setup(K);
  RunOptions options;
  options.sample_every = static_cast<std::size_t>(-1);
  const auto final_state =
      run(Method::first_order, setup.initial_data(), tau, 1.0, options).final_state;
  return composite_error(final_state, soliton_exact(setup.soliton, setup.grid, 1.0), s);
}

Outcome dx_independence() {
  const double e512 = soliton_error(512, 1e-3, 0.0);
  const double e1024 = soliton_error(1024, 1e-3, 0.0);
  const double change = std::abs(e1024 - e512) / e512;
  return {change <= 0.05, "error K=512 " + fmt("%.6e", e512) + ", K=1024 " + fmt("%.6e", e1024) +
                              ", relative change " + fmt("%.2e", change) + " (tol 5%)"};
}

struct DriftSummary {
  double max_rel_l2 = 0.0;
  double max_abs_l2 = 0.0;
  double max_H_first_half = 0.0;
  double max_H_second_half = 0.0;
};

DriftSummary drift(const RunRecord& record) {
  DriftSummary d;
  const double l2_0 = record.rows.front().l2_E;
  const double half = record.rows.back().t / 2.0;
  for (const auto& row : record.rows) {
    d.max_abs_l2 = std::max(d.max_abs_l2, std::abs(row.dev_l2));
    d.max_rel_l2 = std::max(d.max_rel_l2, std::abs(row.dev_l2) / l2_0);
    auto& slot = row.t <= half ? d.max_H_first_half : d.max_H_second_half;
    slot = std::max(slot, std::abs(row.dev_H));
  }
  return d;
}

Outcome conservation_drift() {
  const ProblemSetup setup = soliton_setup(512);
  const double T = 20.0;
  bool ok = true;
  std::ostringstream detail;
  for (auto method : {Method::first_order, Method::second_order}) {
    const RunRecord rec = conservation_run(method, setup, 5.0, T);
    const DriftSummary d = drift(rec);
    const bool l2_ok = d.max_rel_l2 <= 1e-2;
    const bool h_ok = d.max_H_second_half <= 2.0 * d.max_H_first_half;
    ok = ok && l2_ok && h_ok;
    detail << to_string(method) << " (tau " << fmt("%.5f", rec.tau) << "): L2 drift "
           << fmt("%.2e", d.max_rel_l2) << (l2_ok ? " ok" : " >1e-2") << ", H halves "
           << fmt("%.2e", d.max_H_first_half) << "/" << fmt("%.2e", d.max_H_second_half)
           << (h_ok ? " ok" : " ratio>2") << "; ";
    if (method == Method::first_order) {
      const double tau_half = rec.tau / 2.0;
      const auto halved = make_run_record(run(method, setup.initial_data(), tau_half, T), setup);
      const double factor = d.max_abs_l2 / drift(halved).max_abs_l2;
      const bool f_ok = factor >= 1.5 && factor <= 3.0;
      ok = ok && f_ok;
      detail << "first halving factor " << fmt("%.3f", factor) << (f_ok ? " ok" : " outside [1.5,3]")
             << "; ";
    }
  }
  return {ok, detail.str()};
}

Outcome zero_mode_recursion() {
  const auto grid = make_grid(2.0 * kPi, 128);
  std::mt19937_64 rng(99);
  const Field E0 = random_complex_field(grid, rng, 20);
  const Field u0 = random_real_field(grid, rng, 20);
  const Field u1 = random_real_field(grid, rng, 20);
  const double tau = 0.01;
  double worst = 0.0;
  for (auto scheme : {Scheme::first_order, Scheme::second_order}) {
    const PropagatorSet P(*grid, tau);
    ZakharovState s = init_state(E0, u0, u1, scheme, tau);
    for (int n = 0; n < 50; ++n) {
      const ZakharovState next = step(s, P);
      const double mu = (next.u.mean() - s.u.mean() - tau * s.uprime.mean()).real();
      const double mup = (next.uprime.mean() - s.uprime.mean()).real();
      worst = std::max({worst, std::abs(mu), std::abs(mup)});
      s = next;
    }
  }
  return {worst <= 1e-14, "max zero-mode recursion defect " + fmt("%.2e", worst) + " (tol 1e-14)"};
}

Outcome energy_space_order() {
  const auto first =
      convergence_study(Method::first_order, soliton_setup(512), kTauGrid, 1.0, -1.0);
  const double slope = fit_order(first).slope;
  return {slope >= 0.85, "first order slope in ||.||_(-1): " + fmt("%.4f", slope) + " (>= 0.85)"};
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "elliptic identity of the initial data", 1.0, elliptic_identity},
      {2, "linear exactness of the wave propagation", 5.0, linear_exactness},
      {3, "multiplier bounds and zero-mode limits", 5.0, multiplier_bounds},
      {4, "soliton global convergence orders", 120.0, soliton_convergence},
      {5, "example-1 convergence vs dual reference", 180.0, example1_convergence},
      {6, "dx-independence of the time error", 60.0, dx_independence},
      {7, "conservation drift at CFL 5", 120.0, conservation_drift},
      {8, "zero-mode recursions", 1.0, zero_mode_recursion},
      {9, "energy-space first-order convergence", 60.0, energy_space_order},
  };
  return all;
}

}  // namespace

Field random_real_field(const GridPtr& grid, std::mt19937_64& rng, int max_mode) {
  std::normal_distribution<double> normal;
  std::vector<double> a(max_mode + 1), b(max_mode + 1);
  for (int k = 0; k <= max_mode; ++k) {
    a[k] = normal(rng) / (1.0 + k * k);
    b[k] = normal(rng) / (1.0 + k * k);
  }
  const double base = 2.0 * kPi / grid->length();
  return Field::from_function(grid, [&](double x) {
    double v = a[0];
    for (int k = 1; k <= max_mode; ++k) {
      v += a[k] * std::cos(base * k * x) + b[k] * std::sin(base * k * x);
    }
    return Complex(v);
  });
}

Field random_complex_field(const GridPtr& grid, std::mt19937_64& rng, int max_mode) {
  const Field re = random_real_field(grid, rng, max_mode);
  const Field im = random_real_field(grid, rng, max_mode);
  return re + Complex(0.0, 1.0) * im;
}

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& c : criteria()) ids.push_back(c.id);
  return ids;
}

CriterionResult run_criterion(int id) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    CriterionResult result{c.id, c.name, false, "", 0.0, c.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.check();
      result.passed = o.passed;
      result.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.seconds > result.budget_seconds) {
      result.passed = false;
      result.detail += "; runtime over budget";
    }
    return result;
  }
  throw std::invalid_argument("unknown acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all(const std::vector<int>& ids, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (int id : ids) {
    CriterionResult r = run_criterion(id);
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail
        << " (" << fmt("%.2f", r.seconds) << " s, budget " << fmt("%.0f", r.budget_seconds)
        << " s)" << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace zakharov::acceptance
