#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "zakharov/acceptance.hpp"
#include "zakharov/errors.hpp"
#include "zakharov/integrators.hpp"

namespace zakharov {
namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Field& f) {
  double m = 0.0;
  for (const Complex& z : f.values()) m = std::max(m, std::abs(z));
  return m;
}

double max_imag_physical(const Field& f) { return to_physical(f).max_abs_imag(); }

Field roll(const Field& f, std::size_t shift) {
  const Field p = to_physical(f);
  std::vector<Complex> v(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) v[(j + shift) % p.size()] = p[j];
  return Field(p.grid_ptr(), std::move(v), Representation::physical);
}

class BothSchemes : public ::testing::TestWithParam<Scheme> {};

TEST_P(BothSchemes, ZeroIsAFixedPoint) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const Field z = Field::zeros(grid);
  const PropagatorSet P(*grid, 0.1);
  ZakharovState s = init_state(z, z, z, GetParam(), 0.1);
  for (int n = 0; n < 10; ++n) s = step(s, P);
  EXPECT_EQ(max_abs(s.E) + max_abs(s.u) + max_abs(s.uprime) + max_abs(s.F), 0.0);
  EXPECT_EQ(s.n, 10u);
}

// A single Fourier mode of F has constant |E|^2, so the coupling vanishes and
// F follows the free Schroedinger flow exactly.
TEST_P(BothSchemes, FreeSchrodingerModeIsExact) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const double tau = 0.01;
  const Field z = Field::zeros(grid);
  ZakharovState s = init_state(z, z, z, GetParam(), tau);
  std::vector<Complex> f(32);
  f[3] = Complex(0.4, -0.2);
  s.F = Field(grid, f, Representation::spectral);
  const PropagatorSet P(*grid, tau);
  const int steps = 100;
  for (int n = 0; n < steps; ++n) s = step(s, P);
  EXPECT_NEAR(std::abs(s.F[3] - f[3] * std::polar(1.0, -9.0 * tau * steps)), 0.0, 1e-12);
  EXPECT_LE(max_abs(s.u) + max_abs(s.uprime), 1e-13);
}

TEST_P(BothSchemes, FreeWaveModeIsExact) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const double tau = 0.05;
  const Field z = Field::zeros(grid);
  const Field cosx = Field::from_function(grid, [](double x) { return Complex(std::cos(x)); });
  ZakharovState s = init_state(z, cosx, z, GetParam(), tau);
  const PropagatorSet P(*grid, tau);
  for (int n = 0; n < 200; ++n) s = step(s, P);
  const double t = 200 * tau;
  EXPECT_NEAR(std::abs(s.u[1] - 0.5 * std::cos(t)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(s.uprime[1] + 0.5 * std::sin(t)), 0.0, 1e-13);
}

TEST_P(BothSchemes, ZeroModeOfWaveIsLinearInTime) {
  const auto grid = make_grid(2.0 * kPi, 16);
  const double tau = 0.1;
  const Field z = Field::zeros(grid);
  const Field c = Field::from_function(grid, [](double) { return Complex(0.3); });
  const Field v = Field::from_function(grid, [](double) { return Complex(-0.2); });
  ZakharovState s = init_state(z, c, v, GetParam(), tau);
  const PropagatorSet P(*grid, tau);
  for (int n = 0; n < 20; ++n) s = step(s, P);
  EXPECT_NEAR(s.u[0].real(), 0.3 - 0.2 * 2.0, 1e-14);
  EXPECT_NEAR(s.uprime[0].real(), -0.2, 1e-15);
}

TEST_P(BothSchemes, TranslationInvariance) {
  std::mt19937_64 rng(41);
  const auto grid = make_grid(2.0 * kPi, 64);
  const FieldTriple d{acceptance::random_complex_field(grid, rng, 10),
                      acceptance::random_real_field(grid, rng, 10),
                      acceptance::random_real_field(grid, rng, 10)};
  const double tau = 0.01;
  const PropagatorSet P(*grid, tau);
  const std::size_t m = 5;
  ZakharovState a = init_state(d, GetParam(), tau);
  ZakharovState b = init_state(FieldTriple{roll(d.E, m), roll(d.u, m), roll(d.uprime, m)},
                               GetParam(), tau);
  for (int n = 0; n < 20; ++n) {
    a = step(a, P);
    b = step(b, P);
  }
  const FieldTriple shifted{roll(a.E, m), roll(a.u, m), roll(a.uprime, m)};
  EXPECT_LE(composite_error(shifted, b.triple(), 0.0), 1e-11);
}

TEST_P(BothSchemes, WaveFieldStaysReal) {
  std::mt19937_64 rng(42);
  const auto grid = make_grid(2.0 * kPi, 128);
  const Field E0 = acceptance::random_real_field(grid, rng, 8);
  const Field u0 = acceptance::random_real_field(grid, rng, 8);
  Field u1 = to_spectral(acceptance::random_real_field(grid, rng, 8));
  std::vector<Complex> v(u1.values().begin(), u1.values().end());
  v[0] = 0.0;
  u1 = Field(grid, v, Representation::spectral);
  const double tau = 0.005;
  const PropagatorSet P(*grid, tau);
  ZakharovState s = init_state(E0, u0, u1, GetParam(), tau);
  for (int n = 0; n < 1000; ++n) s = step(s, P);
  EXPECT_LE(max_imag_physical(s.u), 1e-10);
  EXPECT_LE(max_imag_physical(s.uprime), 1e-10);
  EXPECT_TRUE(s.E.all_finite());
}

TEST_P(BothSchemes, RejectsForeignStateAndStep) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const Field z = Field::zeros(grid);
  const ZakharovState s = init_state(z, z, z, GetParam(), 0.1);
  EXPECT_THROW(step(s, PropagatorSet(*grid, 0.05)), SchemeMismatchError);
  EXPECT_THROW(step(s, PropagatorSet(TorusGrid(2.0 * kPi, 64), 0.1)), GridMismatchError);
  const PropagatorSet P(*grid, 0.1);
  if (GetParam() == Scheme::first_order) {
    EXPECT_THROW(step_second_order(s, P), SchemeMismatchError);
  } else {
    EXPECT_THROW(step_first_order(s, P), SchemeMismatchError);
  }
}

TEST_P(BothSchemes, NonFiniteStateIsReported) {
  const auto grid = make_grid(2.0 * kPi, 32);
  std::vector<Complex> bad(32, Complex(0.0));
  bad[2] = std::numeric_limits<double>::quiet_NaN();
  const Field z = Field::zeros(grid);
  const ZakharovState s =
      init_state(z, Field(grid, bad, Representation::spectral), z, GetParam(), 0.1);
  try {
    step(s, PropagatorSet(*grid, 0.1));
    FAIL() << "expected DivergenceError";
  } catch (const DivergenceError& e) {
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(run(GetParam() == Scheme::first_order ? Method::first_order : Method::second_order,
                   FieldTriple{z, Field(grid, bad, Representation::spectral), z}, 0.1, 1.0),
               DivergenceError);
}

INSTANTIATE_TEST_SUITE_P(Schemes, BothSchemes,
                         ::testing::Values(Scheme::first_order, Scheme::second_order),
                         [](const auto& info) {
                           return info.param == Scheme::first_order ? "FirstOrder" : "SecondOrder";
                         });

// With F = u = u' = 0 and constant E0, the second order accumulator stays put.
TEST(SecondOrder, AccumulatorStationaryWithoutForcing) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const Field z = Field::zeros(grid);
  const Field E0 = Field::from_function(grid, [](double) { return Complex(0.7, 0.2); });
  ZakharovState s = init_state(E0, z, z, Scheme::second_order, 0.1);
  const PropagatorSet P(*grid, 0.1);
  for (int n = 0; n < 50; ++n) s = step(s, P);
  EXPECT_LE(max_abs(s.I_F - to_spectral(E0)), 1e-15);
  EXPECT_LE(max_abs(s.E - to_spectral(E0)), 1e-15);
}

double slope(const std::vector<std::pair<double, double>>& rows) {
  double num = 0.0, den = 0.0, mx = 0.0, my = 0.0;
  for (auto [t, e] : rows) {
    mx += std::log(t) / rows.size();
    my += std::log(e) / rows.size();
  }
  for (auto [t, e] : rows) {
    num += (std::log(t) - mx) * (std::log(e) - my);
    den += (std::log(t) - mx) * (std::log(t) - mx);
  }
  return num / den;
}

// One-step defect against the exact soliton. The first order scheme rebuilds
// E from a Riemann sum that already contains F^{n+1}, so its E defect is only
// O(tau); F, u and u' carry the O(tau^2) defect.
TEST(LocalError, OneStepDefectOrders) {
  const auto grid = make_grid(20.0 * kPi, 512);
  const FieldTriple d = soliton_exact({}, grid, 0.0);
  const std::vector<double> taus{1e-2, 5e-3, 2.5e-3, 1.25e-3};
  std::vector<std::pair<double, double>> first_core, first_E, second;
  for (double tau : taus) {
    const FieldTriple exact = soliton_exact({}, grid, tau);
    const Field F_exact = init_state(exact, Scheme::first_order, tau).F;

    const ZakharovState a = step(init_state(d, Scheme::first_order, tau), PropagatorSet(*grid, tau));
    const ComponentErrors ea = component_errors(a.triple(), exact, 0.0);
    first_core.emplace_back(tau, sobolev_norm(a.F - F_exact, 0.0) + ea.u + ea.uprime);
    first_E.emplace_back(tau, ea.E);

    const ZakharovState b = step(init_state(d, Scheme::second_order, tau), PropagatorSet(*grid, tau));
    second.emplace_back(tau, composite_error(b.triple(), exact, 0.0));
  }
  EXPECT_NEAR(slope(first_core), 2.0, 0.3);
  EXPECT_NEAR(slope(first_E), 1.0, 0.3);
  EXPECT_NEAR(slope(second), 3.0, 0.3);
}

TEST(Run, SamplesAndFinalStep) {
  const auto grid = make_grid(20.0 * kPi, 256);
  const FieldTriple d = soliton_exact({}, grid, 0.0);
  RunOptions opt;
  opt.sample_every = 3;
  opt.snapshot_times = {0.05};
  const Trajectory tr = run(Method::second_order, d, 0.01, 0.1, opt);
  EXPECT_EQ(tr.steps, 10u);
  std::vector<std::size_t> ns;
  for (const auto& s : tr.samples) ns.push_back(s.n);
  EXPECT_EQ(ns, (std::vector<std::size_t>{0, 3, 5, 6, 9, 10}));
  for (const auto& s : tr.samples) EXPECT_EQ(s.snapshot.has_value(), s.n == 5);
  EXPECT_NEAR(tr.samples.back().t, 0.1, 1e-15);

  const Trajectory zero = run(Method::first_order, d, 0.01, 0.0);
  EXPECT_EQ(zero.samples.size(), 1u);
  EXPECT_EQ(composite_error(zero.final_state, d, 0.0), 0.0);
}

// Blow-up that stays finite shows up first as u losing its reality.
TEST(Run, BlowUpIsReportedAsDivergence) {
  const auto grid = make_grid(2.0 * kPi, 64);
  try {
    run(Method::first_order, example1_data(grid), 0.5, 100.0);
    FAIL() << "expected DivergenceError";
  } catch (const DivergenceError& e) {
    EXPECT_EQ(e.field(), "u");
    EXPECT_GT(e.step(), 0u);
  }
}

TEST(Run, StepCountRequiresDivisor) {
  EXPECT_EQ(step_count(0.1, 1.0), 10u);
  EXPECT_EQ(step_count(1e-3, 100.0), 100000u);
  EXPECT_THROW(step_count(0.3, 1.0), std::invalid_argument);
  EXPECT_THROW(step_count(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(step_count(0.1, -1.0), std::invalid_argument);
}

// Regression value for the first order scheme on the soliton, cross-checked
// against an independent numpy implementation.
TEST(Run, FirstOrderSolitonRegression) {
  const auto grid = make_grid(20.0 * kPi, 512);
  const Trajectory tr = run(Method::first_order, soliton_exact({}, grid, 0.0), 1e-3, 1.0);
  const double err = composite_error(tr.final_state, soliton_exact({}, grid, 1.0), 0.0);
  EXPECT_NEAR(err, 2.168587670837656e-4, 1e-6 * 2.17e-4);
}

TEST(Run, DeterministicAcrossRepeats) {
  const auto grid = make_grid(2.0 * kPi, 256);
  const FieldTriple d = example1_data(grid);
  const Trajectory a = run(Method::second_order, d, 1e-3, 0.05);
  const Trajectory b = run(Method::second_order, d, 1e-3, 0.05);
  for (std::size_t k = 0; k < grid->modes(); ++k) {
    EXPECT_EQ(a.final_state.E[k], b.final_state.E[k]);
    EXPECT_EQ(a.final_state.u[k], b.final_state.u[k]);
  }
}

TEST(Run, DealiasedRunStaysCloseForResolvedData) {
  const auto grid = make_grid(20.0 * kPi, 512);
  const FieldTriple d = soliton_exact({}, grid, 0.0);
  RunOptions opt;
  opt.step.dealias = Dealiasing::two_thirds;
  const Trajectory plain = run(Method::second_order, d, 1e-2, 0.5);
  const Trajectory cut = run(Method::second_order, d, 1e-2, 0.5, opt);
  EXPECT_LE(composite_error(plain.final_state, cut.final_state, 0.0), 1e-8);
}

}  // namespace
}  // namespace zakharov
