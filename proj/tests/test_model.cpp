#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "zakharov/acceptance.hpp"
#include "zakharov/errors.hpp"
#include "zakharov/model.hpp"
#include "zakharov/multiplier.hpp"

namespace zakharov {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double max_abs(const Field& f) {
  double m = 0.0;
  for (const Complex& z : f.values()) m = std::max(m, std::abs(z));
  return m;
}

GridPtr soliton_grid(std::size_t K = 512) { return make_grid(20.0 * kPi, K); }

TEST(InitState, ZeroDataGivesZeroAccumulators) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const Field z = Field::zeros(grid);
  for (Scheme scheme : {Scheme::first_order, Scheme::second_order}) {
    const ZakharovState s = init_state(z, z, z, scheme, 0.1);
    EXPECT_EQ(max_abs(s.F), 0.0);
    EXPECT_EQ(max_abs(s.S_F), 0.0);
    EXPECT_EQ(s.n, 0u);
  }
}

TEST(InitState, SingleModeTimeDerivative) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const Field E0 = Field::from_function(grid, [](double x) { return std::polar(1.0, x); });
  const Field z = Field::zeros(grid);
  const ZakharovState s = init_state(E0, z, z, Scheme::first_order, 0.1);
  const Field expected = to_spectral(-kI * E0);
  for (std::size_t k = 0; k < s.F.size(); ++k) {
    EXPECT_NEAR(std::abs(s.F[k] - expected[k]), 0.0, 1e-14);
  }
  // First order seeds S_F with E0 + tau F0, second order with tau F0.
  const ZakharovState s2 = init_state(E0, z, z, Scheme::second_order, 0.1);
  EXPECT_NEAR(std::abs(s.S_F[1] - (1.0 - 0.1 * kI)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s2.S_F[1] - (-0.1 * kI)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s2.I_F[1] - 1.0), 0.0, 1e-15);
}

// E = (1 - Lap)^-1 (i F - (u - 1) E) whenever F = i (Lap E - u E).
TEST(InitState, EllipticReconstructionIdentity) {
  std::mt19937_64 rng(31);
  const auto grid = make_grid(6.0, 64);
  for (int trial = 0; trial < 10; ++trial) {
    const Field E = acceptance::random_complex_field(grid, rng, 15);
    const Field u = acceptance::random_real_field(grid, rng, 15);
    const Field up = acceptance::random_real_field(grid, rng, 15);
    const ZakharovState s = init_state(E, u, up, Scheme::first_order, 0.01);
    const Field one = Field::from_function(grid, [](double) { return Complex(1.0); });
    const Field rhs = kI * s.F - product_physical(u - one, E);
    const Field rebuilt = apply_multiplier(rhs, {SymbolKind::inverse_helmholtz, 0.0});
    EXPECT_LE(sobolev_norm(rebuilt - E, 2.0), 1e-12 * sobolev_norm(E, 2.0));
  }
}

TEST(Example1, NormalizationAndVanishingMeans) {
  const auto grid = make_grid(2.0 * kPi, 1024);
  const FieldTriple d = example1_data(grid);
  EXPECT_NEAR(sobolev_norm(d.E, 2.0), 1.0, 1e-12);
  EXPECT_NEAR(sobolev_norm(d.u, 1.0), 1.0, 1e-12);
  EXPECT_NEAR(sobolev_norm(d.uprime, 0.0), 1.0, 1e-12);
  EXPECT_LE(std::abs(d.uprime[0]), 1e-12);
  // E vanishes at x = 0 (sin 2x factor in both parts).
  EXPECT_NEAR(std::abs(to_physical(d.E)[512]), 0.0, 1e-14);
  EXPECT_THROW(example1_data(make_grid(3.0, 64)), std::invalid_argument);
}

// Independent check of the mean of sin x / (2 - cos^2 2x): odd integrand.
TEST(Example1, VelocityMeanByDirectQuadrature) {
  const int N = 4096;
  double sum = 0.0;
  for (int j = 0; j < N; ++j) {
    const double x = -kPi + 2.0 * kPi * j / N;
    const double c2 = std::cos(2.0 * x);
    sum += std::sin(x) / (2.0 - c2 * c2);
  }
  EXPECT_LE(std::abs(sum / N), 1e-12);
}

TEST(Soliton, ProfileValues) {
  const auto grid = soliton_grid();
  const FieldTriple s = soliton_exact({}, grid, 0.0);
  const std::size_t centre = grid->modes() / 2;
  EXPECT_NEAR(grid->point(centre), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(s.E[centre]), 0.6991066, 1e-7);
  EXPECT_NEAR(std::abs(s.E[centre]), std::sqrt(0.48875), 1e-12);
  EXPECT_NEAR(s.u[centre].real(), -0.5, 1e-12);
  EXPECT_NEAR(std::abs(s.uprime[centre]), 0.0, 1e-14);
  // Moving centre lands on a grid point after 8 dx / C.
  const double t = 8.0 * grid->spacing() / 0.15;
  const FieldTriple later = soliton_exact({}, grid, t);
  EXPECT_NEAR(later.u[centre + 8].real(), -0.5, 1e-12);
  EXPECT_NEAR(std::abs(later.E[centre + 8]), std::sqrt(0.48875), 1e-12);
}

TEST(Soliton, RejectsSmallDomains) {
  EXPECT_THROW(soliton_exact({}, make_grid(10.0, 64), 0.0), DomainTooSmallError);
  // Centre too close to the boundary: |C t| >= L/2 - 5/B.
  EXPECT_THROW(soliton_exact({}, soliton_grid(), 150.0), DomainTooSmallError);
  EXPECT_NO_THROW(soliton_exact({}, soliton_grid(), 100.0));
}

// The exact solution satisfies the system: spectral Laplacian in space,
// central differences in time.
TEST(Soliton, PdeResidual) {
  const auto grid = soliton_grid();
  const double t = 0.7, dt = 1e-5;
  const FieldTriple now = soliton_exact({}, grid, t);
  const FieldTriple plus = soliton_exact({}, grid, t + dt);
  const FieldTriple minus = soliton_exact({}, grid, t - dt);
  const MultiplierSymbol lap{SymbolKind::laplacian, 0.0};

  const Field Et = (1.0 / (2.0 * dt)) * (to_physical(plus.E) - minus.E);
  const Field r1 = kI * Et + apply_multiplier(now.E, lap) - product_physical(now.u, now.E);
  EXPECT_LE(collocation_l2_norm(r1), 1e-6);

  const Field utt = (1.0 / (2.0 * dt)) * (to_physical(plus.uprime) - minus.uprime);
  const Field r2 = utt - apply_multiplier(now.u, lap) - apply_multiplier(modulus_squared(now.E), lap);
  EXPECT_LE(collocation_l2_norm(r2), 1e-6);

  const Field ut = (1.0 / (2.0 * dt)) * (to_physical(plus.u) - minus.u);
  EXPECT_LE(collocation_l2_norm(ut - now.uprime), 1e-6);
  EXPECT_LE(std::abs(to_spectral(now.uprime)[0]), 1e-12);
}

TEST(Hamiltonian, ReferenceValues) {
  const auto grid = make_grid(2.0 * kPi, 64);
  const Field z = Field::zeros(grid);
  EXPECT_EQ(hamiltonian(FieldTriple{z, z, z}).value, 0.0);
  const Field cosx = Field::from_function(grid, [](double x) { return Complex(std::cos(x)); });
  const HamiltonianValue h = hamiltonian(FieldTriple{z, cosx, z});
  EXPECT_NEAR(h.value, kPi / 2.0, 1e-13);
  EXPECT_FALSE(h.mean_zero_warning);
  // Kinetic part: E = e^{ix} gives int |E_x|^2 = 2 pi.
  const Field e1 = Field::from_function(grid, [](double x) { return std::polar(1.0, x); });
  EXPECT_NEAR(hamiltonian(FieldTriple{e1, z, z}).value, 2.0 * kPi, 1e-13);
  // u' = sin x contributes 1/2 int |sin x|^2 = pi / 2 through |grad|^-1.
  const Field sinx = Field::from_function(grid, [](double x) { return Complex(std::sin(x)); });
  EXPECT_NEAR(hamiltonian(FieldTriple{z, z, sinx}).value, kPi / 2.0, 1e-13);
}

TEST(Hamiltonian, FlagsNonzeroVelocityMean) {
  const auto grid = make_grid(2.0 * kPi, 64);
  const Field z = Field::zeros(grid);
  const Field c = Field::from_function(grid, [](double) { return Complex(1e-3); });
  EXPECT_TRUE(hamiltonian(FieldTriple{z, z, c}).mean_zero_warning);
  EXPECT_TRUE(diagnose(FieldTriple{z, z, c}).mean_zero_warning);
}

TEST(Hamiltonian, RejectsComplexPotential) {
  const auto grid = make_grid(2.0 * kPi, 64);
  const Field z = Field::zeros(grid);
  const Field bad = Field::from_function(grid, [](double x) { return Complex(1.0, 1.0) * (1.0 + std::cos(x)); });
  EXPECT_THROW(hamiltonian(FieldTriple{z, bad, z}), std::domain_error);
}

TEST(CompositeError, ReferenceValues) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const Field z = Field::zeros(grid);
  const Field e1 = Field::from_function(grid, [](double x) { return std::polar(1.0, x); });
  EXPECT_EQ(composite_error(FieldTriple{e1, z, z}, FieldTriple{e1, z, z}, 0.0), 0.0);
  EXPECT_NEAR(composite_error(FieldTriple{e1, z, z}, FieldTriple{z, z, z}, 0.0), std::sqrt(2.0 * kPi),
              1e-13);
}

TEST(CompositeError, MetricProperties) {
  std::mt19937_64 rng(77);
  const auto grid = make_grid(4.0, 64);
  auto random_triple = [&] {
    return FieldTriple{acceptance::random_complex_field(grid, rng, 12),
                       acceptance::random_real_field(grid, rng, 12),
                       acceptance::random_real_field(grid, rng, 12)};
  };
  for (int trial = 0; trial < 20; ++trial) {
    const FieldTriple a = random_triple(), b = random_triple(), c = random_triple();
    const double ab = composite_error(a, b, 0.0);
    EXPECT_NEAR(ab, composite_error(b, a, 0.0), 1e-12 * ab);
    EXPECT_LE(composite_error(a, c, 0.0), ab + composite_error(b, c, 0.0) + 1e-12);
  }
}

}  // namespace
}  // namespace zakharov
