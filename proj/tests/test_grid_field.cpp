#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "zakharov/acceptance.hpp"
#include "zakharov/errors.hpp"
#include "zakharov/field.hpp"
#include "zakharov/norms.hpp"

namespace zakharov {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(TorusGrid, CollocationPointsAndWavenumbers) {
  const TorusGrid grid(20.0 * kPi, 512);
  EXPECT_DOUBLE_EQ(grid.spacing(), 20.0 * kPi / 512);
  EXPECT_DOUBLE_EQ(grid.point(0), -10.0 * kPi);
  for (std::size_t j = 1; j < grid.modes(); ++j) {
    EXPECT_NEAR(grid.point(j) - grid.point(j - 1), grid.spacing(), 1e-12);
  }
  EXPECT_EQ(grid.wavenumber(0), 0.0);
  EXPECT_EQ(grid.signed_mode(255), 255);
  EXPECT_EQ(grid.signed_mode(256), -256);
  EXPECT_EQ(grid.signed_mode(511), -1);
  EXPECT_NEAR(grid.wavenumber(1), 0.1, 1e-15);
  EXPECT_NEAR(grid.max_wavenumber(), std::abs(grid.wavenumber(256)), 1e-12);
}

TEST(TorusGrid, RejectsInvalidGeometry) {
  EXPECT_THROW(TorusGrid(2.0 * kPi, 100), std::invalid_argument);
  EXPECT_THROW(TorusGrid(2.0 * kPi, 4), std::invalid_argument);
  EXPECT_THROW(TorusGrid(0.0, 64), std::invalid_argument);
  EXPECT_THROW(TorusGrid(-1.0, 64), std::invalid_argument);
  EXPECT_NO_THROW(TorusGrid(1.0, 8));
}

TEST(Transform, ConstantHasOnlyZeroMode) {
  const auto grid = make_grid(2.0 * kPi, 32);
  const Field f = to_spectral(Field::from_function(grid, [](double) { return Complex(1.0); }));
  EXPECT_NEAR(std::abs(f[0] - 1.0), 0.0, 1e-15);
  for (std::size_t k = 1; k < f.size(); ++k) EXPECT_NEAR(std::abs(f[k]), 0.0, 1e-15);
}

TEST(Transform, SingleModesLandOnTheirIndex) {
  const double L = 7.0;
  const auto grid = make_grid(L, 16);
  for (long m : {1L, -3L, 7L, -8L}) {
    const Field f = to_spectral(Field::from_function(
        grid, [&](double x) { return std::polar(1.0, 2.0 * kPi * m * x / L); }));
    for (std::size_t k = 0; k < f.size(); ++k) {
      const double expected = grid->signed_mode(k) == m ? 1.0 : 0.0;
      EXPECT_NEAR(std::abs(f[k] - expected), 0.0, 1e-14) << "mode " << m << " index " << k;
    }
  }
}

TEST(Transform, RoundTripAndParsevalOnRandomFields) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  for (std::size_t K : {8u, 64u, 1024u}) {
    const auto grid = make_grid(3.0, K);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Complex> v(K);
      for (auto& z : v) z = Complex(normal(rng), normal(rng));
      const Field f(grid, v, Representation::physical);
      const Field spec = to_spectral(f);
      const Field back = to_physical(spec);
      double err = 0.0, ref = 0.0, parseval = 0.0;
      for (std::size_t j = 0; j < K; ++j) {
        err = std::max(err, std::abs(back[j] - v[j]));
        ref = std::max(ref, std::abs(v[j]));
        parseval += std::norm(spec[j]);
      }
      EXPECT_LE(err, 1e-12 * ref);
      const double l2 = collocation_l2_norm(f);
      EXPECT_NEAR(grid->length() * parseval, l2 * l2, 1e-12 * l2 * l2);
    }
  }
}

TEST(Field, MixedRepresentationArithmetic) {
  const auto grid = make_grid(2.0 * kPi, 16);
  std::mt19937_64 rng(3);
  const Field a = acceptance::random_complex_field(grid, rng, 5);
  const Field b = to_spectral(acceptance::random_complex_field(grid, rng, 5));
  const Field sum = a + b;
  EXPECT_EQ(sum.representation(), Representation::physical);
  const Field b_phys = to_physical(b);
  for (std::size_t j = 0; j < sum.size(); ++j) {
    EXPECT_NEAR(std::abs(sum[j] - (a[j] + b_phys[j])), 0.0, 1e-14);
  }
  EXPECT_NEAR(std::abs(a.mean() - to_spectral(a)[0]), 0.0, 1e-15);
}

TEST(Field, GridMismatchIsRejected) {
  const Field a = Field::zeros(make_grid(1.0, 16));
  const Field b = Field::zeros(make_grid(2.0, 16));
  const Field c = Field::zeros(make_grid(1.0, 16));
  EXPECT_THROW(a + b, GridMismatchError);
  EXPECT_NO_THROW(a + c);
  EXPECT_THROW(Field(make_grid(1.0, 16), std::vector<Complex>(8), Representation::physical),
               GridMismatchError);
}

}  // namespace
}  // namespace zakharov
