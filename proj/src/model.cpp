#include "zakharov/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "zakharov/errors.hpp"
#include "zakharov/multiplier.hpp"

namespace zakharov {
namespace {

constexpr Complex kI{0.0, 1.0};

Field laplacian(const Field& f) {
  return apply_multiplier(f, MultiplierSymbol{SymbolKind::laplacian});
}

}  // namespace

ZakharovState init_state(const Field& E0, const Field& u0, const Field& u1, Scheme scheme,
                         double tau, Dealiasing dealias) {
  require_same_grid(E0, u0);
  require_same_grid(E0, u1);
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("init_state: step size must be positive");
  }
  const Field E = to_spectral(E0);
  const Field F = kI * (laplacian(E) - to_spectral(product_physical(u0, E0, dealias)));
  Field S_F = tau * F;
  if (scheme == Scheme::first_order) S_F += E;
  return ZakharovState{scheme, tau, E, to_spectral(u0), to_spectral(u1), F, S_F, E, E, 0};
}

FieldTriple example1_data(const GridPtr& grid) {
  if (std::abs(grid->length() - 2.0 * std::numbers::pi) > 1e-12) {
    throw std::invalid_argument("example1_data: requires a torus of length 2*pi");
  }
  Field E = Field::from_function(grid, [](double x) {
    const double s2 = std::sin(2.0 * x);
    return Complex(s2 * std::cos(4.0 * x) / (2.0 - std::cos(x) * s2), s2 * std::cos(x));
  });
  Field u = Field::from_function(grid, [](double x) {
    const double s2 = std::sin(2.0 * x);
    return Complex(std::sin(x) * std::cos(2.0 * x) / (2.0 - s2 * s2));
  });
  Field up = Field::from_function(grid, [](double x) {
    const double c2 = std::cos(2.0 * x);
    return Complex(std::sin(x) / (2.0 - c2 * c2));
  });
  E *= 1.0 / sobolev_norm(E, 2.0);
  u *= 1.0 / sobolev_norm(u, 1.0);
  up *= 1.0 / sobolev_norm(up, 0.0);
  return {to_spectral(E), to_spectral(u), to_spectral(up)};
}

FieldTriple soliton_exact(const SolitonParams& p, const GridPtr& grid, double t) {
  const double B = p.B;
  const double C = p.C;
  const double L = grid->length();
  if (!(B > 0.0) || !(std::abs(C) < 1.0)) {
    throw std::invalid_argument("soliton_exact: need B > 0 and |C| < 1");
  }
  if (B * L / 2.0 < 15.0) {
    throw DomainTooSmallError("soliton_exact: B*L/2 = " + std::to_string(B * L / 2.0) +
                              " < 15, sech tail not resolved");
  }
  const double centre = C * t;
  if (std::abs(centre) >= L / 2.0 - 5.0 / B) {
    throw DomainTooSmallError("soliton_exact: centre " + std::to_string(centre) +
                              " within 5/B of the boundary");
  }
  const double amplitude = std::sqrt(2.0 * B * B * (1.0 - C * C));
  const double frequency = C * C / 4.0 - B * B;
  const std::size_t K = grid->modes();
  std::vector<Complex> E(K), u(K), up(K);
  for (std::size_t j = 0; j < K; ++j) {
    for (int m = -2; m <= 2; ++m) {
      const double x = grid->point(j) + m * L;
      const double a = B * (x - centre);
      const double sech = 1.0 / std::cosh(a);
      E[j] += amplitude * sech * std::polar(1.0, C / 2.0 * x - frequency * t);
      u[j] += -2.0 * B * B * sech * sech;
      up[j] += -4.0 * B * B * B * C * std::tanh(a) * sech * sech;
    }
  }
  return {Field(grid, std::move(E), Representation::physical),
          Field(grid, std::move(u), Representation::physical),
          Field(grid, std::move(up), Representation::physical)};
}

HamiltonianValue hamiltonian(const FieldTriple& state) {
  require_same_grid(state.E, state.u);
  require_same_grid(state.E, state.uprime);
  const auto& grid = state.E.grid();
  const double L = grid.length();
  const double dx = grid.spacing();

  const Field Ehat = to_spectral(state.E);
  const Field uphat = to_spectral(state.uprime);
  double gradient = 0.0;
  double inverse_wave = 0.0;
  for (std::size_t k = 1; k < Ehat.size(); ++k) {
    const double k2 = grid.wavenumber(k) * grid.wavenumber(k);
    gradient += k2 * std::norm(Ehat[k]);
    inverse_wave += std::norm(uphat[k]) / k2;
  }

  const Field E = to_physical(state.E);
  const Field u = to_physical(state.u);
  Complex coupling = 0.0;
  Complex potential = 0.0;
  for (std::size_t j = 0; j < E.size(); ++j) {
    coupling += u[j] * std::norm(E[j]);
    potential += u[j] * u[j];
  }
  const Complex collocation = dx * (coupling + 0.5 * potential);

  HamiltonianValue h;
  h.value = L * gradient + 0.5 * L * inverse_wave + collocation.real();
  h.imag_residue = std::abs(collocation.imag());
  h.mean_zero_warning = std::abs(uphat[0]) > 1e-8;
  if (h.imag_residue > 1e-10) {
    throw std::domain_error("hamiltonian: imaginary residue " + std::to_string(h.imag_residue) +
                            " exceeds 1e-10, u is not real");
  }
  return h;
}

Diagnostics diagnose(const FieldTriple& state) {
  const HamiltonianValue h = hamiltonian(state);
  return Diagnostics{l2_norm_E(state), h.value, state.u.mean().real(),
                     state.uprime.mean().real(), h.mean_zero_warning};
}

double l2_norm_E(const FieldTriple& state) { return sobolev_norm(state.E, 0.0); }

ComponentErrors component_errors(const FieldTriple& a, const FieldTriple& b, double s) {
  require_same_grid(a.E, b.E);
  return ComponentErrors{sobolev_norm(a.E - b.E, s + 2.0), sobolev_norm(a.u - b.u, s + 1.0),
                         sobolev_norm(a.uprime - b.uprime, s)};
}

}  // namespace zakharov
