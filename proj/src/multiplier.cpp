#include "zakharov/multiplier.hpp"

#include <cmath>
#include <stdexcept>

namespace zakharov {
namespace {

constexpr Complex kI{0.0, 1.0};

// sin(x)/x
double sinc(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(x) / x;
}

// (1 - cos x)/x, written as 2 sin^2(x/2)/x to avoid cancellation.
double one_minus_cos_over(double x) {
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return x / 2.0 - x * x2 / 24.0 + x * x2 * x2 / 720.0 - x * x2 * x2 * x2 / 40320.0;
  }
  const double h = std::sin(0.5 * x);
  return 2.0 * h * h / x;
}

// D1 and D2 in terms of y = tau kappa^2, where i tau Lap = -i y.
Complex phi_d1(double y) {
  if (std::abs(y) < kSeriesThreshold) {
    const Complex z = -kI * y;
    return -(1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0);
  }
  const double h = std::sin(0.5 * y);
  return Complex(-std::sin(y), 2.0 * h * h) / y;
}

Complex phi_d2(double y, double tau) {
  if (std::abs(y) < kSeriesThreshold) {
    const Complex z = -kI * y;
    return -kI * tau * (0.5 + z / 6.0 + z * z / 24.0 + z * z * z / 120.0);
  }
  const double h = std::sin(0.5 * y);
  return -tau * Complex(y - std::sin(y), 2.0 * h * h) / (y * y);
}

}  // namespace

Complex evaluate_symbol(const MultiplierSymbol& m, double kappa) {
  const double a = std::abs(kappa);
  const double k2 = kappa * kappa;
  const double tau = m.tau;
  switch (m.kind) {
    case SymbolKind::abs_grad:
      return a;
    case SymbolKind::bracket_power:
      return a == 0.0 ? 1.0 : std::pow(a, m.s);
    case SymbolKind::inverse_abs_grad:
      return a == 0.0 ? 0.0 : 1.0 / a;
    case SymbolKind::laplacian:
      return -k2;
    case SymbolKind::free_schrodinger:
      return std::polar(1.0, -tau * k2);
    case SymbolKind::inverse_helmholtz:
      return 1.0 / (1.0 + k2);
    case SymbolKind::wave_cos:
      return std::cos(tau * a);
    case SymbolKind::wave_sin_over_abs:
      return tau * sinc(tau * a);
    case SymbolKind::wave_abs_sin:
      return a * std::sin(tau * a);
    case SymbolKind::wave_one_minus_cos:
      return one_minus_cos_over(tau * a);
    case SymbolKind::wave_sinc:
      return sinc(tau * a);
    case SymbolKind::phi_d1:
      return phi_d1(tau * k2);
    case SymbolKind::phi_d2:
      return phi_d2(tau * k2, tau);
  }
  throw std::invalid_argument("evaluate_symbol: unknown symbol");
}

std::vector<Complex> tabulate(const TorusGrid& grid, const MultiplierSymbol& m) {
  std::vector<Complex> out(grid.modes());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = evaluate_symbol(m, grid.wavenumber(k));
  return out;
}

Field apply_multiplier(const Field& f, std::span<const Complex> per_mode) {
  if (per_mode.size() != f.size()) {
    throw std::invalid_argument("apply_multiplier: symbol table size mismatch");
  }
  std::vector<Complex> out(f.size());
  if (f.is_spectral()) {
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = per_mode[k] * f[k];
  } else {
    const Field spec = to_spectral(f);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = per_mode[k] * spec[k];
  }
  return Field(f.grid_ptr(), std::move(out), Representation::spectral);
}

Field apply_multiplier(const Field& f, const MultiplierSymbol& m) {
  return apply_multiplier(f, tabulate(f.grid(), m));
}

}  // namespace zakharov
