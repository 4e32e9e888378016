#pragma once

#include <span>
#include <vector>

#include "zakharov/field.hpp"

namespace zakharov {

/// Fourier-multiplier symbols m(kappa). Operators are written in terms of
/// |grad| = sqrt(-Laplacian), so the Laplacian symbol is -kappa^2.
enum class SymbolKind {
  abs_grad,            // |kappa|
  bracket_power,       // <grad>^s: |kappa|^s, 1 at kappa = 0
  inverse_abs_grad,    // |kappa|^-1, 0 at kappa = 0
  laplacian,           // -kappa^2
  free_schrodinger,    // exp(i tau Laplacian) = exp(-i tau kappa^2)
  inverse_helmholtz,   // (1 - Laplacian)^-1
  wave_cos,            // cos(tau |kappa|)
  wave_sin_over_abs,   // sin(tau |kappa|) / |kappa|, tau at 0
  wave_abs_sin,        // |kappa| sin(tau |kappa|)
  wave_one_minus_cos,  // (1 - cos(tau |kappa|)) / (tau |kappa|), 0 at 0
  wave_sinc,           // sin(tau |kappa|) / (tau |kappa|), 1 at 0
  phi_d1,              // D1 = (1 - exp(i tau Lap)) / (i tau Lap), -1 at 0
  phi_d2,              // D2 = Lap^-1 (1 + D1), -i tau / 2 at 0
};

struct MultiplierSymbol {
  SymbolKind kind;
  double tau = 0.0;
  double s = 0.0;
};

/// Below this value of |tau kappa| (trigonometric symbols) or
/// |tau kappa^2| (D1, D2) the symbols are evaluated by truncated series.
inline constexpr double kSeriesThreshold = 1e-4;

Complex evaluate_symbol(const MultiplierSymbol& m, double kappa);

/// m(kappa_k) for every mode of the grid, in FFT order.
std::vector<Complex> tabulate(const TorusGrid& grid, const MultiplierSymbol& m);

/// Pointwise multiplication of the spectral coefficients. Result is spectral.
Field apply_multiplier(const Field& f, const MultiplierSymbol& m);
Field apply_multiplier(const Field& f, std::span<const Complex> per_mode);

}  // namespace zakharov
