#include "zakharov/integrators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zakharov/errors.hpp"
#include "zakharov/multiplier.hpp"

namespace zakharov {
namespace {

constexpr Complex kI{0.0, 1.0};

Field mul(const std::vector<Complex>& table, const Field& f) {
  return apply_multiplier(f, table);
}

Field spec(const Field& f) { return to_spectral(f); }
Field phys(const Field& f) { return to_physical(f); }

void check_compatible(const ZakharovState& state, const PropagatorSet& P, Scheme expected) {
  if (state.scheme != expected) {
    throw SchemeMismatchError("state was initialised for the other scheme");
  }
  if (state.tau != P.tau) {
    throw SchemeMismatchError("state step size " + std::to_string(state.tau) +
                              " differs from propagator step size " + std::to_string(P.tau));
  }
  if (!P.matches(state.E.grid())) {
    throw GridMismatchError("propagator set built for a different grid");
  }
}

void check_finite(const Field& f, const char* name, std::size_t step) {
  if (!f.all_finite()) throw DivergenceError(name, step);
}

void check_finite(const ZakharovState& s) {
  check_finite(s.F, "F", s.n);
  check_finite(s.u, "u", s.n);
  check_finite(s.uprime, "uprime", s.n);
  check_finite(s.S_F, "S_F", s.n);
  check_finite(s.I_F, "I_F", s.n);
  check_finite(s.E, "E", s.n);
}

// Pointwise product of physical fields, spectral result.
Field times(const Field& a, const Field& b, Dealiasing d) {
  return spec(product_physical(a, b, d));
}

}  // namespace

PropagatorSet::PropagatorSet(const TorusGrid& grid, double step)
    : tau(step), length(grid.length()), modes(grid.modes()) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("PropagatorSet: step size must be positive");
  }
  auto table = [&](SymbolKind kind) { return tabulate(grid, MultiplierSymbol{kind, tau}); };
  free_schrodinger = table(SymbolKind::free_schrodinger);
  d1 = table(SymbolKind::phi_d1);
  d2 = table(SymbolKind::phi_d2);
  wave_cos = table(SymbolKind::wave_cos);
  wave_sin_over_abs = table(SymbolKind::wave_sin_over_abs);
  wave_abs_sin = table(SymbolKind::wave_abs_sin);
  wave_one_minus_cos = table(SymbolKind::wave_one_minus_cos);
  wave_sinc = table(SymbolKind::wave_sinc);
  inverse_helmholtz = table(SymbolKind::inverse_helmholtz);
  laplacian = table(SymbolKind::laplacian);

  first_u_source.resize(modes);
  first_uprime_source.resize(modes);
  second_u_source.resize(modes);
  for (std::size_t k = 0; k < modes; ++k) {
    const double h = std::sin(0.5 * tau * std::abs(grid.wavenumber(k)));
    first_u_source[k] = -2.0 * h * h;
    first_uprime_source[k] = tau * wave_sinc[k] * laplacian[k];
    second_u_source[k] = 0.5 * tau * wave_sin_over_abs[k] * laplacian[k];
  }
}

ZakharovState step_first_order(const ZakharovState& s, const PropagatorSet& P,
                               const StepOptions& options) {
  check_compatible(s, P, Scheme::first_order);
  const double tau = P.tau;
  const Dealiasing d = options.dealias;
  const bool coupled = !options.disable_nonlinearity;
  const auto grid = s.E.grid_ptr();

  const Field uP = phys(s.u);
  const Field upP = phys(s.uprime);

  Field F = mul(P.free_schrodinger, s.F);
  Field source = Field::zeros(grid);
  if (coupled) {
    const Field FP = phys(s.F);
    const Field N = times(uP, FP, d) + times(upP, phys(s.S_F), d);
    F += (kI * tau) * mul(P.d1, N);
    source = spec(modulus_squared(s.E, d));
  }

  const Field u = mul(P.wave_cos, s.u) + mul(P.wave_sin_over_abs, s.uprime) +
                  mul(P.first_u_source, source);
  const Field up = mul(P.wave_cos, s.uprime) - mul(P.wave_abs_sin, s.u) +
                   mul(P.first_uprime_source, source);
  const Field S = s.S_F + tau * F;

  Field rhs = kI * F;
  if (coupled) {
    const Field one(grid, std::vector<Complex>(grid->modes(), 1.0), Representation::physical);
    rhs -= times(phys(u) - one, phys(S), d);
  } else {
    rhs += S;
  }
  const Field E = mul(P.inverse_helmholtz, rhs);

  ZakharovState next{s.scheme, tau, E, u, up, F, S, s.I_F, s.E0, s.n + 1};
  check_finite(next);
  return next;
}

ZakharovState step_second_order(const ZakharovState& s, const PropagatorSet& P,
                                const StepOptions& options) {
  check_compatible(s, P, Scheme::second_order);
  const double tau = P.tau;
  const Dealiasing d = options.dealias;
  const bool coupled = !options.disable_nonlinearity;
  const auto grid = s.E.grid_ptr();
  const Field one(grid, std::vector<Complex>(grid->modes(), 1.0), Representation::physical);

  // (1) F
  Field F = mul(P.free_schrodinger, s.F);
  Field source = Field::zeros(grid);
  Field uP = Field::zeros(grid, Representation::physical);
  Field upP = uP;
  Field FP = uP;
  if (coupled) {
    uP = phys(s.u);
    upP = phys(s.uprime);
    FP = phys(s.F);
    const Field IP = phys(s.I_F);
    source = spec(modulus_squared(s.E, d));

    const Field uF = times(uP, FP, d);
    const Field upI = times(upP, IP, d);
    const Field G0 = uF + upI;

    // Time derivative of u F + u' I_F with F' and u'' taken from the equations.
    const Field dF = phys(mul(P.laplacian, s.F));
    const Field dW = phys(mul(P.laplacian, s.u + source));
    const Field inner = spec(dF) - uF - upI;
    const Field G1 = 2.0 * times(upP, FP, d) + kI * times(uP, phys(inner), d) +
                     times(IP, dW, d);
    F += (kI * tau) * mul(P.d1, G0) + tau * mul(P.d2, G1);
  }

  // (2) u
  const Field u = mul(P.wave_cos, s.u) + mul(P.wave_sin_over_abs, s.uprime) +
                  mul(P.second_u_source, source);

  // (3) I_F, running form
  Field I = s.I_F - tau * mul(P.d1, s.F);
  if (coupled) {
    const Field N = times(uP, FP, d) + times(upP, phys(s.E0 + s.S_F), d);
    I += tau * mul(P.d2, N);
  }

  // (4) E
  Field rhs = kI * F;
  if (coupled) {
    rhs -= times(phys(u) - one, phys(I), d);
  } else {
    rhs += I;
  }
  const Field E = mul(P.inverse_helmholtz, rhs);

  // (5) u', trapezoidal source uses E^{n+1}
  Field up = mul(P.wave_cos, s.uprime) - mul(P.wave_abs_sin, s.u);
  if (coupled) {
    const Field next_source = spec(modulus_squared(E, d));
    up += (0.5 * tau) * (mul(P.laplacian, next_source) +
                         mul(P.wave_cos, mul(P.laplacian, source)));
  }

  // (6) S_F
  const Field S = s.S_F + tau * F;

  ZakharovState next{s.scheme, tau, E, u, up, F, S, I, s.E0, s.n + 1};
  check_finite(next);
  return next;
}

ZakharovState step(const ZakharovState& state, const PropagatorSet& P,
                   const StepOptions& options) {
  return state.scheme == Scheme::first_order ? step_first_order(state, P, options)
                                             : step_second_order(state, P, options);
}

double rk4_max_stable_tau(const TorusGrid& grid) {
  const double kmax = grid.max_wavenumber();
  return 2.5 / (kmax * kmax);
}

FieldTriple step_rk4_oracle(const FieldTriple& state, double tau_ref, const StepOptions& options,
                            std::size_t step_index) {
  const auto& grid = state.E.grid();
  const double limit = rk4_max_stable_tau(grid);
  if (!(tau_ref > 0.0) || tau_ref > limit) {
    throw StabilityError("rk4 oracle: tau_ref = " + std::to_string(tau_ref) +
                             " outside the stability bound; use tau_ref <= " +
                             std::to_string(limit),
                         limit);
  }
  const auto lap = tabulate(grid, MultiplierSymbol{SymbolKind::laplacian});
  const Dealiasing d = options.dealias;
  const bool coupled = !options.disable_nonlinearity;

  auto rhs = [&](const FieldTriple& y) {
    Field dE = kI * mul(lap, y.E);
    Field dv = mul(lap, y.u);
    if (coupled) {
      dE -= kI * times(phys(y.u), phys(y.E), d);
      dv += mul(lap, spec(modulus_squared(y.E, d)));
    }
    return FieldTriple{dE, spec(y.uprime), dv};
  };
  auto axpy = [](const FieldTriple& y, double h, const FieldTriple& k) {
    return FieldTriple{y.E + h * k.E, y.u + h * k.u, y.uprime + h * k.uprime};
  };

  const FieldTriple y{spec(state.E), spec(state.u), spec(state.uprime)};
  const FieldTriple k1 = rhs(y);
  const FieldTriple k2 = rhs(axpy(y, 0.5 * tau_ref, k1));
  const FieldTriple k3 = rhs(axpy(y, 0.5 * tau_ref, k2));
  const FieldTriple k4 = rhs(axpy(y, tau_ref, k3));
  const double w = tau_ref / 6.0;
  FieldTriple next{y.E + w * (k1.E + 2.0 * k2.E + 2.0 * k3.E + k4.E),
                   y.u + w * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
                   y.uprime + w * (k1.uprime + 2.0 * k2.uprime + 2.0 * k3.uprime + k4.uprime)};
  check_finite(next.E, "E", step_index);
  check_finite(next.u, "u", step_index);
  check_finite(next.uprime, "uprime", step_index);
  return next;
}

std::size_t step_count(double tau, double T) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("step size must be positive");
  }
  if (!(T >= 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("final time must be non-negative");
  }
  const double steps = std::round(T / tau);
  if (std::abs(steps * tau - T) > 1e-9 * std::max(1.0, T)) {
    throw std::invalid_argument("step size " + std::to_string(tau) +
                                " does not divide final time " + std::to_string(T));
  }
  return static_cast<std::size_t>(steps);
}

Trajectory run(Method method, const FieldTriple& data, double tau, double T,
               const RunOptions& options) {
  if (options.sample_every == 0) throw std::invalid_argument("sample_every must be >= 1");
  const std::size_t steps = step_count(tau, T);

  std::vector<std::size_t> snapshot_steps;
  for (double ts : options.snapshot_times) {
    snapshot_steps.push_back(static_cast<std::size_t>(std::llround(std::max(0.0, ts) / tau)));
  }
  auto wants_snapshot = [&](std::size_t n) {
    for (auto k : snapshot_steps) {
      if (k == n) return true;
    }
    return false;
  };

  Trajectory out{method, tau, steps, {}, data};
  auto record = [&](const FieldTriple& s, std::size_t n) {
    Diagnostics d;
    try {
      d = diagnose(s);
    } catch (const std::domain_error&) {
      // Real data that turns complex along the way has blown up.
      if (n == 0) throw;
      throw DivergenceError("u", n, "non-real");
    }
    TrajectorySample sample{static_cast<double>(n) * tau, n, d, std::nullopt};
    if (wants_snapshot(n)) sample.snapshot = s;
    out.samples.push_back(std::move(sample));
  };
  auto due = [&](std::size_t n) {
    return n % options.sample_every == 0 || n == steps || wants_snapshot(n);
  };

  if (method == Method::rk4) {
    FieldTriple s{to_spectral(data.E), to_spectral(data.u), to_spectral(data.uprime)};
    record(s, 0);
    for (std::size_t n = 1; n <= steps; ++n) {
      s = step_rk4_oracle(s, tau, options.step, n);
      if (due(n)) record(s, n);
    }
    out.final_state = s;
    return out;
  }

  const Scheme scheme = method == Method::first_order ? Scheme::first_order
                                                      : Scheme::second_order;
  const PropagatorSet P(data.E.grid(), tau);
  ZakharovState s = init_state(data, scheme, tau, options.step.dealias);
  record(s.triple(), 0);
  for (std::size_t n = 1; n <= steps; ++n) {
    s = step(s, P, options.step);
    if (due(n)) record(s.triple(), n);
  }
  out.final_state = s.triple();
  return out;
}

}  // namespace zakharov
