#pragma once

#include <optional>
#include <vector>

#include "zakharov/model.hpp"

namespace zakharov {

struct StepOptions {
  Dealiasing dealias = Dealiasing::none;
  /// Drops every coupling term (u F, u' I_F, u I_F in the E reconstruction
  /// and the Laplacian |E|^2 wave source), leaving the free Schroedinger
  /// and free wave flows.
  bool disable_nonlinearity = false;
};

/// Per-mode multiplier tables for a fixed step size, in FFT order.
struct PropagatorSet {
  PropagatorSet(const TorusGrid& grid, double tau);

  double tau;
  double length;
  std::size_t modes;

  std::vector<Complex> free_schrodinger;   // exp(i tau Lap)
  std::vector<Complex> d1;                 // D1(tau Lap)
  std::vector<Complex> d2;                 // D2(tau Lap)
  std::vector<Complex> wave_cos;           // cos(tau |grad|)
  std::vector<Complex> wave_sin_over_abs;  // sin(tau |grad|) / |grad|
  std::vector<Complex> wave_abs_sin;       // |grad| sin(tau |grad|)
  std::vector<Complex> wave_one_minus_cos; // (1 - cos(tau |grad|)) / (tau |grad|)
  std::vector<Complex> wave_sinc;          // sin(tau |grad|) / (tau |grad|)
  std::vector<Complex> inverse_helmholtz;  // (1 - Lap)^-1
  std::vector<Complex> laplacian;          // -kappa^2

  // Source multipliers acting on |E|^2, with the |grad|^-1 factors cancelled.
  std::vector<Complex> first_u_source;     // -(1 - cos(tau kappa))
  std::vector<Complex> first_uprime_source;  // tau sinc(tau kappa) Lap
  std::vector<Complex> second_u_source;    // tau/2 sin(tau |grad|)/|grad| Lap

  bool matches(const TorusGrid& grid) const {
    return grid.length() == length && grid.modes() == modes;
  }
};

/// One step of the first order trigonometric scheme.
/// Throws SchemeMismatchError for a second order state or a different tau,
/// DivergenceError when a field becomes non-finite.
ZakharovState step_first_order(const ZakharovState& state, const PropagatorSet& P,
                               const StepOptions& options = {});

/// One step of the second order trigonometric scheme, evaluated in the order
/// F, u, I_F, E, u', S_F (u' needs E^{n+1}).
ZakharovState step_second_order(const ZakharovState& state, const PropagatorSet& P,
                                const StepOptions& options = {});

ZakharovState step(const ZakharovState& state, const PropagatorSet& P,
                   const StepOptions& options = {});

/// Largest step the RK4 oracle accepts on this grid: tau kappa_max^2 <= 2.5,
/// inside the RK4 stability interval |z| <= 2 sqrt(2) on the imaginary axis.
double rk4_max_stable_tau(const TorusGrid& grid);

/// Classical RK4 step of the method-of-lines system
///   E_t = i Lap E - i u E,  u_t = v,  v_t = Lap u + Lap |E|^2.
/// Throws StabilityError if tau_ref exceeds rk4_max_stable_tau.
FieldTriple step_rk4_oracle(const FieldTriple& state, double tau_ref,
                            const StepOptions& options = {}, std::size_t step_index = 0);

enum class Method { first_order, second_order, rk4 };

struct RunOptions {
  std::size_t sample_every = 1;
  /// Times at which full (E, u, u') snapshots are kept; each is matched to
  /// the nearest step.
  std::vector<double> snapshot_times;
  StepOptions step;
};

struct TrajectorySample {
  double t = 0.0;
  std::size_t n = 0;
  Diagnostics diagnostics;
  std::optional<FieldTriple> snapshot;
};

struct Trajectory {
  Method method;
  double tau = 0.0;
  std::size_t steps = 0;
  std::vector<TrajectorySample> samples;
  FieldTriple final_state;
};

/// Number of steps of size tau covering [0, T]; throws std::invalid_argument
/// unless tau divides T to within 1e-9 relative.
std::size_t step_count(double tau, double T);

/// Advances round(T / tau) steps, recording diagnostics every sample_every
/// steps and at the final step. Deterministic given its inputs.
Trajectory run(Method method, const FieldTriple& data, double tau, double T,
               const RunOptions& options = {});

}  // namespace zakharov
