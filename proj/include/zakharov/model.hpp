#pragma once

#include <cstddef>

#include "zakharov/field.hpp"
#include "zakharov/norms.hpp"

namespace zakharov {

enum class Scheme { first_order, second_order };

/// (E, u, u') at one instant.
struct FieldTriple {
  Field E;
  Field u;
  Field uprime;
};

/// Everything the trigonometric schemes carry from step to step.
///
/// F approximates dE/dt. S_F is the running sum tau * sum_k F^k; the first
/// order scheme seeds it with E0 + tau F^0, the second order scheme with
/// tau F^0. I_F is the second order scheme's approximation of
/// E0 + int_0^t F and stays equal to E0 for the first order scheme.
/// All fields are stored in spectral representation.
struct ZakharovState {
  Scheme scheme;
  double tau;
  Field E;
  Field u;
  Field uprime;
  Field F;
  Field S_F;
  Field I_F;
  Field E0;
  std::size_t n = 0;

  double t() const { return static_cast<double>(n) * tau; }
  FieldTriple triple() const { return {E, u, uprime}; }
};

ZakharovState init_state(const Field& E0, const Field& u0, const Field& u1, Scheme scheme,
                         double tau, Dealiasing dealias = Dealiasing::none);

inline ZakharovState init_state(const FieldTriple& data, Scheme scheme, double tau,
                                Dealiasing dealias = Dealiasing::none) {
  return init_state(data.E, data.u, data.uprime, scheme, tau, dealias);
}

/// Smooth periodic initial data on [-pi, pi), each component divided by its
/// own norm: E by ||.||_2, u by ||.||_1, u' by ||.||_0.
FieldTriple example1_data(const GridPtr& grid);

struct SolitonParams {
  double B = 0.5;
  double C = 0.15;
};

/// Travelling solitary wave, periodized over the torus by summing the images
/// x + mL. Throws DomainTooSmallError unless B L / 2 >= 15 and the centre
/// C t stays 5/B away from the boundary.
FieldTriple soliton_exact(const SolitonParams& p, const GridPtr& grid, double t);

struct HamiltonianValue {
  double value = 0.0;
  double imag_residue = 0.0;
  /// Set when |mean(u')| > 1e-8, where the energy is no longer conserved.
  bool mean_zero_warning = false;
};

/// int |grad E|^2 + u |E|^2 + 1/2 ||grad|^-1 u'|^2 + 1/2 u^2 dx.
/// Throws std::domain_error when the imaginary residue exceeds 1e-10.
HamiltonianValue hamiltonian(const FieldTriple& state);
inline HamiltonianValue hamiltonian(const ZakharovState& state) {
  return hamiltonian(state.triple());
}

struct Diagnostics {
  double l2_E = 0.0;
  double hamiltonian = 0.0;
  double mean_u = 0.0;
  double mean_uprime = 0.0;
  bool mean_zero_warning = false;
};

Diagnostics diagnose(const FieldTriple& state);

double l2_norm_E(const FieldTriple& state);
inline double l2_norm_E(const ZakharovState& state) { return l2_norm_E(state.triple()); }

struct ComponentErrors {
  double E = 0.0;       // ||E_a - E_b||_{s+2}
  double u = 0.0;       // ||u_a - u_b||_{s+1}
  double uprime = 0.0;  // ||u'_a - u'_b||_s
  double composite() const { return E + u + uprime; }
};

ComponentErrors component_errors(const FieldTriple& a, const FieldTriple& b, double s);

/// ||E_a - E_b||_{s+2} + ||u_a - u_b||_{s+1} + ||u'_a - u'_b||_s.
inline double composite_error(const FieldTriple& a, const FieldTriple& b, double s) {
  return component_errors(a, b, s).composite();
}

}  // namespace zakharov
