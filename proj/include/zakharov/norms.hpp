#pragma once

#include "zakharov/field.hpp"

namespace zakharov {

enum class Dealiasing { none, two_thirds };

/// ||<grad>^s f||_{L^2}: sqrt(L (|fhat(0)|^2 + sum_{k != 0} |kappa_k|^{2s} |fhat(k)|^2)).
/// The zero mode enters unweighted for every real s, including negative s.
double sobolev_norm(const Field& f, double s);

/// sqrt(dx * sum_j |f(x_j)|^2).
double collocation_l2_norm(const Field& f);

/// Zeroes every mode with |k| > K/3. Result is spectral.
Field truncate_two_thirds(const Field& f);

/// Pointwise product on the collocation points. Result is physical.
Field product_physical(const Field& f, const Field& g, Dealiasing dealias = Dealiasing::none);

/// |f|^2 on the collocation points. Result is physical.
Field modulus_squared(const Field& f, Dealiasing dealias = Dealiasing::none);

}  // namespace zakharov
