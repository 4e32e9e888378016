#include "zakharov/norms.hpp"

#include <cmath>

namespace zakharov {

double sobolev_norm(const Field& f, double s) {
  const Field spec = to_spectral(f);
  const auto& grid = spec.grid();
  double sum = std::norm(spec[0]);
  for (std::size_t k = 1; k < spec.size(); ++k) {
    const double a = std::abs(grid.wavenumber(k));
    sum += std::pow(a, 2.0 * s) * std::norm(spec[k]);
  }
  return std::sqrt(grid.length() * sum);
}

double collocation_l2_norm(const Field& f) {
  const Field phys = to_physical(f);
  double sum = 0.0;
  for (auto v : phys.values()) sum += std::norm(v);
  return std::sqrt(phys.grid().spacing() * sum);
}

Field truncate_two_thirds(const Field& f) {
  const Field spec = to_spectral(f);
  std::vector<Complex> out(spec.values().begin(), spec.values().end());
  const auto cutoff = static_cast<long>(spec.size() / 3);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (std::abs(spec.grid().signed_mode(k)) > cutoff) out[k] = 0.0;
  }
  return Field(spec.grid_ptr(), std::move(out), Representation::spectral);
}

Field product_physical(const Field& f, const Field& g, Dealiasing dealias) {
  require_same_grid(f, g);
  // With the 2/3 rule both factors are truncated first, so every alias of the
  // product lands in the discarded band.
  const bool cut = dealias == Dealiasing::two_thirds;
  const Field a = to_physical(cut ? truncate_two_thirds(f) : f);
  const Field b = to_physical(cut ? truncate_two_thirds(g) : g);
  std::vector<Complex> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a[j] * b[j];
  Field product(a.grid_ptr(), std::move(out), Representation::physical);
  if (dealias == Dealiasing::two_thirds) return to_physical(truncate_two_thirds(product));
  return product;
}

Field modulus_squared(const Field& f, Dealiasing dealias) {
  const Field a = to_physical(dealias == Dealiasing::two_thirds ? truncate_two_thirds(f) : f);
  std::vector<Complex> out(a.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::norm(a[j]);
  Field product(a.grid_ptr(), std::move(out), Representation::physical);
  if (dealias == Dealiasing::two_thirds) return to_physical(truncate_two_thirds(product));
  return product;
}

}  // namespace zakharov
