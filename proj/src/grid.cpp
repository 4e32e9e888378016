#include "zakharov/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zakharov {

TorusGrid::TorusGrid(double length, std::size_t modes)
    : length_(length), modes_(modes) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("TorusGrid: length must be positive and finite");
  }
  if (modes < 8 || (modes & (modes - 1)) != 0) {
    throw std::invalid_argument("TorusGrid: mode count must be a power of two >= 8, got " +
                                std::to_string(modes));
  }
  wavenumbers_.resize(modes_);
  const double base = 2.0 * std::numbers::pi / length_;
  for (std::size_t j = 0; j < modes_; ++j) {
    wavenumbers_[j] = base * static_cast<double>(signed_mode(j));
  }
}

double TorusGrid::point(std::size_t j) const {
  return -0.5 * length_ + static_cast<double>(j) * spacing();
}

std::vector<double> TorusGrid::points() const {
  std::vector<double> x(modes_);
  for (std::size_t j = 0; j < modes_; ++j) x[j] = point(j);
  return x;
}

long TorusGrid::signed_mode(std::size_t index) const {
  const auto k = static_cast<long>(index);
  const auto half = static_cast<long>(modes_ / 2);
  return k < half ? k : k - static_cast<long>(modes_);
}

double TorusGrid::max_wavenumber() const {
  return std::numbers::pi * static_cast<double>(modes_) / length_;
}

}  // namespace zakharov
