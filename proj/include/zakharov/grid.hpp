#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace zakharov {

/// Uniform collocation grid on the 1-D torus [-L/2, L/2).
///
/// Spectral arrays are stored in FFT order: index j holds the signed mode
/// j for j < K/2 and j - K otherwise, so index 0 is always the zero mode.
class TorusGrid {
 public:
  /// Throws std::invalid_argument unless L > 0 and K is a power of two >= 8.
  TorusGrid(double length, std::size_t modes);

  double length() const { return length_; }
  std::size_t modes() const { return modes_; }
  double spacing() const { return length_ / static_cast<double>(modes_); }

  double point(std::size_t j) const;
  std::vector<double> points() const;

  long signed_mode(std::size_t index) const;
  double wavenumber(std::size_t index) const { return wavenumbers_[index]; }
  const std::vector<double>& wavenumbers() const { return wavenumbers_; }
  /// Largest |kappa| represented on the grid (the Nyquist mode).
  double max_wavenumber() const;

  bool operator==(const TorusGrid& other) const {
    return length_ == other.length_ && modes_ == other.modes_;
  }

 private:
  double length_;
  std::size_t modes_;
  std::vector<double> wavenumbers_;
};

using GridPtr = std::shared_ptr<const TorusGrid>;

inline GridPtr make_grid(double length, std::size_t modes) {
  return std::make_shared<const TorusGrid>(length, modes);
}

}  // namespace zakharov
