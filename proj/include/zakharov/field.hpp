#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "zakharov/grid.hpp"

namespace zakharov {

using Complex = std::complex<double>;

enum class Representation { physical, spectral };

/// Complex samples of a function on a TorusGrid, tagged with the
/// representation they are stored in.
///
/// Spectral coefficients follow f(x_j) = sum_k fhat(k) exp(i kappa_k x_j), so
/// fhat(0) is the mean and L * sum |fhat|^2 is the collocation L^2 integral.
/// Linear combinations convert the right operand to the left operand's
/// representation.
class Field {
 public:
  Field(GridPtr grid, std::vector<Complex> values, Representation rep);

  static Field zeros(GridPtr grid, Representation rep = Representation::spectral);
  static Field from_function(GridPtr grid, const std::function<Complex(double)>& f);

  const TorusGrid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Representation representation() const { return rep_; }
  bool is_spectral() const { return rep_ == Representation::spectral; }

  std::size_t size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  Complex operator[](std::size_t i) const { return values_[i]; }

  Field to(Representation rep) const;

  /// Zero-mode coefficient, i.e. the spatial mean.
  Complex mean() const;
  /// max_j |Im f(x_j)| on the collocation points.
  double max_abs_imag() const;
  bool all_finite() const;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(Complex scale);

 private:
  GridPtr grid_;
  std::vector<Complex> values_;
  Representation rep_;
};

Field to_spectral(const Field& f);
Field to_physical(const Field& f);

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(Complex scale, Field f);

/// Throws GridMismatchError unless both fields live on equal grids.
void require_same_grid(const Field& a, const Field& b);

namespace fft {
// Raw transforms with the series convention above; spans must have length K
// and must not overlap.
void forward(std::span<const Complex> physical, std::span<Complex> spectral);
void backward(std::span<const Complex> spectral, std::span<Complex> physical);
}  // namespace fft

}  // namespace zakharov
