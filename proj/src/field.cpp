#include "zakharov/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zakharov/errors.hpp"

namespace zakharov {

Field::Field(GridPtr grid, std::vector<Complex> values, Representation rep)
    : grid_(std::move(grid)), values_(std::move(values)), rep_(rep) {
  if (!grid_) throw std::invalid_argument("Field: null grid");
  if (values_.size() != grid_->modes()) {
    throw GridMismatchError("Field: value count does not match grid mode count");
  }
}

Field Field::zeros(GridPtr grid, Representation rep) {
  const std::size_t n = grid->modes();
  return Field(std::move(grid), std::vector<Complex>(n), rep);
}

Field Field::from_function(GridPtr grid, const std::function<Complex(double)>& f) {
  std::vector<Complex> values(grid->modes());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = f(grid->point(j));
  return Field(std::move(grid), std::move(values), Representation::physical);
}

Field Field::to(Representation rep) const {
  if (rep == rep_) return *this;
  std::vector<Complex> out(values_.size());
  if (rep == Representation::spectral) {
    fft::forward(values_, out);
  } else {
    fft::backward(values_, out);
  }
  return Field(grid_, std::move(out), rep);
}

Complex Field::mean() const {
  if (is_spectral()) return values_[0];
  Complex sum = 0.0;
  for (auto v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

double Field::max_abs_imag() const {
  const Field p = to(Representation::physical);
  double m = 0.0;
  for (auto v : p.values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

bool Field::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

Field& Field::operator+=(const Field& other) {
  require_same_grid(*this, other);
  if (other.rep_ == rep_) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
  }
  const Field rhs = other.to(rep_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(*this, other);
  if (other.rep_ == rep_) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
  }
  const Field rhs = other.to(rep_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
  return *this;
}

Field& Field::operator*=(Complex scale) {
  for (auto& v : values_) v *= scale;
  return *this;
}

Field to_spectral(const Field& f) { return f.to(Representation::spectral); }
Field to_physical(const Field& f) { return f.to(Representation::physical); }

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(Complex scale, Field f) { return f *= scale; }

void require_same_grid(const Field& a, const Field& b) {
  if (a.grid_ptr() != b.grid_ptr() && !(a.grid() == b.grid())) {
    throw GridMismatchError("fields live on different grids");
  }
}

}  // namespace zakharov
