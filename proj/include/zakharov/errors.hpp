#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zakharov {

class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SchemeMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainTooSmallError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the RK4 oracle when the requested step lies outside its
/// stability interval for the grid's stiffest mode.
class StabilityError : public std::invalid_argument {
 public:
  StabilityError(const std::string& what, double suggested_tau)
      : std::invalid_argument(what), suggested_tau_(suggested_tau) {}
  double suggested_tau() const { return suggested_tau_; }

 private:
  double suggested_tau_;
};

/// A non-finite value appeared in `field` while producing step `step`.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::string field, std::size_t step, const std::string& what = "non-finite")
      : std::runtime_error("numerical divergence: " + what + " " + field + " at step " +
                           std::to_string(step)),
        field_(std::move(field)),
        step_(step) {}
  const std::string& field() const { return field_; }
  std::size_t step() const { return step_; }

 private:
  std::string field_;
  std::size_t step_;
};

}  // namespace zakharov

namespace zakharov {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two independent reference solutions of a convergence study disagree.
class ReferenceDisagreementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zakharov
