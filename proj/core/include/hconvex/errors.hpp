#pragma once

#include <stdexcept>
#include <string>

namespace hconvex {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value or argument violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Closed-form coefficient evaluation hit an invalid argument (log of a
/// non-positive number, degenerate pair, forbidden exponent).
class CoefficientError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  enum class Kind { tolerance_not_reached, non_finite_integrand };

  QuadratureError(Kind kind, const std::string& what, double best_estimate,
                  double abscissa)
      : Error(what), kind_(kind), best_estimate_(best_estimate),
        abscissa_(abscissa) {}

  Kind kind() const noexcept { return kind_; }
  double best_estimate() const noexcept { return best_estimate_; }
  // Offending point for non_finite_integrand; NaN otherwise.
  double abscissa() const noexcept { return abscissa_; }

 private:
  Kind kind_;
  double best_estimate_;
  double abscissa_;
};

}  // namespace hconvex
