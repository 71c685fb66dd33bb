#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "hconvex/errors.hpp"

namespace hconvex {

using RealFunction = std::function<double(double)>;

/// Closed interval [a, b] with 0 < a < b.
///
/// Every coefficient formula in the library divides by b - a and every
/// integrand carries a 1/x^2 weight, so degenerate and non-positive
/// intervals are rejected at construction.
class Interval {
 public:
  static Interval make(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double width() const noexcept { return b_ - a_; }
  double product() const noexcept { return a_ * b_; }
  double harmonic_mid() const noexcept { return 2.0 * a_ * b_ / (a_ + b_); }
  double arithmetic_mid() const noexcept { return 0.5 * (a_ + b_); }

  /// A_t = t b + (1 - t) a. The map t -> ab / A_t sends [0, 1] onto [a, b]
  /// (b at t = 0, a at t = 1).
  double affine(double t) const noexcept { return t * b_ + (1.0 - t) * a_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval(double a, double b) : a_(a), b_(b) {}
  double a_;
  double b_;
};

/// Weight lambda in [0, 1] of the endpoint average against the harmonic
/// midpoint. 0 is the midpoint rule, 1 the trapezoid rule, 1/3 Simpson.
class LambdaWeight {
 public:
  static LambdaWeight make(double lambda);
  static LambdaWeight midpoint() { return LambdaWeight(0.0); }
  static LambdaWeight trapezoid() { return LambdaWeight(1.0); }
  static LambdaWeight simpson() { return LambdaWeight(1.0 / 3.0); }

  double value() const noexcept { return value_; }

 private:
  explicit LambdaWeight(double v) : value_(v) {}
  double value_;
};

enum class ExponentMode { power_mean, holder };

/// Exponent configuration. In power-mean mode only q >= 1 is meaningful; in
/// Hölder mode p, q > 1 are conjugate (1/p + 1/q = 1).
class ExponentPair {
 public:
  static constexpr double kConjugateTolerance = 1e-12;

  static ExponentPair power_mean(double q);
  static ExponentPair holder(double p, double q);
  static ExponentPair holder_from_q(double q);

  ExponentMode mode() const noexcept { return mode_; }
  double q() const noexcept { return q_; }
  /// Conjugate exponent; NaN in power-mean mode.
  double p() const noexcept { return p_; }

 private:
  ExponentPair(ExponentMode m, double p, double q) : mode_(m), p_(p), q_(q) {}
  ExponentMode mode_;
  double p_;
  double q_;
};

/// A differentiable function on (0, inf) together with its derivative.
struct FunctionSpec {
  std::string name;
  RealFunction f;
  RealFunction f_prime;
  /// sup |f''''| over an interval, when cheaply known.
  std::function<double(const Interval&)> fourth_derivative_sup;
  /// |f'| is constant, so |f'|^q is harmonically convex for every q.
  bool derivative_power_always_convex = false;

  /// Builds a spec after checking f_prime against central differences on a
  /// 17-point log-spaced grid over [check_lo, check_hi].
  static FunctionSpec make(std::string name, RealFunction f,
                           RealFunction f_prime,
                           std::function<double(const Interval&)> fourth_sup = {},
                           bool derivative_power_always_convex = false,
                           double check_lo = 0.125, double check_hi = 8.0);
};

/// Throws ValidationError naming the first grid point where f_prime
/// disagrees with (f(x+h) - f(x-h)) / 2h, h = 1e-5 x.
void check_derivative_consistency(const FunctionSpec& fs, double lo, double hi,
                                  int points = 17);

enum class VerdictStatus { pass, fail, precondition_unmet, error };

std::string_view to_string(VerdictStatus s);

struct VerdictInputs {
  double a = 0.0;
  double b = 0.0;
  std::optional<double> lambda;
  std::optional<double> p;
  std::optional<double> q;
  std::string function;
};

/// Outcome of one inequality or identity check. slack = rhs - lhs for
/// inequalities; identity checks store -|lhs - rhs|.
struct BoundVerdict {
  std::string theorem;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  VerdictStatus status = VerdictStatus::fail;
  VerdictInputs inputs;
  std::string note;

  bool passed() const noexcept { return status == VerdictStatus::pass; }
};

/// Inequality verdict: pass iff rhs - lhs >= -tol.
BoundVerdict make_inequality_verdict(std::string theorem, double lhs,
                                     double rhs, double tol,
                                     VerdictInputs inputs);

VerdictInputs inputs_for(const Interval& iv, const FunctionSpec& fs);

}  // namespace hconvex
