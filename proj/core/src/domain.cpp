#include "hconvex/domain.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hconvex {

Interval Interval::make(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("interval endpoints must be finite");
  }
  if (a <= 0.0) throw ValidationError("a must be positive");
  if (b <= a) throw ValidationError("b must exceed a");
  return Interval(a, b);
}

LambdaWeight LambdaWeight::make(double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
    throw ValidationError("lambda must lie in [0, 1]");
  }
  return LambdaWeight(lambda);
}

ExponentPair ExponentPair::power_mean(double q) {
  if (!std::isfinite(q) || q < 1.0) {
    throw ValidationError("power-mean exponent requires q >= 1");
  }
  return ExponentPair(ExponentMode::power_mean,
                      std::numeric_limits<double>::quiet_NaN(), q);
}

ExponentPair ExponentPair::holder(double p, double q) {
  if (!std::isfinite(p) || !std::isfinite(q) || p <= 1.0 || q <= 1.0) {
    throw ValidationError("Hölder exponents require p > 1 and q > 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > kConjugateTolerance) {
    throw ValidationError("Hölder exponents must satisfy 1/p + 1/q = 1");
  }
  return ExponentPair(ExponentMode::holder, p, q);
}

ExponentPair ExponentPair::holder_from_q(double q) {
  if (!std::isfinite(q) || q <= 1.0) {
    throw ValidationError("Hölder exponents require q > 1");
  }
  return ExponentPair(ExponentMode::holder, q / (q - 1.0), q);
}

void check_derivative_consistency(const FunctionSpec& fs, double lo, double hi,
                                  int points) {
  if (!fs.f || !fs.f_prime) {
    throw ValidationError("function spec '" + fs.name +
                          "' is missing f or f'");
  }
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = std::exp(log_lo + step * i);
    const double h = 1e-5 * x;
    const double fd = (fs.f(x + h) - fs.f(x - h)) / (2.0 * h);
    const double d = fs.f_prime(x);
    if (!std::isfinite(fd) || !std::isfinite(d) ||
        std::abs(fd - d) > 1e-5 * std::max(1.0, std::abs(d))) {
      std::ostringstream msg;
      msg << "derivative of '" << fs.name << "' inconsistent at x=" << x
          << " (f'=" << d << ", central difference=" << fd << ")";
      throw ValidationError(msg.str());
    }
  }
}

FunctionSpec FunctionSpec::make(std::string name, RealFunction f,
                                RealFunction f_prime,
                                std::function<double(const Interval&)> fourth_sup,
                                bool always_convex, double check_lo,
                                double check_hi) {
  FunctionSpec fs{std::move(name), std::move(f), std::move(f_prime),
                  std::move(fourth_sup), always_convex};
  check_derivative_consistency(fs, check_lo, check_hi);
  return fs;
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::precondition_unmet: return "precondition_unmet";
    case VerdictStatus::error: return "error";
  }
  return "unknown";
}

BoundVerdict make_inequality_verdict(std::string theorem, double lhs,
                                     double rhs, double tol,
                                     VerdictInputs inputs) {
  BoundVerdict v;
  v.theorem = std::move(theorem);
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = rhs - lhs;
  v.status = (v.slack >= -tol) ? VerdictStatus::pass : VerdictStatus::fail;
  v.inputs = std::move(inputs);
  return v;
}

VerdictInputs inputs_for(const Interval& iv, const FunctionSpec& fs) {
  VerdictInputs in;
  in.a = iv.a();
  in.b = iv.b();
  in.function = fs.name;
  return in;
}

}  // namespace hconvex
