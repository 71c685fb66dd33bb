#include "hconvex/constants.hpp"

#include <cmath>
#include <sstream>

namespace hconvex {
namespace {

void require_pair(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v) || u <= 0.0 || v <= 0.0) {
    throw CoefficientError("invalid coefficient arguments: u, v must be positive");
  }
  if (u == v) throw CoefficientError("degenerate pair: u == v");
}

// log1p with the domain check the closed forms rely on.
double guarded_log1p(double x, const char* what) {
  if (!(x > -1.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "invalid coefficient arguments: log argument of " << what
        << " is non-positive";
    throw CoefficientError(msg.str());
  }
  return std::log1p(x);
}

double guarded_log(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "invalid coefficient arguments: log argument of " << what
        << " is non-positive";
    throw CoefficientError(msg.str());
  }
  return std::log(x);
}

// x^e for x > 0 evaluated as exp(e ln x).
double pos_pow(double x, double e, const char* what) {
  return std::exp(e * guarded_log(x, what));
}

void require_conjugate(double p, double q) {
  if (q == 1.0 || q == 0.5) {
    throw CoefficientError("degenerate exponent: q must avoid 1 and 1/2");
  }
  if (!std::isfinite(p) || !std::isfinite(q) || p <= 1.0 || q <= 1.0) {
    throw CoefficientError("invalid coefficient arguments: need p, q > 1");
  }
  if (std::abs(1.0 / p + 1.0 / q - 1.0) > ExponentPair::kConjugateTolerance) {
    throw CoefficientError("invalid coefficient arguments: 1/p + 1/q != 1");
  }
}

// Below this |v - u| / u the closed forms lose digits to cancellation
// (relative error grows like eps / r^2), so the coefficients are summed
// from their Taylor series in r instead.
constexpr double kSeriesThreshold = 0.05;

// int_0^{1/2} |l - 2t| t^k dt
double kink_moment(double l, int k) {
  const double s = 0.5 * l;
  const double h = 0.5;
  const double k1 = k + 1.0;
  const double k2 = k + 2.0;
  return l * std::pow(s, k1) / k1 - 2.0 * std::pow(s, k2) / k2 +
         2.0 * (std::pow(h, k2) - std::pow(s, k2)) / k2 -
         l * (std::pow(h, k1) - std::pow(s, k1)) / k1;
}

// sum_k binom(-e, k) r^k m(k), stopping once terms are negligible.
template <class Moment>
double binomial_series(double e, double r, Moment m) {
  double coef = 1.0;
  double rk = 1.0;
  double sum = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double term = coef * rk * m(k);
    sum += term;
    if (k > 4 && std::abs(term) <= 1e-18 * std::abs(sum)) break;
    coef *= (-e - k) / (k + 1.0);
    rk *= r;
  }
  return sum;
}

C123 c123_series(double l, double u, double r) {
  // 1 / A_t^2 = u^-2 (1 + r t)^-2
  const double scale = 1.0 / (u * u);
  const double c1 = scale * binomial_series(2.0, r, [&](int k) { return kink_moment(l, k); });
  const double c2 =
      scale * binomial_series(2.0, r, [&](int k) { return kink_moment(l, k + 1); });
  return C123{c1, c2, c1 - c2};
}

}  // namespace

C123 coeff_c123(LambdaWeight lambda, double u, double v) {
  require_pair(u, v);
  const double l = lambda.value();
  const double d = v - u;
  // Everything is expressed through r = (v - u) / u. The logarithms become
  // log1p terms and the constant parts of the rational terms are cancelled
  // algebraically, which keeps both forms accurate for v close to u.
  //   2u(u+v) / (2u + l d)^2 = (1 + r/2) / (1 + l r/2)^2
  const double r = d / u;
  if (std::abs(r) < kSeriesThreshold) return c123_series(l, u, r);
  const double log_half = guarded_log1p(0.5 * r, "C1/C2");
  const double log_lhalf = guarded_log1p(0.5 * l * r, "C1/C2");
  const double log_c1 = log_half - 2.0 * log_lhalf;

  // -4 + (l d + 2u)(3u + v) / (u (u + v)) = r (4l - 2 + l r) / (2 + r)
  const double c1_num = r * (4.0 * l - 2.0 + l * r) / (2.0 + r) + 2.0 * log_c1;
  const double c1 = c1_num / (d * d);

  // -(l d + 2u)(5u + 3v) / (u + v) + 7u + v = u r (4 - 8l + r - 3 l r) / (2 + r)
  const double c2_num = (l * d + 4.0 * u) * (-log_c1) +
                        u * r * (4.0 - 8.0 * l + r - 3.0 * l * r) / (2.0 + r);
  const double c2 = c2_num / (d * d * d);

  if (!std::isfinite(c1) || !std::isfinite(c2)) {
    throw CoefficientError("invalid coefficient arguments: non-finite C1/C2");
  }
  return C123{c1, c2, c1 - c2};
}

double coeff_c1_holder(LambdaWeight lambda, double p, double u, double v,
                       double abs_tol) {
  if (!std::isfinite(p) || p <= 1.0) {
    throw CoefficientError("invalid coefficient arguments: need p > 1");
  }
  require_pair(u, v);
  return t_kernel_integral(KernelKind::pow_over_affine_2p, lambda.value(), p,
                           u, v, Half::lower, TWeight::none, abs_tol)
      .value;
}

double coeff_c4(LambdaWeight lambda, double p) {
  if (!std::isfinite(p) || p <= 0.0) {
    throw CoefficientError("invalid coefficient arguments: need p > 0");
  }
  const double l = lambda.value();
  return (std::pow(l, p + 1.0) + std::pow(1.0 - l, p + 1.0)) / (p + 1.0);
}

C456 coeff_c456(LambdaWeight lambda, double p, double q, double u, double v) {
  require_conjugate(p, q);
  require_pair(u, v);
  const double d = v - u;
  const double r = d / u;
  if (std::abs(r) < kSeriesThreshold) {
    // norm * int_0^{1/2} {t, 1 - t} u^{-2q} (1 + r t)^{-2q} dt
    const double norm = 2.0 * (1.0 - q) * (1.0 - 2.0 * q) * d * d * pos_pow(u, -2.0 * q, "u");
    auto tk = [](int k) { return std::pow(0.5, k + 1.0) / (k + 1.0); };
    const double c5 = norm * binomial_series(2.0 * q, r, [&](int k) { return tk(k + 1); });
    const double c6 = norm * binomial_series(2.0 * q, r, [&](int k) { return tk(k) - tk(k + 1); });
    return C456{coeff_c4(lambda, p), c5, c6};
  }
  const double mid_pow = pos_pow(0.5 * (u + v), 1.0 - 2.0 * q, "(u+v)/2");
  const double c5 = mid_pow * (0.5 * (v - 3.0 * u) - q * d) +
                    pos_pow(u, 2.0 - 2.0 * q, "u");
  const double c6 = mid_pow * (0.5 * (3.0 * v - u) - q * d) +
                    pos_pow(u, 1.0 - 2.0 * q, "u") * (u - 2.0 * v + 2.0 * q * d);
  return C456{coeff_c4(lambda, p), c5, c6};
}

IntroCoefficients coeff_intro(const Interval& iv, std::optional<double> q) {
  const double a = iv.a();
  const double b = iv.b();
  const double d = iv.width();
  // ln((a+b)^2 / 4ab) = ln(1 + (b-a)^2 / 4ab)
  const double log_term = std::log1p(d * d / (4.0 * a * b));
  IntroCoefficients out{};
  const double r = d / a;
  if (r < kSeriesThreshold) {
    // lambda1 and lambda2 split into lower-half and mirrored upper-half
    // kernels, each of which has a stable series.
    const C123 lo = coeff_c123(LambdaWeight::trapezoid(), a, b);
    const C123 hi = coeff_c123(LambdaWeight::trapezoid(), b, a);
    out.lambda1 = lo.c1 + hi.c1;
    out.lambda2 = lo.c2 + hi.c3;
  } else {
    out.lambda1 = 1.0 / (a * b) - 2.0 / (d * d) * log_term;
    out.lambda2 = -1.0 / (b * d) + (3.0 * a + b) / (d * d * d) * log_term;
  }
  out.lambda3 = out.lambda1 - out.lambda2;

  if (q) {
    const double qq = *q;
    if (!std::isfinite(qq) || qq <= 1.0) {
      throw CoefficientError("mu coefficients require q > 1");
    }
    if (r < kSeriesThreshold) {
      // int_0^1 {t, 1 - t} a^{-2q} (1 + r t)^{-2q} dt
      const double scale = pos_pow(a, -2.0 * qq, "a");
      out.mu1 = scale * binomial_series(2.0 * qq, r, [](int k) { return 1.0 / (k + 2.0); });
      out.mu2 = scale * binomial_series(2.0 * qq, r, [](int k) {
        return 1.0 / ((k + 1.0) * (k + 2.0));
      });
      return out;
    }
    const double denom = 2.0 * d * d * (1.0 - qq) * (1.0 - 2.0 * qq);
    const double a1 = pos_pow(a, 1.0 - 2.0 * qq, "a");
    const double b1 = pos_pow(b, 1.0 - 2.0 * qq, "b");
    const double a2 = pos_pow(a, 2.0 - 2.0 * qq, "a");
    const double b2 = pos_pow(b, 2.0 - 2.0 * qq, "b");
    out.mu1 = (a2 + b1 * (d * (1.0 - 2.0 * qq) - a)) / denom;
    out.mu2 = (b2 - a1 * (d * (1.0 - 2.0 * qq) + b)) / denom;
  }
  return out;
}

CoefficientSet coefficient_set_c123(LambdaWeight lambda, double u, double v) {
  const C123 c = coeff_c123(lambda, u, v);
  CoefficientSet set;
  set.origin = "thm22";
  set.values = {{"C1", c.c1}, {"C2", c.c2}, {"C3", c.c3}};
  set.args.lambda = lambda.value();
  set.args.u = u;
  set.args.v = v;
  return set;
}

CoefficientSet coefficient_set_c1_holder(LambdaWeight lambda, double p,
                                         double u, double v) {
  CoefficientSet set;
  set.origin = "thm23";
  set.values = {{"C1_holder", coeff_c1_holder(lambda, p, u, v)}};
  set.args.lambda = lambda.value();
  set.args.p = p;
  set.args.u = u;
  set.args.v = v;
  return set;
}

CoefficientSet coefficient_set_c456(LambdaWeight lambda, double p, double q,
                                    double u, double v) {
  const C456 c = coeff_c456(lambda, p, q, u, v);
  CoefficientSet set;
  set.origin = "thm24";
  set.values = {{"C4", c.c4}, {"C5", c.c5}, {"C6", c.c6}};
  set.args.lambda = lambda.value();
  set.args.p = p;
  set.args.q = q;
  set.args.u = u;
  set.args.v = v;
  return set;
}

CoefficientSet coefficient_set_intro(const Interval& iv,
                                     std::optional<double> q) {
  const IntroCoefficients c = coeff_intro(iv, q);
  CoefficientSet set;
  set.origin = q ? "thm14+thm15" : "thm14";
  set.values = {{"lambda1", c.lambda1},
                {"lambda2", c.lambda2},
                {"lambda3", c.lambda3}};
  if (c.mu1) {
    set.values["mu1"] = *c.mu1;
    set.values["mu2"] = *c.mu2;
  }
  set.args.q = q;
  set.args.u = iv.a();
  set.args.v = iv.b();
  return set;
}

}  // namespace hconvex
