#include "hconvex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hconvex/constants.hpp"

namespace hconvex {
namespace {

double abs_pow(double x, double q) { return std::pow(std::abs(x), q); }

// C^{1 - 1/q} with the q = 1 convention C^0 = 1.
double outer_power(double c, double q) {
  return q == 1.0 ? 1.0 : std::pow(c, 1.0 - 1.0 / q);
}

void require_power_mean_q(double q) {
  if (!std::isfinite(q) || q < 1.0) {
    throw ValidationError("power-mean bound requires q >= 1");
  }
}

void require_holder(const ExponentPair& exps) {
  if (exps.mode() != ExponentMode::holder) {
    throw ValidationError("Hölder bound requires exponents in Hölder mode");
  }
}

// Applies the |f'|^q convexity hypothesis check to a computed verdict.
void apply_derivative_precondition(BoundVerdict& v, const FunctionSpec& fs,
                                   const Interval& iv, double q,
                                   const BoundOptions& opt) {
  if (!opt.check_preconditions) return;
  if (!certify_derivative_power(fs, iv, q, opt.convexity_grid,
                                opt.convexity_tol)) {
    v.status = VerdictStatus::precondition_unmet;
    v.note = "|f'|^q not certified harmonically convex on the interval";
  }
}

VerdictInputs make_inputs(const FunctionSpec& fs, const Interval& iv,
                          std::optional<double> lambda, std::optional<double> p,
                          std::optional<double> q) {
  VerdictInputs in = inputs_for(iv, fs);
  in.lambda = lambda;
  in.p = p;
  in.q = q;
  return in;
}

double value_scale(const FunctionSpec& fs, const Interval& iv) {
  return std::max({1.0, std::abs(fs.f(iv.a())), std::abs(fs.f(iv.b())),
                   std::abs(fs.f(iv.harmonic_mid()))});
}

}  // namespace

DeviationParts lhs_deviation(const FunctionSpec& fs, const Interval& iv,
                             LambdaWeight lambda, const BoundOptions& opt) {
  const double a = iv.a();
  const double b = iv.b();
  const double l = lambda.value();
  const double weighted =
      (1.0 - l) * fs.f(iv.harmonic_mid()) + l * 0.5 * (fs.f(a) + fs.f(b));
  const double factor = iv.product() / iv.width();
  // Tolerance is set in units of the mean, not of the raw integral.
  const QuadratureResult q = integrate_adaptive(
      [&fs](double x) { return fs.f(x) / (x * x); }, a, b,
      opt.quad_abs_tol / factor, opt.quad_rel_tol);
  const double mean = factor * q.value;
  return DeviationParts{weighted, mean, std::abs(weighted - mean)};
}

BoundVerdict verify_identity(const FunctionSpec& fs, const Interval& iv,
                             LambdaWeight lambda, const BoundOptions& opt) {
  const DeviationParts parts = lhs_deviation(fs, iv, lambda, opt);
  const double lhs = parts.weighted_value - parts.mean_integral;

  const double a = iv.a();
  const double b = iv.b();
  const double l = lambda.value();
  const double ab = iv.product();
  const double prefactor = 0.5 * ab * iv.width();
  const double scale = value_scale(fs, iv);
  // Quadrature budget two orders of magnitude below the identity tolerance.
  const double t_tol = 1e-2 * opt.tol_identity * scale / prefactor;

  auto integrand = [&](double t, double kernel) {
    const double at = t * b + (1.0 - t) * a;
    return kernel / (at * at) * fs.f_prime(ab / at);
  };
  auto piece = [&](double lo, double hi, auto kernel) {
    if (!(lo < hi)) return 0.0;
    return integrate_adaptive(
               [&](double t) { return integrand(t, kernel(t)); }, lo, hi,
               0.25 * t_tol, 1e-12)
        .value;
  };
  auto lower = [l](double t) { return l - 2.0 * t; };
  auto upper = [l](double t) { return 2.0 - l - 2.0 * t; };
  const double k_lo = 0.5 * l;
  const double k_hi = 1.0 - 0.5 * l;
  const double sum = piece(0.0, k_lo, lower) + piece(k_lo, 0.5, lower) +
                     piece(0.5, k_hi, upper) + piece(k_hi, 1.0, upper);
  const double rhs = prefactor * sum;

  BoundVerdict v;
  v.theorem = "identity";
  v.lhs = lhs;
  v.rhs = rhs;
  v.slack = -std::abs(lhs - rhs);
  v.status = (std::abs(lhs - rhs) <= opt.tol_identity * scale)
                 ? VerdictStatus::pass
                 : VerdictStatus::fail;
  v.inputs = make_inputs(fs, iv, l, std::nullopt, std::nullopt);
  return v;
}

BoundVerdict bound_thm22(const FunctionSpec& fs, const Interval& iv,
                         LambdaWeight lambda, double q,
                         const BoundOptions& opt) {
  require_power_mean_q(q);
  const double a = iv.a();
  const double b = iv.b();
  const double lhs = lhs_deviation(fs, iv, lambda, opt).deviation;
  const double ga = abs_pow(fs.f_prime(a), q);
  const double gb = abs_pow(fs.f_prime(b), q);
  const C123 fwd = coeff_c123(lambda, a, b);
  const C123 rev = coeff_c123(lambda, b, a);
  const double rhs =
      0.5 * iv.product() * iv.width() *
      (outer_power(fwd.c1, q) * std::pow(fwd.c2 * ga + fwd.c3 * gb, 1.0 / q) +
       outer_power(rev.c1, q) * std::pow(rev.c3 * ga + rev.c2 * gb, 1.0 / q));
  BoundVerdict v = make_inequality_verdict(
      "thm22", lhs, rhs, opt.tol_ineq,
      make_inputs(fs, iv, lambda.value(), std::nullopt, q));
  apply_derivative_precondition(v, fs, iv, q, opt);
  return v;
}

BoundVerdict bound_thm23(const FunctionSpec& fs, const Interval& iv,
                         LambdaWeight lambda, const ExponentPair& exps,
                         const BoundOptions& opt) {
  require_holder(exps);
  const double p = exps.p();
  const double q = exps.q();
  const double a = iv.a();
  const double b = iv.b();
  const double lhs = lhs_deviation(fs, iv, lambda, opt).deviation;
  const double gh = abs_pow(fs.f_prime(iv.harmonic_mid()), q);
  const double ga = abs_pow(fs.f_prime(a), q);
  const double gb = abs_pow(fs.f_prime(b), q);
  const double k_fwd = coeff_c1_holder(lambda, p, a, b, opt.quad_abs_tol);
  const double k_rev = coeff_c1_holder(lambda, p, b, a, opt.quad_abs_tol);
  const double rhs = 0.5 * iv.product() * iv.width() *
                     (std::pow(k_fwd, 1.0 / p) * std::pow(0.25 * (gh + gb), 1.0 / q) +
                      std::pow(k_rev, 1.0 / p) * std::pow(0.25 * (gh + ga), 1.0 / q));
  BoundVerdict v = make_inequality_verdict(
      "thm23", lhs, rhs, opt.tol_ineq, make_inputs(fs, iv, lambda.value(), p, q));
  apply_derivative_precondition(v, fs, iv, q, opt);
  return v;
}

BoundVerdict bound_thm24(const FunctionSpec& fs, const Interval& iv,
                         LambdaWeight lambda, const ExponentPair& exps,
                         const BoundOptions& opt) {
  require_holder(exps);
  const double p = exps.p();
  const double q = exps.q();
  const double a = iv.a();
  const double b = iv.b();
  const double d = iv.width();
  const double lhs = lhs_deviation(fs, iv, lambda, opt).deviation;
  const double ga = abs_pow(fs.f_prime(a), q);
  const double gb = abs_pow(fs.f_prime(b), q);
  const C456 fwd = coeff_c456(lambda, p, q, a, b);
  const C456 rev = coeff_c456(lambda, p, q, b, a);
  const double denom = (1.0 - q) * (1.0 - 2.0 * q) * d * d;
  const double rhs = 0.25 * iv.product() * d * std::pow(fwd.c4, 1.0 / p) /
                     std::pow(denom, 1.0 / q) *
                     (std::pow(fwd.c5 * ga + fwd.c6 * gb, 1.0 / q) +
                      std::pow(rev.c6 * ga + rev.c5 * gb, 1.0 / q));
  BoundVerdict v = make_inequality_verdict(
      "thm24", lhs, rhs, opt.tol_ineq, make_inputs(fs, iv, lambda.value(), p, q));
  apply_derivative_precondition(v, fs, iv, q, opt);
  return v;
}

BoundVerdict bound_thm14(const FunctionSpec& fs, const Interval& iv, double q,
                         const BoundOptions& opt) {
  require_power_mean_q(q);
  const double lhs =
      lhs_deviation(fs, iv, LambdaWeight::trapezoid(), opt).deviation;
  const double ga = abs_pow(fs.f_prime(iv.a()), q);
  const double gb = abs_pow(fs.f_prime(iv.b()), q);
  const IntroCoefficients c = coeff_intro(iv);
  const double rhs = 0.5 * iv.product() * iv.width() *
                     outer_power(c.lambda1, q) *
                     std::pow(c.lambda2 * ga + c.lambda3 * gb, 1.0 / q);
  BoundVerdict v = make_inequality_verdict(
      "thm14", lhs, rhs, opt.tol_ineq,
      make_inputs(fs, iv, 1.0, std::nullopt, q));
  apply_derivative_precondition(v, fs, iv, q, opt);
  return v;
}

BoundVerdict bound_thm15(const FunctionSpec& fs, const Interval& iv,
                         const ExponentPair& exps, const BoundOptions& opt) {
  require_holder(exps);
  const double p = exps.p();
  const double q = exps.q();
  const double lhs =
      lhs_deviation(fs, iv, LambdaWeight::trapezoid(), opt).deviation;
  const double ga = abs_pow(fs.f_prime(iv.a()), q);
  const double gb = abs_pow(fs.f_prime(iv.b()), q);
  const IntroCoefficients c = coeff_intro(iv, q);
  const double rhs = 0.5 * iv.product() * iv.width() *
                     std::pow(1.0 / (p + 1.0), 1.0 / p) *
                     std::pow(*c.mu1 * ga + *c.mu2 * gb, 1.0 / q);
  BoundVerdict v = make_inequality_verdict(
      "thm15", lhs, rhs, opt.tol_ineq, make_inputs(fs, iv, 1.0, p, q));
  apply_derivative_precondition(v, fs, iv, q, opt);
  return v;
}

std::pair<BoundVerdict, BoundVerdict> verify_hh_harmonic(
    const FunctionSpec& fs, const Interval& iv, const BoundOptions& opt) {
  const DeviationParts parts = lhs_deviation(fs, iv, LambdaWeight::midpoint(), opt);
  const double mid_value = parts.weighted_value;
  const double endpoint_avg = 0.5 * (fs.f(iv.a()) + fs.f(iv.b()));
  const VerdictInputs in = make_inputs(fs, iv, std::nullopt, std::nullopt, std::nullopt);
  // Both sides are function values, so rounding grows with |f|.
  const double tol = opt.tol_ineq * value_scale(fs, iv);
  BoundVerdict left = make_inequality_verdict("hh13_left", mid_value,
                                              parts.mean_integral, tol, in);
  BoundVerdict right = make_inequality_verdict("hh13_right", parts.mean_integral,
                                               endpoint_avg, tol, in);
  if (opt.check_preconditions &&
      !certify_harmonic(fs, iv, opt.convexity_grid, opt.convexity_tol)) {
    for (BoundVerdict* v : {&left, &right}) {
      v->status = VerdictStatus::precondition_unmet;
      v->note = "f not certified harmonically convex on the interval";
    }
  }
  return {left, right};
}

std::vector<BoundVerdict> verify_classical(const FunctionSpec& fs,
                                           const Interval& iv,
                                           ClassicalKind kind,
                                           const BoundOptions& opt) {
  const double a = iv.a();
  const double b = iv.b();
  const double d = iv.width();
  const VerdictInputs in = make_inputs(fs, iv, std::nullopt, std::nullopt, std::nullopt);

  if (kind == ClassicalKind::simpson && !fs.fourth_derivative_sup) {
    throw ValidationError("missing f_fourth_sup for '" + fs.name +
                          "': Simpson baseline needs sup |f''''|");
  }
  const double mean =
      integrate_adaptive(fs.f, a, b, opt.quad_abs_tol * d, opt.quad_rel_tol).value / d;
  const double fm = fs.f(iv.arithmetic_mid());
  const double avg = 0.5 * (fs.f(a) + fs.f(b));
  const double tol =
      opt.tol_ineq * std::max({1.0, std::abs(fs.f(a)), std::abs(fs.f(b)), std::abs(fm)});

  std::vector<BoundVerdict> out;
  if (kind == ClassicalKind::hermite_hadamard) {
    out.push_back(make_inequality_verdict("classical_hh_left", fm, mean, tol, in));
    out.push_back(make_inequality_verdict("classical_hh_right", mean, avg, tol, in));
    if (opt.check_preconditions &&
        !certify_convex(fs, iv, opt.convexity_grid, opt.convexity_tol)) {
      for (BoundVerdict& v : out) {
        v.status = VerdictStatus::precondition_unmet;
        v.note = "f not certified convex on the interval";
      }
    }
    return out;
  }
  const double simpson = (avg + 2.0 * fm) / 3.0;
  const double sup4 = fs.fourth_derivative_sup(iv);
  const double rhs = sup4 * d * d * d * d / 2880.0;
  out.push_back(make_inequality_verdict("classical_simpson",
                                        std::abs(simpson - mean), rhs, tol, in));
  return out;
}

}  // namespace hconvex
