#pragma once

#include <map>
#include <optional>
#include <string>

#include "hconvex/domain.hpp"
#include "hconvex/numerics.hpp"

namespace hconvex {

/// Power-mean kernel coefficients for a pair (u, v), u != v, both positive:
///   c1 = int_0^{1/2} |lambda - 2t| / A_t^2 dt
///   c2 = int_0^{1/2} |lambda - 2t| t / A_t^2 dt
///   c3 = c1 - c2
/// with A_t = t v + (1 - t) u. Passing (b, a) gives the mirrored upper-half
/// integrals over [1/2, 1].
struct C123 {
  double c1;
  double c2;
  double c3;
};

C123 coeff_c123(LambdaWeight lambda, double u, double v);

/// int_0^{1/2} |lambda - 2t|^p / A_t^{2p} dt with A_t = t v + (1 - t) u.
/// No closed form is used; this is evaluated by quadrature. Requires p > 1.
double coeff_c1_holder(LambdaWeight lambda, double p, double u, double v,
                       double abs_tol = kDefaultAbsTol);

/// (lambda^{p+1} + (1 - lambda)^{p+1}) / (p + 1); twice the integral of
/// |lambda - 2t|^p over [0, 1/2]. Requires p > 0.
double coeff_c4(LambdaWeight lambda, double p);

struct C456 {
  double c4;
  double c5;
  double c6;
};

/// Hölder-kernel coefficients. c5, c6 satisfy
///   int_0^{1/2} (t X + (1-t) Y) / A_t^{2q} dt
///     = (c5 X + c6 Y) / (2 (1-q)(1-2q)(v-u)^2).
C456 coeff_c456(LambdaWeight lambda, double p, double q, double u, double v);

/// Trapezoid-rule coefficients over the whole of [0, 1]:
///   lambda1 = int |1-2t| / A_t^2,  lambda2 = int |1-2t| t / A_t^2,
///   lambda3 = lambda1 - lambda2,
///   mu1 = int t / A_t^{2q},        mu2 = int (1-t) / A_t^{2q}.
struct IntroCoefficients {
  double lambda1;
  double lambda2;
  double lambda3;
  std::optional<double> mu1;
  std::optional<double> mu2;
};

/// The mu pair is filled only when q is supplied; q <= 1 is rejected.
IntroCoefficients coeff_intro(const Interval& iv,
                              std::optional<double> q = std::nullopt);

struct CoefficientArgs {
  std::optional<double> lambda;
  std::optional<double> p;
  std::optional<double> q;
  std::optional<double> u;
  std::optional<double> v;
};

/// Named coefficients tagged with the inequality they feed.
struct CoefficientSet {
  std::map<std::string, double> values;
  std::string origin;
  CoefficientArgs args;
};

CoefficientSet coefficient_set_c123(LambdaWeight lambda, double u, double v);
CoefficientSet coefficient_set_c1_holder(LambdaWeight lambda, double p,
                                         double u, double v);
CoefficientSet coefficient_set_c456(LambdaWeight lambda, double p, double q,
                                    double u, double v);
CoefficientSet coefficient_set_intro(const Interval& iv,
                                     std::optional<double> q);

}  // namespace hconvex
