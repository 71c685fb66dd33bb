#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "hconvex/numerics.hpp"
#include "oracle.hpp"

using namespace hconvex;

TEST(IntegrateAdaptive, ConstantIsExact) {
  auto r = integrate_adaptive([](double) { return 1.0; }, 1.0, 2.0, 1e-12, 1e-12);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_GE(r.error_estimate, 0.0);
}

TEST(IntegrateAdaptive, InverseSquare) {
  auto r = integrate_adaptive([](double x) { return 1.0 / (x * x); }, 1.0, 2.0);
  EXPECT_NEAR(r.value, 0.5, 1e-10);
  for (double a : {0.1, 0.7, 3.0}) {
    const double b = 2.5 * a;
    EXPECT_NEAR(integrate_adaptive([](double x) { return 1.0 / (x * x); }, a, b).value,
                1.0 / a - 1.0 / b, 1e-10 * (1.0 / a));
  }
}

TEST(IntegrateAdaptive, LogOnOneToE) {
  auto f = [](double x) { return std::log(x); };
  const double ref = oracle::integrate(f, 1.0, std::numbers::e);
  EXPECT_NEAR(ref, 1.0, 1e-13);
  EXPECT_NEAR(integrate_adaptive(f, 1.0, std::numbers::e).value, 1.0, 1e-10);
}

TEST(IntegrateAdaptive, AdditiveOverSplitPoints) {
  auto f = [](double x) { return std::sin(3 * x) * std::exp(-x); };
  oracle::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(-2, 1);
    const double b = a + rng.uniform(0.1, 4);
    const double c = rng.uniform(a, b);
    const double whole = integrate_adaptive(f, a, b, 1e-12, 1e-12).value;
    const double parts = integrate_adaptive(f, a, c, 1e-12, 1e-12).value +
                         integrate_adaptive(f, c, b, 1e-12, 1e-12).value;
    EXPECT_NEAR(whole, parts, 1e-10);
  }
}

TEST(IntegrateAdaptive, Linear) {
  auto f = [](double x) { return std::exp(x); };
  auto g = [](double x) { return 1.0 / (1.0 + x * x); };
  const double alpha = 2.5, beta = -0.75;
  const double lhs =
      integrate_adaptive([&](double x) { return alpha * f(x) + beta * g(x); }, 0, 2).value;
  const double rhs = alpha * integrate_adaptive(f, 0, 2).value + beta * integrate_adaptive(g, 0, 2).value;
  EXPECT_NEAR(lhs, rhs, 1e-9);
}

TEST(IntegrateAdaptive, NonFiniteIntegrandReportsAbscissa) {
  try {
    integrate_adaptive([](double x) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x; },
                       0.0, 1.0);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_EQ(e.kind(), QuadratureError::Kind::non_finite_integrand);
    EXPECT_GT(e.abscissa(), 0.5);
  }
}

TEST(IntegrateAdaptive, ToleranceNotReachedCarriesEstimate) {
  try {
    integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, 1e-15, 1e-300, 8);
    FAIL() << "expected QuadratureError";
  } catch (const QuadratureError& e) {
    EXPECT_EQ(e.kind(), QuadratureError::Kind::tolerance_not_reached);
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
  }
}

TEST(TKernel, PlainPowerHalfLambda) {
  const Interval iv = Interval::make(1, 2);
  auto r = t_kernel_integral(KernelKind::pow_plain, 0.5, 1.0, iv, Half::lower, TWeight::none);
  EXPECT_NEAR(r.value, 0.125, 1e-12);
}

TEST(TKernel, MatchesOracleAcrossKinks) {
  oracle::Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const double lam = rng.uniform(0, 1);
    const double u = rng.log_uniform(0.2, 5);
    const double v = u * rng.log_uniform(1.01, 20);
    const double got = t_kernel_integral(KernelKind::abs_over_affine_sq, lam, 1.0, u, v,
                                         Half::lower, TWeight::none)
                           .value;
    EXPECT_NEAR(got, oracle::c1(lam, u, v), 1e-10 * std::max(1.0, std::abs(got)));
    const double p = rng.uniform(1.1, 4);
    const double gp = t_kernel_integral(KernelKind::pow_over_affine_2p, lam, p, u, v,
                                        Half::lower, TWeight::none, 1e-13)
                          .value;
    EXPECT_NEAR(gp, oracle::c1_holder(lam, p, u, v), 1e-10 * std::max(1.0, gp));
  }
}

TEST(TKernel, UpperHalfIsMirroredLowerHalf) {
  // Reflecting t -> 1 - t maps the upper half of (a, b) onto the lower half of (b, a).
  const Interval iv = Interval::make(0.7, 2.9);
  for (double lam : {0.0, 1.0 / 3.0, 0.8}) {
    for (auto [wu, wl] : {std::pair{TWeight::none, TWeight::none},
                          {TWeight::one_minus_t, TWeight::t}, {TWeight::t, TWeight::one_minus_t}}) {
      const double up = t_kernel_integral(KernelKind::abs_over_affine_sq, lam, 1.0, iv,
                                          Half::upper, wu).value;
      const double low = t_kernel_integral(KernelKind::abs_over_affine_sq, lam, 1.0, iv.b(),
                                           iv.a(), Half::lower, wl).value;
      EXPECT_NEAR(up, low, 1e-11);
    }
  }
}

TEST(TKernel, RejectsBadArguments) {
  const Interval iv = Interval::make(1, 2);
  EXPECT_THROW(t_kernel_integral(KernelKind::abs_over_affine_sq, 1.5, 1, iv, Half::lower,
                                 TWeight::none),
               ValidationError);
  EXPECT_THROW(t_kernel_integral(KernelKind::pow_plain, 0.5, 0.0, iv, Half::lower, TWeight::none),
               ValidationError);
  EXPECT_THROW(Interval::make(1, 1), ValidationError);
}
