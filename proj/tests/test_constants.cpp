#include <cmath>

#include <gtest/gtest.h>

#include "hconvex/constants.hpp"
#include "oracle.hpp"
#include "printed_forms.hpp"

using namespace hconvex;

namespace {

void expect_rel(double got, double want, double rel) {
  EXPECT_NEAR(got, want, rel * std::max(1e-300, std::abs(want))) << "want " << want;
}

}  // namespace

TEST(C123, MidpointValueOnOneTwo) {
  const C123 c = coeff_c123(LambdaWeight::midpoint(), 1, 2);
  EXPECT_NEAR(c.c1, 2 * (std::log(1.5) - 1.0 / 3.0), 1e-14);
  EXPECT_NEAR(c.c1, 0.144264, 1e-6);
  EXPECT_EQ(c.c3, c.c1 - c.c2);
}

TEST(C123, SimpsonMatchesQuadratureKernel) {
  const C123 c = coeff_c123(LambdaWeight::simpson(), 1, 2);
  const double kernel = t_kernel_integral(KernelKind::abs_over_affine_sq, 1.0 / 3.0, 1.0, 1, 2,
                                          Half::lower, TWeight::none)
                            .value;
  expect_rel(c.c1, kernel, 1e-8);
}

TEST(C123, TrapezoidPinnedAgainstKernel) {
  // Regression pin: C1(1; 1, 2) = 1 + 2 ln(2/3).
  const double pinned = 1.0 + 2.0 * std::log(2.0 / 3.0);
  EXPECT_NEAR(coeff_c123(LambdaWeight::trapezoid(), 1, 2).c1, pinned, 1e-14);
  EXPECT_NEAR(t_kernel_integral(KernelKind::abs_over_affine_sq, 1.0, 1.0, Interval::make(1, 2),
                                Half::lower, TWeight::none)
                  .value,
              pinned, 1e-10);
}

TEST(C123, PrintedSpecialCases) {
  oracle::Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const double u = rng.log_uniform(0.1, 10);
    const double ratio = rng.log_uniform(1.05, 50);
    const double vv = rng.uniform(0, 1) < 0.5 ? u * ratio : u / ratio;  // u > v too
    struct Case {
      LambdaWeight l;
      printed::Triple t;
    };
    for (const Case& c : {Case{LambdaWeight::midpoint(), printed::midpoint(u, vv)},
                          Case{LambdaWeight::trapezoid(), printed::trapezoid(u, vv)},
                          Case{LambdaWeight::simpson(), printed::simpson(u, vv)}}) {
      const C123 got = coeff_c123(c.l, u, vv);
      expect_rel(got.c1, c.t.c1, 1e-8);
      expect_rel(got.c2, c.t.c2, 1e-8);
      expect_rel(got.c3, c.t.c3, 1e-8);
    }
  }
}

TEST(C123, OracleEquivalenceRandom) {
  oracle::Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const double lam = rng.uniform(0, 1);
    const double u = rng.log_uniform(0.1, 10);
    const double v = u * rng.log_uniform(1.001, 100);
    for (auto [x, y] : {std::pair{u, v}, {v, u}}) {
      const C123 c = coeff_c123(LambdaWeight::make(lam), x, y);
      expect_rel(c.c1, oracle::c1(lam, x, y), 1e-8);
      expect_rel(c.c2, oracle::c2(lam, x, y), 1e-8);
      expect_rel(c.c3, oracle::c3(lam, x, y), 1e-8);
    }
  }
}

TEST(Coefficients, NearDegeneratePairsStayAccurate) {
  for (double r : {0.2, 0.06, 0.049, 1e-2, 1e-4, 1e-6, 1e-9, -1e-6, -0.04}) {
    const double u = 2.0, v = 2.0 * (1 + r);
    for (double lam : {0.0, 0.4, 1.0}) {
      const C123 c = coeff_c123(LambdaWeight::make(lam), u, v);
      expect_rel(c.c1, oracle::c1(lam, u, v), 1e-11);
      expect_rel(c.c2, oracle::c2(lam, u, v), 1e-11);
      expect_rel(c.c3, oracle::c3(lam, u, v), 1e-11);
    }
    const C456 k = coeff_c456(LambdaWeight::midpoint(), 3.0, 1.5, u, v);
    expect_rel(k.c5, oracle::c5(1.5, u, v), 1e-9);
    expect_rel(k.c6, oracle::c6(1.5, u, v), 1e-9);
    if (r > 0) {
      const IntroCoefficients in = coeff_intro(Interval::make(u, v), 2.5);
      expect_rel(in.lambda1, oracle::lambda1(u, v), 1e-11);
      expect_rel(in.lambda2, oracle::lambda2(u, v), 1e-11);
      expect_rel(*in.mu1, oracle::mu1(2.5, u, v), 1e-11);
      expect_rel(*in.mu2, oracle::mu2(2.5, u, v), 1e-11);
    }
  }
}

TEST(C123, PositiveAndIdentityExact) {
  oracle::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const double u = rng.log_uniform(0.01, 100);
    const double v = rng.log_uniform(0.01, 100);
    if (u == v) continue;
    const C123 c = coeff_c123(LambdaWeight::make(rng.uniform(0, 1)), u, v);
    EXPECT_GT(c.c1, 0);
    EXPECT_GT(c.c2, 0);
    EXPECT_GT(c.c3, 0);
    EXPECT_EQ(c.c3, c.c1 - c.c2);
  }
}

TEST(C123, Errors) {
  EXPECT_THROW(coeff_c123(LambdaWeight::midpoint(), 1, 1), CoefficientError);
  EXPECT_THROW(coeff_c123(LambdaWeight::midpoint(), -1, 1), CoefficientError);
}

TEST(C1Holder, PinnedOneNinth) {
  // int_0^{1/2} (1 - 2t)^2 / (1 + t)^4 dt = 1/9 by hand.
  EXPECT_NEAR(coeff_c1_holder(LambdaWeight::trapezoid(), 2, 1, 2), 1.0 / 9.0, 1e-11);
}

TEST(C1Holder, OracleAndErrors) {
  oracle::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    const double lam = rng.uniform(0, 1);
    const double p = rng.uniform(1.05, 5);
    const double u = rng.log_uniform(0.2, 5);
    const double v = u * rng.log_uniform(1.01, 30);
    expect_rel(coeff_c1_holder(LambdaWeight::make(lam), p, u, v, 1e-14),
               oracle::c1_holder(lam, p, u, v), 1e-8);
  }
  EXPECT_THROW(coeff_c1_holder(LambdaWeight::midpoint(), 2, 1, 1), CoefficientError);
  EXPECT_THROW(coeff_c1_holder(LambdaWeight::midpoint(), 1, 1, 2), CoefficientError);
}

TEST(C4, ValuesAndSymmetry) {
  EXPECT_NEAR(coeff_c4(LambdaWeight::make(0.5), 3), 1.0 / 32.0, 1e-16);
  oracle::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const double lam = rng.uniform(0, 1);
    const double p = rng.uniform(1.01, 6);
    const double a = coeff_c4(LambdaWeight::make(lam), p);
    const double b = coeff_c4(LambdaWeight::make(1 - lam), p);
    EXPECT_NEAR(a, b, 1e-15 * a);
    // Minimised at lambda = 1/2.
    EXPECT_GE(a, coeff_c4(LambdaWeight::make(0.5), p) * (1 - 1e-15));
    expect_rel(a, oracle::c4(lam, p), 1e-10);
  }
}

TEST(C456, OracleRecombinationAndMirror) {
  oracle::Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    const double q = rng.uniform(1.1, 5);
    const double p = q / (q - 1);
    const double u = rng.log_uniform(0.2, 5);
    const double v = u * rng.log_uniform(1.01, 20);
    for (auto [x, y] : {std::pair{u, v}, {v, u}}) {
      const C456 c = coeff_c456(LambdaWeight::make(0.3), p, q, x, y);
      expect_rel(c.c5, oracle::c5(q, x, y), 1e-8);
      expect_rel(c.c6, oracle::c6(q, x, y), 1e-8);
    }
  }
}

TEST(C456, DegenerateExponents) {
  EXPECT_THROW(coeff_c456(LambdaWeight::midpoint(), 2, 1, 1, 2), CoefficientError);
  EXPECT_THROW(coeff_c456(LambdaWeight::midpoint(), -1, 0.5, 1, 2), CoefficientError);
  EXPECT_THROW(coeff_c456(LambdaWeight::midpoint(), 2, 2, 1, 1), CoefficientError);
}

TEST(Intro, ValuesOnOneTwo) {
  const IntroCoefficients c = coeff_intro(Interval::make(1, 2), 2.0);
  EXPECT_NEAR(c.lambda1, 0.264433928687233, 1e-14);
  EXPECT_NEAR(*c.mu1, 1.0 / 12.0, 1e-14);
  EXPECT_NEAR(*c.mu2, 5.0 / 24.0, 1e-14);
  EXPECT_NEAR(c.lambda1, oracle::lambda1(1, 2), 1e-12);
}

TEST(Intro, PrintedFormsAndOracle) {
  oracle::Rng rng(123);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.log_uniform(0.1, 10);
    const double b = a * rng.log_uniform(1.01, 100);
    const double q = rng.uniform(1.05, 5);
    const IntroCoefficients c = coeff_intro(Interval::make(a, b), q);
    expect_rel(c.lambda1, oracle::lambda1(a, b), 1e-8);
    expect_rel(c.lambda2, oracle::lambda2(a, b), 1e-8);
    expect_rel(c.lambda3, oracle::lambda3(a, b), 1e-8);
    expect_rel(*c.mu1, oracle::mu1(q, a, b), 1e-8);
    expect_rel(*c.mu2, oracle::mu2(q, a, b), 1e-8);
    expect_rel(c.lambda1, printed::lambda1(a, b), 1e-8);
    expect_rel(c.lambda2, printed::lambda2(a, b), 1e-8);
    expect_rel(c.lambda3, printed::lambda3(a, b), 1e-8);
    expect_rel(*c.mu1, printed::mu1(q, a, b), 1e-8);
    expect_rel(*c.mu2, printed::mu2(q, a, b), 1e-8);
    EXPECT_EQ(c.lambda3, c.lambda1 - c.lambda2);
  }
}

TEST(Intro, LambdaOneSplitsIntoHalves) {
  const Interval iv = Interval::make(0.5, 4);
  const double halves = coeff_c123(LambdaWeight::trapezoid(), 0.5, 4).c1 +
                        coeff_c123(LambdaWeight::trapezoid(), 4, 0.5).c1;
  expect_rel(coeff_intro(iv).lambda1, halves, 1e-12);
}

TEST(Intro, MuNeedsQAboveOne) {
  EXPECT_THROW(coeff_intro(Interval::make(1, 2), 1.0), CoefficientError);
  EXPECT_NO_THROW(coeff_intro(Interval::make(1, 2)));
}

TEST(CoefficientSet, Contents) {
  const CoefficientSet s = coefficient_set_c123(LambdaWeight::midpoint(), 1, 2);
  EXPECT_EQ(s.origin, "thm22");
  EXPECT_EQ(s.values.size(), 3u);
  EXPECT_EQ(coefficient_set_intro(Interval::make(1, 2), 2.0).values.size(), 5u);
}
