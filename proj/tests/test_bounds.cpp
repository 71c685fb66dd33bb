#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hconvex/bounds.hpp"
#include "hconvex/constants.hpp"
#include "hconvex/convexity.hpp"
#include "oracle.hpp"

using namespace hconvex;

TEST(Deviation, LinearTrapezoidOnOneToE) {
  const double e = std::numbers::e;
  const DeviationParts d =
      lhs_deviation(catalog_linear(), Interval::make(1, e), LambdaWeight::trapezoid());
  EXPECT_NEAR(d.weighted_value, (1 + e) / 2, 1e-12);
  EXPECT_NEAR(d.mean_integral, e / (e - 1), 1e-10);
  EXPECT_NEAR(d.mean_integral, oracle::mean_integral([](double x) { return x; }, 1, e), 1e-10);
  EXPECT_NEAR(d.deviation, 0.277164, 1e-6);
}

TEST(Deviation, SquareAndConstant) {
  EXPECT_NEAR(lhs_deviation(catalog_square(), Interval::make(1, 2), LambdaWeight::make(0.7))
                  .mean_integral,
              2.0, 1e-10);
  EXPECT_NEAR(lhs_deviation(catalog_constant(4.0), Interval::make(0.3, 7), LambdaWeight::simpson())
                  .deviation,
              0.0, 1e-12);
}

TEST(Identity, ResidualsAreTiny) {
  EXPECT_TRUE(verify_identity(catalog_square(), Interval::make(1, 2), LambdaWeight::simpson())
                  .passed());
  EXPECT_TRUE(verify_identity(catalog_square_log(), Interval::make(0.5, 3),
                              LambdaWeight::midpoint())
                  .passed());
  const BoundVerdict c =
      verify_identity(catalog_constant(1.0), Interval::make(1, 5), LambdaWeight::trapezoid());
  EXPECT_NEAR(c.lhs, 0.0, 1e-13);
  EXPECT_EQ(c.rhs, 0.0);
}

TEST(Identity, AgreesWithIndependentOracle) {
  oracle::Rng rng(99);
  const FunctionSpec fs = catalog("power", 1.0);
  for (int i = 0; i < 10; ++i) {
    const double a = rng.log_uniform(0.2, 5);
    const double b = a * rng.log_uniform(1.01, 10);
    const double lam = rng.uniform(0, 1);
    const BoundVerdict v = verify_identity(fs, Interval::make(a, b), LambdaWeight::make(lam));
    // Left side straight from the definition via the oracle.
    const double h = 2 * a * b / (a + b);
    const double direct = (1 - lam) * fs.f(h) + lam * (fs.f(a) + fs.f(b)) / 2 -
                          oracle::mean_integral(fs.f, a, b);
    EXPECT_NEAR(v.lhs, direct, 1e-9 * std::max(1.0, std::abs(fs.f(b))));
    EXPECT_TRUE(v.passed());
  }
}

TEST(PowerMeanBound, LinearTrapezoidRhs) {
  const BoundVerdict v =
      bound_thm22(catalog_linear(), Interval::make(1, 2), LambdaWeight::trapezoid(), 1.0);
  const double want = coeff_c123(LambdaWeight::trapezoid(), 1, 2).c1 +
                      coeff_c123(LambdaWeight::trapezoid(), 2, 1).c1;
  EXPECT_NEAR(v.rhs, want, 1e-13);
  EXPECT_TRUE(v.passed());
  EXPECT_GT(v.slack, 0);
}

TEST(PowerMeanBound, SquareSimpsonPasses) {
  const BoundVerdict v =
      bound_thm22(catalog_square(), Interval::make(1, 2), LambdaWeight::make(0.3333333333), 2.0);
  EXPECT_TRUE(v.passed());
  EXPECT_EQ(v.theorem, "thm22");
}

TEST(HolderSandwichBound, LinearMidpointRhs) {
  const ExponentPair e = ExponentPair::holder(2, 2);
  const BoundVerdict v = bound_thm23(catalog_linear(), Interval::make(1, 2),
                                     LambdaWeight::midpoint(), e);
  const double want = std::sqrt(0.5) * (std::sqrt(oracle::c1_holder(0, 2, 1, 2)) +
                                        std::sqrt(oracle::c1_holder(0, 2, 2, 1)));
  EXPECT_NEAR(v.rhs, want, 1e-9);
  EXPECT_TRUE(v.passed());
}

TEST(HolderKernelBound, SquareTrapezoid) {
  const BoundVerdict v = bound_thm24(catalog_square(), Interval::make(1, 2),
                                     LambdaWeight::trapezoid(), ExponentPair::holder(2, 2));
  EXPECT_TRUE(v.passed());
  EXPECT_GT(v.slack, 0);
}

TEST(TrapezoidPowerMeanBound, LinearOnOneTwo) {
  const BoundVerdict v = bound_thm14(catalog_linear(), Interval::make(1, 2), 1.0);
  EXPECT_NEAR(v.lhs, 1.5 - 2 * std::log(2.0), 1e-10);
  EXPECT_NEAR(v.rhs, 0.264433928687233, 1e-12);
  EXPECT_TRUE(v.passed());
}

TEST(TrapezoidHolderBound, RhsShrinksAsIntervalCloses) {
  const ExponentPair e = ExponentPair::holder(2, 2);
  EXPECT_TRUE(bound_thm15(catalog_linear(), Interval::make(1, 2), e).passed());
  double prev = bound_thm15(catalog_linear(), Interval::make(1, 1.5), e).rhs;
  for (double b : {1.1, 1.01}) {
    const double r = bound_thm15(catalog_linear(), Interval::make(1, b), e).rhs;
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(AllBounds, ConstantGivesZeroBothSides) {
  const FunctionSpec c = catalog_constant(-2.0);
  const Interval iv = Interval::make(0.4, 3);
  const ExponentPair h = ExponentPair::holder(3, 1.5);
  for (const BoundVerdict& v :
       {bound_thm22(c, iv, LambdaWeight::simpson(), 2), bound_thm23(c, iv, LambdaWeight::simpson(), h),
        bound_thm24(c, iv, LambdaWeight::simpson(), h), bound_thm14(c, iv, 1),
        bound_thm15(c, iv, h)}) {
    EXPECT_NEAR(v.lhs, 0.0, 1e-12) << v.theorem;
    EXPECT_EQ(v.rhs, 0.0) << v.theorem;
    EXPECT_TRUE(v.passed());
  }
  auto [l, r] = verify_hh_harmonic(c, iv);
  EXPECT_LE(std::abs(l.slack), 1e-12);
  EXPECT_LE(std::abs(r.slack), 1e-12);
}

TEST(HarmonicHH, LinearAndSquare) {
  auto [l, r] = verify_hh_harmonic(catalog_linear(), Interval::make(1, 2));
  EXPECT_NEAR(l.lhs, 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(l.rhs, 2 * std::log(2.0), 1e-10);
  EXPECT_NEAR(r.rhs, 1.5, 1e-14);
  EXPECT_TRUE(l.passed() && r.passed());
  auto [l2, r2] = verify_hh_harmonic(catalog_square(), Interval::make(1, 2));
  EXPECT_NEAR(l2.lhs, 16.0 / 9.0, 1e-14);
  EXPECT_NEAR(l2.rhs, 2.0, 1e-10);
  EXPECT_NEAR(r2.rhs, 2.5, 1e-14);
}

TEST(Preconditions, UncertifiedIsReportedNotFailed) {
  const Interval iv = Interval::make(0.3, 1.0);  // contains e^{-1/2}
  const BoundVerdict v = bound_thm22(catalog_square_log(), iv, LambdaWeight::midpoint(), 1.0);
  EXPECT_EQ(v.status, VerdictStatus::precondition_unmet);
  EXPECT_FALSE(v.note.empty());
  BoundOptions off;
  off.check_preconditions = false;
  EXPECT_NE(bound_thm22(catalog_square_log(), iv, LambdaWeight::midpoint(), 1.0, off).status,
            VerdictStatus::precondition_unmet);
}

TEST(Classical, HermiteHadamardAndSimpson) {
  const std::vector<BoundVerdict> lin =
      verify_classical(catalog_linear(), Interval::make(1, 3), ClassicalKind::hermite_hadamard);
  ASSERT_EQ(lin.size(), 2u);
  for (const BoundVerdict& v : lin) EXPECT_NEAR(v.slack, 0.0, 1e-12);
  const std::vector<BoundVerdict> sq =
      verify_classical(catalog_square(), Interval::make(1, 2), ClassicalKind::hermite_hadamard);
  EXPECT_NEAR(sq[0].lhs, 2.25, 1e-14);
  EXPECT_NEAR(sq[0].rhs, 7.0 / 3.0, 1e-12);
  EXPECT_NEAR(sq[1].rhs, 2.5, 1e-14);
  const std::vector<BoundVerdict> s =
      verify_classical(catalog("power", 2.0), Interval::make(0.5, 1.5), ClassicalKind::simpson);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].rhs, 24.0 / 2880.0, 1e-15);
  EXPECT_TRUE(s[0].passed());
  FunctionSpec bare = FunctionSpec::make("cube", [](double x) { return x * x * x; },
                                         [](double x) { return 3 * x * x; });
  EXPECT_THROW(verify_classical(bare, Interval::make(1, 2), ClassicalKind::simpson),
               ValidationError);
}
