#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "hconvex/convexity.hpp"
#include "oracle.hpp"

using namespace hconvex;

TEST(HarmonicConvexity, BasicCases) {
  const Interval iv = Interval::make(1, 2);
  const ConvexityReport c = check_harmonic_convexity([](double) { return 3.0; }, iv);
  EXPECT_TRUE(c.is_harmonically_convex);
  EXPECT_EQ(c.worst_violation, 0.0);
  EXPECT_GT(c.samples, 0u);
  EXPECT_TRUE(check_harmonic_convexity([](double x) { return x; }, iv).is_harmonically_convex);
  const ConvexityReport neg = check_harmonic_convexity([](double x) { return -x; }, iv);
  EXPECT_FALSE(neg.is_harmonically_convex);
  EXPECT_GT(neg.worst_violation, 0.0);
}

TEST(HarmonicConvexity, SquareLogDerivativeAroundItsZero) {
  const FunctionSpec sl = catalog_square_log();
  auto g = [&](double x) { return std::abs(sl.f_prime(x)); };
  const double z = std::exp(-0.5);
  EXPECT_FALSE(check_harmonic_convexity(g, Interval::make(0.3, 1.0)).is_harmonically_convex);
  EXPECT_FALSE(certify_derivative_power(sl, Interval::make(z * 0.8, z * 1.3), 1.0));
  EXPECT_TRUE(certify_derivative_power(sl, Interval::make(1.0, 3.0), 1.0));
  EXPECT_TRUE(certify_derivative_power(sl, Interval::make(1.0, 3.0), 2.0));
}

TEST(HarmonicConvexity, FinerGridFindsAtLeastAsMuch) {
  auto g = [](double x) { return std::sin(4 * x); };
  const Interval iv = Interval::make(0.5, 3);
  double prev = -std::numeric_limits<double>::infinity();
  for (int n : {5, 9, 17, 33}) {
    // grids with n = 2^k + 1 nest, so the worst violation cannot shrink
    const double w = check_harmonic_convexity(g, iv, n).worst_violation;
    EXPECT_GE(w, prev);
    prev = w;
  }
}

TEST(HarmonicConvexity, PowersOfX) {
  oracle::Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    const double r = rng.uniform(0.1, 4);
    const double a = rng.log_uniform(0.1, 5);
    const Interval iv = Interval::make(a, a * rng.log_uniform(1.01, 20));
    EXPECT_TRUE(check_harmonic_convexity([&](double x) { return std::pow(x, r); }, iv)
                    .is_harmonically_convex)
        << "r=" << r;
  }
}

TEST(HarmonicConvexity, ErrorsOnBadInput) {
  const Interval iv = Interval::make(1, 2);
  EXPECT_THROW(check_harmonic_convexity([](double x) { return x; }, iv, 2), ValidationError);
  EXPECT_THROW(check_harmonic_convexity(
                   [](double x) { return x > 1.5 ? std::numeric_limits<double>::infinity() : x; }, iv),
               ValidationError);
}

TEST(OrdinaryConvexity, Basic) {
  const Interval iv = Interval::make(0.5, 3);
  EXPECT_TRUE(check_convexity([](double x) { return x * x; }, iv).is_harmonically_convex);
  EXPECT_FALSE(check_convexity([](double x) { return std::log(x); }, iv).is_harmonically_convex);
}

TEST(Catalog, Entries) {
  EXPECT_EQ(catalog("linear").f_prime(3.0), 1.0);
  EXPECT_EQ(catalog_square().f(3.0), 9.0);
  EXPECT_NEAR(catalog("power", 1.0).f(2.0), 8.0, 1e-14);
  EXPECT_NEAR(catalog_from_string("power:-0.5").f(4.0), 8.0, 1e-14);
  EXPECT_EQ(catalog_from_string("constant:2.5").f(7.0), 2.5);
  EXPECT_THROW(catalog("power", 0.0), ValidationError);
  EXPECT_THROW(catalog("power", -1.0), ValidationError);
  EXPECT_THROW(catalog("power"), ValidationError);
  EXPECT_THROW(catalog("cosine"), ValidationError);
  EXPECT_TRUE(catalog_linear().derivative_power_always_convex);
}

TEST(Catalog, FourthDerivativeSupremum) {
  const Interval iv = Interval::make(0.5, 2);
  EXPECT_NEAR(catalog_square_log().fourth_derivative_sup(iv), 8.0, 1e-12);
  // x^4: f'''' = 24 everywhere
  EXPECT_NEAR(catalog("power", 2.0).fourth_derivative_sup(iv), 24.0, 1e-12);
  EXPECT_EQ(catalog_square().fourth_derivative_sup(iv), 0.0);
}

TEST(Catalog, CertifiedForUse) {
  const Interval iv = Interval::make(1, 2);
  EXPECT_NO_THROW(catalog_for_use("square", iv, 2.0));
  EXPECT_THROW(catalog_for_use("square_log", Interval::make(0.3, 1.0), 1.0), ValidationError);
  EXPECT_NO_THROW(catalog_for_use("square_log", Interval::make(0.3, 1.0), 1.0, true));
}
