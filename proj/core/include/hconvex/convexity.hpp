#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hconvex/domain.hpp"

namespace hconvex {

inline constexpr int kConvexityGrid = 33;
inline constexpr double kConvexityTol = 1e-12;

/// Result of an empirical convexity scan.
///
/// worst_violation is the largest value of
///   (lhs - rhs) / max(1, |t g(y)| + |(1-t) g(x)|)
/// over the sampled triples, so it is scale free and <= 0 (up to rounding)
/// for a convex g.
struct ConvexityReport {
  bool is_harmonically_convex = false;
  double worst_violation = 0.0;
  std::size_t samples = 0;
  double worst_x = 0.0;
  double worst_y = 0.0;
  double worst_t = 0.0;
};

/// Checks g(xy / (t x + (1-t) y)) <= t g(y) + (1-t) g(x) on all pairs of a
/// grid_n-point log-spaced grid over the interval, t in {k/16 : k = 0..16}.
ConvexityReport check_harmonic_convexity(const RealFunction& g,
                                         const Interval& iv,
                                         int grid_n = kConvexityGrid,
                                         double tol = kConvexityTol);

/// Same scan for ordinary convexity, g(t x + (1-t) y) <= t g(x) + (1-t) g(y).
/// is_harmonically_convex carries the ordinary-convexity answer here.
ConvexityReport check_convexity(const RealFunction& g, const Interval& iv,
                                int grid_n = kConvexityGrid,
                                double tol = kConvexityTol);

/// Is |f'|^q harmonically convex on the interval? Results are cached per
/// (function name, interval, q, grid, tol); the cache is thread safe.
bool certify_derivative_power(const FunctionSpec& fs, const Interval& iv,
                              double q, int grid_n = kConvexityGrid,
                              double tol = kConvexityTol);

/// Is f itself harmonically convex on the interval? Cached like above.
bool certify_harmonic(const FunctionSpec& fs, const Interval& iv,
                      int grid_n = kConvexityGrid, double tol = kConvexityTol);

/// Is f convex in the ordinary sense on the interval? Cached like above.
bool certify_convex(const FunctionSpec& fs, const Interval& iv,
                    int grid_n = kConvexityGrid, double tol = kConvexityTol);

// Test-function catalog. Every entry has an exact derivative and a cheap
// sup |f''''| over any interval.
FunctionSpec catalog_constant(double c);
FunctionSpec catalog_linear();                 // f(x) = x
FunctionSpec catalog_square();                 // f(x) = x^2
FunctionSpec catalog_power(double n);          // f(x) = x^{n+2}, n in (-1, inf) \ {0}
FunctionSpec catalog_square_log();             // f(x) = x^2 ln x

/// Looks up a catalog entry by name: "linear", "square", "square_log",
/// "constant" (param = c, default 1) or "power" (param = n, required).
FunctionSpec catalog(std::string_view name, std::optional<double> param = {});

/// Parses "name" or "name:param", e.g. "power:-0.5" or "constant:2".
FunctionSpec catalog_from_string(std::string_view spec);

/// Catalog lookup that refuses to hand out a function whose |f'|^q is not
/// certified harmonically convex on the interval, unless allow_uncertified.
FunctionSpec catalog_for_use(std::string_view spec, const Interval& iv,
                             double q, bool allow_uncertified = false);

}  // namespace hconvex
