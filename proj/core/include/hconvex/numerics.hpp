#pragma once

#include <cstddef>

#include "hconvex/domain.hpp"

namespace hconvex {

inline constexpr double kDefaultAbsTol = 1e-10;
inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr std::size_t kMaxPanels = 1'000'000;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, >= 0
  std::size_t subdivisions = 1; // panels in the final partition
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature of f over [lo, hi].
///
/// Bisects the panel with the largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Throws
/// QuadratureError if f returns a non-finite value or the panel cap is hit.
QuadratureResult integrate_adaptive(const RealFunction& f, double lo, double hi,
                                    double abs_tol = kDefaultAbsTol,
                                    double rel_tol = kDefaultRelTol,
                                    std::size_t max_panels = kMaxPanels);

enum class KernelKind {
  abs_over_affine_sq,   // |k(t)| / A_t^2
  pow_over_affine_2p,   // |k(t)|^p / A_t^{2p}
  pow_plain,            // |k(t)|^p
  affine_pow_only,      // 1 / A_t^{2p}  (lambda unused)
};

/// Lower half is t in [0, 1/2] with k(t) = lambda - 2t; upper half is
/// t in [1/2, 1] with k(t) = 2 - lambda - 2t.
enum class Half { lower, upper };

enum class TWeight { none, t, one_minus_t };

/// Weighted kernel integral over one half of [0, 1] with A_t = t b + (1-t) a.
/// The kink of |k(t)| (t = lambda/2 or 1 - lambda/2) is always a panel
/// boundary.
QuadratureResult t_kernel_integral(KernelKind kind, double lambda, double p,
                                   const Interval& iv, Half half, TWeight weight,
                                   double abs_tol = kDefaultAbsTol,
                                   double rel_tol = 1e-12);

/// Same integral with A_t = t v + (1-t) u for an arbitrary ordered pair of
/// positive reals (u > v allowed). With u > v this is the mirrored
/// ("swapped-argument") form of the lower-half integrals.
QuadratureResult t_kernel_integral(KernelKind kind, double lambda, double p,
                                   double u, double v, Half half,
                                   TWeight weight,
                                   double abs_tol = kDefaultAbsTol,
                                   double rel_tol = 1e-12);

}  // namespace hconvex
