#pragma once

#include <utility>
#include <vector>

#include "hconvex/convexity.hpp"
#include "hconvex/domain.hpp"
#include "hconvex/numerics.hpp"

namespace hconvex {

struct BoundOptions {
  double quad_abs_tol = kDefaultAbsTol;
  double quad_rel_tol = kDefaultRelTol;
  /// Inequality verdicts pass iff rhs - lhs >= -tol_ineq. The chains that
  /// compare raw function values (hh13, classical) use tol_ineq * scale with
  /// the same scale as tol_identity.
  double tol_ineq = 1e-9;
  /// Identity verdicts pass iff |lhs - rhs| <= tol_identity * scale, where
  /// scale = max(1, |f(a)|, |f(b)|, |f(2ab/(a+b))|).
  double tol_identity = 1e-8;
  /// Scan |f'|^q (or f) for the convexity hypothesis and downgrade the verdict
  /// to precondition_unmet when the scan fails.
  bool check_preconditions = true;
  int convexity_grid = kConvexityGrid;
  double convexity_tol = kConvexityTol;
};

/// Pieces of the deviation functional
///   (1-l) f(2ab/(a+b)) + l (f(a)+f(b))/2 - (ab/(b-a)) int_a^b f(x)/x^2 dx.
struct DeviationParts {
  double weighted_value;
  double mean_integral;
  double deviation;  // |weighted_value - mean_integral|
};

DeviationParts lhs_deviation(const FunctionSpec& fs, const Interval& iv,
                             LambdaWeight lambda, const BoundOptions& opt = {});

/// Both sides of the integral identity
///   weighted_value - mean_integral
///     = ab(b-a)/2 [ int_0^{1/2} (l-2t)/A_t^2 f'(ab/A_t) dt
///                 + int_{1/2}^1 (2-l-2t)/A_t^2 f'(ab/A_t) dt ].
/// lhs/rhs hold the two sides, slack = -|lhs - rhs|.
BoundVerdict verify_identity(const FunctionSpec& fs, const Interval& iv,
                             LambdaWeight lambda, const BoundOptions& opt = {});

/// Power-mean bound, q >= 1, built from coeff_c123 at (a, b) and (b, a).
BoundVerdict bound_thm22(const FunctionSpec& fs, const Interval& iv,
                         LambdaWeight lambda, double q,
                         const BoundOptions& opt = {});

/// Hölder bound with the numeric kernel integral and the quarter-averaged
/// derivative powers at the harmonic midpoint and the endpoints.
BoundVerdict bound_thm23(const FunctionSpec& fs, const Interval& iv,
                         LambdaWeight lambda, const ExponentPair& exps,
                         const BoundOptions& opt = {});

/// Hölder bound with the plain kernel |l - 2t|^p and the C5/C6 weights.
BoundVerdict bound_thm24(const FunctionSpec& fs, const Interval& iv,
                         LambdaWeight lambda, const ExponentPair& exps,
                         const BoundOptions& opt = {});

/// Trapezoid bound from lambda1..lambda3, q >= 1.
BoundVerdict bound_thm14(const FunctionSpec& fs, const Interval& iv, double q,
                         const BoundOptions& opt = {});

/// Trapezoid bound from mu1, mu2 (Hölder mode).
BoundVerdict bound_thm15(const FunctionSpec& fs, const Interval& iv,
                         const ExponentPair& exps, const BoundOptions& opt = {});

/// Harmonic Hermite-Hadamard chain
///   f(2ab/(a+b)) <= ab/(b-a) int f/x^2 <= (f(a)+f(b))/2.
/// Returns (left inequality, right inequality).
std::pair<BoundVerdict, BoundVerdict> verify_hh_harmonic(
    const FunctionSpec& fs, const Interval& iv, const BoundOptions& opt = {});

enum class ClassicalKind { hermite_hadamard, simpson };

/// Classical baselines with the plain mean (1/(b-a)) int f. Hermite-Hadamard
/// yields two verdicts, Simpson one (against ||f''''|| (b-a)^4 / 2880).
std::vector<BoundVerdict> verify_classical(const FunctionSpec& fs,
                                           const Interval& iv,
                                           ClassicalKind kind,
                                           const BoundOptions& opt = {});

}  // namespace hconvex
