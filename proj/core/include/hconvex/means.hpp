#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hconvex/bounds.hpp"
#include "hconvex/domain.hpp"

namespace hconvex {

// Two-argument special means of 0 < a < b.
double arithmetic_mean(double a, double b);
double geometric_mean(double a, double b);
double harmonic_mean(double a, double b);
/// (b - a) / (ln b - ln a), evaluated through log1p((b - a) / a).
double logarithmic_mean(double a, double b);
/// (1/e) (b^b / a^a)^{1/(b-a)}, evaluated in log space.
double identric_mean(double a, double b);
/// ((b^{p+1} - a^{p+1}) / ((p+1)(b-a)))^{1/p} for p not in {-1, 0}.
double p_logarithmic_mean(double a, double b, double p);

struct MeanSet {
  double A;
  double G;
  double H;
  double L;
  double I;
  std::map<double, double> Lp;
};

/// All six means. p_list may not contain -1 or 0 (those are L and I).
MeanSet compute_means(const Interval& iv, std::span<const double> p_list = {});

/// Verdicts for H <= G <= L <= I <= A and for monotonicity of L_p over the
/// sorted p grid, with L spliced in at p = -1 and I at p = 0. Each link
/// passes iff larger - smaller >= -rel_tol * A.
std::vector<BoundVerdict> check_mean_relations(const Interval& iv,
                                               std::span<const double> p_grid,
                                               double rel_tol = 1e-12);

/// Comparison of one special-means proposition in its printed mean form
/// against the inequality it is derived from, evaluated directly with the
/// matching catalog function.
struct PropositionResult {
  int id = 0;
  std::string source;    // thm22 | thm23 | thm24
  std::string function;  // catalog name
  double printed_lhs = 0.0;
  double printed_rhs = 0.0;
  double direct_lhs = 0.0;
  double direct_rhs = 0.0;
  double lhs_delta = 0.0;  // |printed_lhs - direct_lhs|
  double rhs_delta = 0.0;  // |printed_rhs - direct_rhs|, NaN if undefined
  /// Printed lhs within 1e-10 and printed rhs within 1e-9 (both relative to
  /// max(1, |direct|)) of the direct evaluation.
  bool printed_form_matches = false;
  BoundVerdict printed_verdict;  // printed lhs vs printed rhs
  BoundVerdict theorem_verdict;  // bounds module on the catalog function
};

inline constexpr double kPropositionLhsTol = 1e-10;
inline constexpr double kPropositionRhsTol = 1e-9;

/// id in 1..12. ids 7-9 need n in (-1, inf) \ {0}. ids 1, 4, 7, 10 take
/// power-mean exponents; the others take Hölder exponents.
PropositionResult check_proposition(int id, const Interval& iv,
                                    LambdaWeight lambda,
                                    const ExponentPair& exps,
                                    std::optional<double> n = std::nullopt,
                                    const BoundOptions& opt = {});

}  // namespace hconvex
