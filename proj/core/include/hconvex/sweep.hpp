#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hconvex/domain.hpp"

namespace hconvex {

/// Log-uniform sampler: a over [a_lo, a_hi], b/a over [ratio_lo, ratio_hi].
struct IntervalSampler {
  std::size_t count = 0;
  double a_lo = 0.1;
  double a_hi = 10.0;
  double ratio_lo = 1.0 + 1e-3;
  double ratio_hi = 1e2;
};

struct SweepTolerances {
  double quad = 1e-10;
  double ineq = 1e-9;
  double convexity = 1e-12;
};

struct SweepConfig {
  /// Catalog specs, e.g. "linear", "power:1", "constant:2".
  std::vector<std::string> functions;
  std::vector<std::pair<double, double>> intervals;
  std::optional<IntervalSampler> sampler;
  std::vector<double> lambdas;
  /// q >= 1 values for the power-mean bounds (thm14, thm22).
  std::vector<double> q_values;
  /// Conjugate (p, q) pairs for the Hölder bounds (thm15, thm23, thm24).
  std::vector<std::pair<double, double>> holder_pairs;
  /// Subset of thm14, thm15, thm22, thm23, thm24, hh13, classical, identity.
  std::vector<std::string> theorems;
  std::uint64_t seed = 0;
  SweepTolerances tolerances;
  /// Also compare the closed-form C1/C2/C3 against quadrature for every
  /// (interval, lambda) and report the largest relative error.
  bool oracle_checks = false;
  unsigned threads = 1;
};

/// Throws ValidationError describing the first problem found.
void validate(const SweepConfig& cfg);

/// Deterministic for a given seed: a splitmix64 stream, not <random>
/// distributions, so results agree across standard libraries.
std::vector<Interval> sample_intervals(const IntervalSampler& s,
                                       std::uint64_t seed);

struct SweepRecord {
  std::size_t case_index = 0;
  BoundVerdict verdict;
};

struct TheoremSummary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;  // includes errors
  std::size_t unmet = 0;
  std::size_t errors = 0;
  double min_slack = 0.0;  // over passed and failed verdicts; NaN if none
};

struct SweepReport {
  std::vector<SweepRecord> records;
  std::map<std::string, TheoremSummary> summary;
  double identity_max_err = 0.0;
  double oracle_max_err = 0.0;
};

/// Runs every case. Module errors are recorded per case with status
/// VerdictStatus::error and never abort the sweep.
SweepReport run_sweep(const SweepConfig& cfg);

}  // namespace hconvex
