#include "hconvex/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <thread>

#include "hconvex/bounds.hpp"
#include "hconvex/constants.hpp"
#include "hconvex/convexity.hpp"
#include "hconvex/numerics.hpp"

namespace hconvex {
namespace {

const std::set<std::string>& known_theorems() {
  static const std::set<std::string> names = {
      "thm14", "thm15", "thm22", "thm23", "thm24", "hh13", "classical", "identity"};
  return names;
}

bool uses(const SweepConfig& cfg, std::initializer_list<const char*> names) {
  for (const std::string& t : cfg.theorems) {
    for (const char* n : names) {
      if (t == n) return true;
    }
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

double log_uniform(std::uint64_t& state, double lo, double hi) {
  if (lo == hi) return lo;
  const double l = std::log(lo);
  return std::exp(l + unit(state) * (std::log(hi) - l));
}

enum class CaseKind { identity, oracle, thm14, thm15, thm22, thm23, thm24, hh13, classical };

const char* tag_of(CaseKind k) {
  switch (k) {
    case CaseKind::identity: return "identity";
    case CaseKind::oracle: return "oracle_c123";
    case CaseKind::thm14: return "thm14";
    case CaseKind::thm15: return "thm15";
    case CaseKind::thm22: return "thm22";
    case CaseKind::thm23: return "thm23";
    case CaseKind::thm24: return "thm24";
    case CaseKind::hh13: return "hh13";
    case CaseKind::classical: return "classical";
  }
  return "unknown";
}

struct Case {
  CaseKind kind;
  std::size_t fn;
  std::size_t iv;
  double lambda = std::numeric_limits<double>::quiet_NaN();
  double p = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
};

constexpr double kOracleTol = 1e-8;

double relative_error(double x, double ref) {
  return std::abs(x - ref) / std::max(1.0, std::abs(ref));
}

BoundVerdict oracle_verdict(const Interval& iv, LambdaWeight lambda,
                            const BoundOptions& opt) {
  const double l = lambda.value();
  const C123 fwd = coeff_c123(lambda, iv.a(), iv.b());
  const C123 rev = coeff_c123(lambda, iv.b(), iv.a());
  auto k = [&](Half h, TWeight w) {
    return t_kernel_integral(KernelKind::abs_over_affine_sq, l, 1.0, iv, h, w,
                             1e-2 * opt.quad_abs_tol, 1e-13)
        .value;
  };
  double worst = 0.0;
  worst = std::max(worst, relative_error(fwd.c1, k(Half::lower, TWeight::none)));
  worst = std::max(worst, relative_error(fwd.c2, k(Half::lower, TWeight::t)));
  worst = std::max(worst, relative_error(fwd.c3, k(Half::lower, TWeight::one_minus_t)));
  worst = std::max(worst, relative_error(rev.c1, k(Half::upper, TWeight::none)));
  worst = std::max(worst, relative_error(rev.c2, k(Half::upper, TWeight::one_minus_t)));
  worst = std::max(worst, relative_error(rev.c3, k(Half::upper, TWeight::t)));
  VerdictInputs in;
  in.a = iv.a();
  in.b = iv.b();
  in.lambda = l;
  return make_inequality_verdict("oracle_c123", worst, kOracleTol, 0.0, in);
}

std::vector<BoundVerdict> evaluate(const Case& c, const FunctionSpec& fs,
                                   const Interval& iv, const BoundOptions& opt) {
  switch (c.kind) {
    case CaseKind::identity:
      return {verify_identity(fs, iv, LambdaWeight::make(c.lambda), opt)};
    case CaseKind::oracle:
      return {oracle_verdict(iv, LambdaWeight::make(c.lambda), opt)};
    case CaseKind::thm14:
      return {bound_thm14(fs, iv, c.q, opt)};
    case CaseKind::thm15:
      return {bound_thm15(fs, iv, ExponentPair::holder(c.p, c.q), opt)};
    case CaseKind::thm22:
      return {bound_thm22(fs, iv, LambdaWeight::make(c.lambda), c.q, opt)};
    case CaseKind::thm23:
      return {bound_thm23(fs, iv, LambdaWeight::make(c.lambda),
                          ExponentPair::holder(c.p, c.q), opt)};
    case CaseKind::thm24:
      return {bound_thm24(fs, iv, LambdaWeight::make(c.lambda),
                          ExponentPair::holder(c.p, c.q), opt)};
    case CaseKind::hh13: {
      auto [l, r] = verify_hh_harmonic(fs, iv, opt);
      return {l, r};
    }
    case CaseKind::classical: {
      std::vector<BoundVerdict> out =
          verify_classical(fs, iv, ClassicalKind::hermite_hadamard, opt);
      std::vector<BoundVerdict> s = verify_classical(fs, iv, ClassicalKind::simpson, opt);
      out.insert(out.end(), s.begin(), s.end());
      return out;
    }
  }
  return {};
}

BoundVerdict error_verdict(const Case& c, const FunctionSpec& fs,
                           const Interval& iv, const std::string& what) {
  BoundVerdict v;
  v.theorem = tag_of(c.kind);
  v.lhs = v.rhs = v.slack = std::numeric_limits<double>::quiet_NaN();
  v.status = VerdictStatus::error;
  v.inputs = inputs_for(iv, fs);
  if (!std::isnan(c.lambda)) v.inputs.lambda = c.lambda;
  if (!std::isnan(c.p)) v.inputs.p = c.p;
  if (!std::isnan(c.q)) v.inputs.q = c.q;
  v.note = what;
  return v;
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (cfg.functions.empty()) throw ValidationError("sweep needs at least one function");
  for (const std::string& f : cfg.functions) (void)catalog_from_string(f);
  if (cfg.intervals.empty() && !cfg.sampler) {
    throw ValidationError("sweep needs explicit intervals or a sampler");
  }
  for (const auto& [a, b] : cfg.intervals) (void)Interval::make(a, b);
  if (cfg.sampler) {
    const IntervalSampler& s = *cfg.sampler;
    if (s.count == 0) throw ValidationError("sampler count must be positive");
    if (!(s.a_lo > 0.0) || !(s.a_hi >= s.a_lo) || !std::isfinite(s.a_hi)) {
      throw ValidationError("sampler a-range must satisfy 0 < lo <= hi");
    }
    if (!(s.ratio_lo > 1.0) || !(s.ratio_hi >= s.ratio_lo) || !std::isfinite(s.ratio_hi)) {
      throw ValidationError("sampler ratio-range must satisfy 1 < lo <= hi");
    }
  }
  if (cfg.theorems.empty()) throw ValidationError("sweep needs at least one theorem");
  for (const std::string& t : cfg.theorems) {
    if (!known_theorems().count(t)) throw ValidationError("unknown theorem '" + t + "'");
  }
  if (uses(cfg, {"thm22", "thm23", "thm24", "identity"}) || cfg.oracle_checks) {
    if (cfg.lambdas.empty()) throw ValidationError("selected checks need a lambda grid");
  }
  for (double l : cfg.lambdas) (void)LambdaWeight::make(l);
  if (uses(cfg, {"thm14", "thm22"}) && cfg.q_values.empty()) {
    throw ValidationError("power-mean bounds need q values");
  }
  for (double q : cfg.q_values) (void)ExponentPair::power_mean(q);
  if (uses(cfg, {"thm15", "thm23", "thm24"}) && cfg.holder_pairs.empty()) {
    throw ValidationError("Hölder bounds need (p, q) pairs");
  }
  for (const auto& [p, q] : cfg.holder_pairs) (void)ExponentPair::holder(p, q);
  if (cfg.threads == 0) throw ValidationError("threads must be at least 1");
  if (!(cfg.tolerances.quad > 0.0) || !(cfg.tolerances.ineq >= 0.0) ||
      !(cfg.tolerances.convexity >= 0.0)) {
    throw ValidationError("tolerances must be non-negative (quad positive)");
  }
}

std::vector<Interval> sample_intervals(const IntervalSampler& s,
                                       std::uint64_t seed) {
  std::uint64_t state = seed;
  std::vector<Interval> out;
  out.reserve(s.count);
  for (std::size_t i = 0; i < s.count; ++i) {
    const double a = log_uniform(state, s.a_lo, s.a_hi);
    const double ratio = log_uniform(state, s.ratio_lo, s.ratio_hi);
    out.push_back(Interval::make(a, a * ratio));
  }
  return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  validate(cfg);

  std::vector<FunctionSpec> fns;
  for (const std::string& f : cfg.functions) fns.push_back(catalog_from_string(f));
  std::vector<Interval> ivs;
  for (const auto& [a, b] : cfg.intervals) ivs.push_back(Interval::make(a, b));
  if (cfg.sampler) {
    std::vector<Interval> s = sample_intervals(*cfg.sampler, cfg.seed);
    ivs.insert(ivs.end(), s.begin(), s.end());
  }

  BoundOptions opt;
  opt.quad_abs_tol = cfg.tolerances.quad;
  opt.quad_rel_tol = cfg.tolerances.quad;
  opt.tol_ineq = cfg.tolerances.ineq;
  opt.convexity_tol = cfg.tolerances.convexity;

  std::vector<Case> cases;
  for (std::size_t fi = 0; fi < fns.size(); ++fi) {
    for (std::size_t ii = 0; ii < ivs.size(); ++ii) {
      if (cfg.oracle_checks && fi == 0) {
        for (double l : cfg.lambdas) cases.push_back({CaseKind::oracle, fi, ii, l});
      }
      for (const std::string& t : cfg.theorems) {
        if (t == "identity") {
          for (double l : cfg.lambdas) cases.push_back({CaseKind::identity, fi, ii, l});
        } else if (t == "thm22") {
          for (double l : cfg.lambdas)
            for (double q : cfg.q_values)
              cases.push_back({CaseKind::thm22, fi, ii, l, std::numeric_limits<double>::quiet_NaN(), q});
        } else if (t == "thm23" || t == "thm24") {
          const CaseKind k = t == "thm23" ? CaseKind::thm23 : CaseKind::thm24;
          for (double l : cfg.lambdas)
            for (const auto& [p, q] : cfg.holder_pairs) cases.push_back({k, fi, ii, l, p, q});
        } else if (t == "thm14") {
          for (double q : cfg.q_values)
            cases.push_back({CaseKind::thm14, fi, ii, 1.0, std::numeric_limits<double>::quiet_NaN(), q});
        } else if (t == "thm15") {
          for (const auto& [p, q] : cfg.holder_pairs)
            cases.push_back({CaseKind::thm15, fi, ii, 1.0, p, q});
        } else if (t == "hh13") {
          cases.push_back({CaseKind::hh13, fi, ii});
        } else if (t == "classical") {
          cases.push_back({CaseKind::classical, fi, ii});
        }
      }
    }
  }

  std::vector<std::vector<BoundVerdict>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const Case& c = cases[i];
      try {
        results[i] = evaluate(c, fns[c.fn], ivs[c.iv], opt);
      } catch (const std::exception& e) {
        results[i] = {error_verdict(c, fns[c.fn], ivs[c.iv], e.what())};
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(cfg.threads, cases.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  SweepReport rep;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (BoundVerdict& v : results[i]) rep.records.push_back({i, std::move(v)});
  }
  for (const SweepRecord& r : rep.records) {
    const BoundVerdict& v = r.verdict;
    TheoremSummary& s = rep.summary[v.theorem];
    if (s.total == 0) s.min_slack = std::numeric_limits<double>::quiet_NaN();
    ++s.total;
    switch (v.status) {
      case VerdictStatus::pass: ++s.pass; break;
      case VerdictStatus::fail: ++s.fail; break;
      case VerdictStatus::precondition_unmet: ++s.unmet; break;
      case VerdictStatus::error: ++s.fail; ++s.errors; break;
    }
    if (v.status == VerdictStatus::pass || v.status == VerdictStatus::fail) {
      if (std::isnan(s.min_slack) || v.slack < s.min_slack) s.min_slack = v.slack;
    }
    if (v.theorem == "identity" && std::isfinite(v.lhs) && std::isfinite(v.rhs)) {
      rep.identity_max_err = std::max(rep.identity_max_err, std::abs(v.lhs - v.rhs));
    }
    if (v.theorem == "oracle_c123" && std::isfinite(v.lhs)) {
      rep.oracle_max_err = std::max(rep.oracle_max_err, v.lhs);
    }
  }
  return rep;
}

}  // namespace hconvex
