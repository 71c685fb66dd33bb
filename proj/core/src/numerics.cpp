#include "hconvex/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace hconvex {
namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.error < y.error;
  }
};

[[noreturn]] void throw_non_finite(double x, double best) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "non-finite integrand at x=" << x;
  throw QuadratureError(QuadratureError::Kind::non_finite_integrand,
                        msg.str(), best, x);
}

double eval(const RealFunction& f, double x, double best) {
  const double y = f(x);
  if (!std::isfinite(y)) throw_non_finite(x, best);
  return y;
}

// One 15-point Gauss-Kronrod panel with the QUADPACK error heuristic.
Panel gk15(const RealFunction& f, double lo, double hi, double best) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = eval(f, center, best);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::abs(res_k);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = eval(f, center - dx, best);
    f2[j] = eval(f, center + dx, best);
    const double s = f1[j] + f2[j];
    res_k += kWgk[j] * s;
    res_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) res_g += kWg[j / 2] * s;
  }
  const double mean = 0.5 * res_k;
  double res_asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    res_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }
  res_k *= half;
  res_abs *= std::abs(half);
  res_asc *= std::abs(half);
  double err = std::abs((res_k - res_g * half));
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * res_abs, err);
  }
  return Panel{lo, hi, res_k, err};
}

bool splittable(const Panel& p) {
  const double scale = std::max(std::abs(p.lo), std::abs(p.hi));
  return (p.hi - p.lo) > 1000.0 * kEps * scale;
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFunction& f, double lo, double hi,
                                    double abs_tol, double rel_tol,
                                    std::size_t max_panels) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ValidationError("integration bounds require finite lo < hi");
  }
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw ValidationError("integration tolerances must be positive");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();

  std::priority_queue<Panel, std::vector<Panel>, ByError> active;
  std::vector<Panel> frozen;
  Panel first = gk15(f, lo, hi, nan);
  double total = first.value;
  double total_err = first.error;
  active.push(first);
  std::size_t panels = 1;

  auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

  while (total_err > target()) {
    if (active.empty()) {
      std::ostringstream msg;
      msg << "tolerance not reached: panels exhausted at round-off scale, "
             "error estimate "
          << total_err;
      throw QuadratureError(QuadratureError::Kind::tolerance_not_reached,
                            msg.str(), total, nan);
    }
    if (panels >= max_panels) {
      std::ostringstream msg;
      msg << "tolerance not reached after " << panels
          << " panels, error estimate " << total_err;
      throw QuadratureError(QuadratureError::Kind::tolerance_not_reached,
                            msg.str(), total, nan);
    }
    Panel worst = active.top();
    active.pop();
    if (!splittable(worst)) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel left = gk15(f, worst.lo, mid, total);
    Panel right = gk15(f, mid, worst.hi, total);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++panels;
  }

  // Re-sum from the partition so the result does not carry the drift of the
  // running updates.
  double value = 0.0;
  double err = 0.0;
  std::vector<Panel> all(frozen);
  while (!active.empty()) {
    all.push_back(active.top());
    active.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  for (const Panel& p : all) {
    value += p.value;
    err += p.error;
  }
  return QuadratureResult{value, err, panels};
}

namespace {

double kernel_value(KernelKind kind, double lambda, double p, double u,
                    double v, Half half, TWeight weight, double t) {
  const double k = (half == Half::lower) ? lambda - 2.0 * t
                                         : 2.0 - lambda - 2.0 * t;
  const double at = t * v + (1.0 - t) * u;
  double core = 0.0;
  switch (kind) {
    case KernelKind::abs_over_affine_sq:
      core = std::abs(k) / (at * at);
      break;
    case KernelKind::pow_over_affine_2p:
      core = std::pow(std::abs(k), p) * std::exp(-2.0 * p * std::log(at));
      break;
    case KernelKind::pow_plain:
      core = std::pow(std::abs(k), p);
      break;
    case KernelKind::affine_pow_only:
      core = std::exp(-2.0 * p * std::log(at));
      break;
  }
  switch (weight) {
    case TWeight::none: return core;
    case TWeight::t: return t * core;
    case TWeight::one_minus_t: return (1.0 - t) * core;
  }
  return core;
}

}  // namespace

QuadratureResult t_kernel_integral(KernelKind kind, double lambda, double p,
                                   double u, double v, Half half,
                                   TWeight weight, double abs_tol,
                                   double rel_tol) {
  if (!std::isfinite(u) || !std::isfinite(v) || u <= 0.0 || v <= 0.0) {
    throw ValidationError("kernel pair requires u, v > 0");
  }
  if (u == v) throw ValidationError("kernel pair requires u != v");
  if (kind != KernelKind::affine_pow_only &&
      (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0)) {
    throw ValidationError("lambda must lie in [0, 1]");
  }
  const bool needs_p = kind != KernelKind::abs_over_affine_sq;
  if (needs_p && (!std::isfinite(p) || p <= 0.0)) {
    throw ValidationError("kernel exponent must be positive");
  }
  if ((kind == KernelKind::pow_over_affine_2p || kind == KernelKind::pow_plain) &&
      p < 1.0) {
    throw ValidationError("kernel exponent p must be >= 1");
  }

  const double lo = (half == Half::lower) ? 0.0 : 0.5;
  const double hi = (half == Half::lower) ? 0.5 : 1.0;
  const double kink = (half == Half::lower) ? 0.5 * lambda : 1.0 - 0.5 * lambda;

  auto integrand = [=](double t) {
    return kernel_value(kind, lambda, p, u, v, half, weight, t);
  };

  const bool split = kind != KernelKind::affine_pow_only && kink > lo && kink < hi;
  if (!split) return integrate_adaptive(integrand, lo, hi, abs_tol, rel_tol);

  // Each piece gets half the budget so the sum honours abs_tol.
  QuadratureResult left =
      integrate_adaptive(integrand, lo, kink, 0.5 * abs_tol, rel_tol);
  QuadratureResult right =
      integrate_adaptive(integrand, kink, hi, 0.5 * abs_tol, rel_tol);
  return QuadratureResult{left.value + right.value,
                          left.error_estimate + right.error_estimate,
                          left.subdivisions + right.subdivisions};
}

QuadratureResult t_kernel_integral(KernelKind kind, double lambda, double p,
                                   const Interval& iv, Half half,
                                   TWeight weight, double abs_tol,
                                   double rel_tol) {
  return t_kernel_integral(kind, lambda, p, iv.a(), iv.b(), half, weight,
                           abs_tol, rel_tol);
}

}  // namespace hconvex
