#include "hconvex/convexity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <limits>
#include <vector>

namespace hconvex {
namespace {

std::vector<double> log_grid(const Interval& iv, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double lo = std::log(iv.a());
  const double step = (std::log(iv.b()) - lo) / (n - 1);
  for (int i = 0; i < n; ++i) xs[i] = std::exp(lo + step * i);
  xs.front() = iv.a();
  xs.back() = iv.b();
  return xs;
}

double checked(const RealFunction& g, double x) {
  const double y = g(x);
  if (!std::isfinite(y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-finite function value at x=" << x;
    throw ValidationError(msg.str());
  }
  return y;
}

template <class Combine>
ConvexityReport scan(const RealFunction& g, const Interval& iv, int grid_n,
                     double tol, Combine point_of) {
  if (grid_n < 3) throw ValidationError("convexity grid needs grid_n >= 3");
  const std::vector<double> xs = log_grid(iv, grid_n);
  std::vector<double> gs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) gs[i] = checked(g, xs[i]);

  ConvexityReport rep;
  rep.worst_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      for (int k = 0; k <= 16; ++k) {
        const double t = k / 16.0;
        const double x = xs[i];
        const double y = xs[j];
        const double lhs = checked(g, point_of(x, y, t));
        const double wy = t * gs[j];
        const double wx = (1.0 - t) * gs[i];
        const double v = (lhs - (wy + wx)) /
                         std::max(1.0, std::abs(wy) + std::abs(wx));
        ++rep.samples;
        if (v > rep.worst_violation) {
          rep.worst_violation = v;
          rep.worst_x = x;
          rep.worst_y = y;
          rep.worst_t = t;
        }
      }
    }
  }
  rep.is_harmonically_convex = rep.worst_violation <= tol;
  return rep;
}

enum class CertKind { derivative_power, harmonic, ordinary };

using CacheKey = std::tuple<int, std::string, double, double, double, int, double>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, bool>& cache() {
  static std::map<CacheKey, bool> c;
  return c;
}

template <class Compute>
bool cached(CertKind kind, const FunctionSpec& fs, const Interval& iv, double q,
            int grid_n, double tol, Compute compute) {
  CacheKey key{static_cast<int>(kind), fs.name, iv.a(), iv.b(), q, grid_n, tol};
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  // Computed outside the lock; two racing threads compute the same value and
  // the first insert wins.
  const bool ok = compute();
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(key, ok).first->second;
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

ConvexityReport check_harmonic_convexity(const RealFunction& g,
                                         const Interval& iv, int grid_n,
                                         double tol) {
  return scan(g, iv, grid_n, tol, [](double x, double y, double t) {
    return x * y / (t * x + (1.0 - t) * y);
  });
}

ConvexityReport check_convexity(const RealFunction& g, const Interval& iv,
                                int grid_n, double tol) {
  // Ordinary convexity in the same (weight on y, weight on x) layout.
  return scan(g, iv, grid_n, tol, [](double x, double y, double t) {
    return t * y + (1.0 - t) * x;
  });
}

bool certify_derivative_power(const FunctionSpec& fs, const Interval& iv,
                              double q, int grid_n, double tol) {
  if (fs.derivative_power_always_convex) return true;
  return cached(CertKind::derivative_power, fs, iv, q, grid_n, tol, [&] {
    const RealFunction& fp = fs.f_prime;
    RealFunction g = [&fp, q](double x) { return std::pow(std::abs(fp(x)), q); };
    return check_harmonic_convexity(g, iv, grid_n, tol).is_harmonically_convex;
  });
}

bool certify_harmonic(const FunctionSpec& fs, const Interval& iv, int grid_n,
                      double tol) {
  return cached(CertKind::harmonic, fs, iv, 0.0, grid_n, tol, [&] {
    return check_harmonic_convexity(fs.f, iv, grid_n, tol).is_harmonically_convex;
  });
}

bool certify_convex(const FunctionSpec& fs, const Interval& iv, int grid_n,
                    double tol) {
  return cached(CertKind::ordinary, fs, iv, 0.0, grid_n, tol, [&] {
    return check_convexity(fs.f, iv, grid_n, tol).is_harmonically_convex;
  });
}

FunctionSpec catalog_constant(double c) {
  if (!std::isfinite(c)) throw ValidationError("constant must be finite");
  return FunctionSpec::make(
      "constant(c=" + format_number(c) + ")", [c](double) { return c; },
      [](double) { return 0.0; }, [](const Interval&) { return 0.0; }, true);
}

FunctionSpec catalog_linear() {
  return FunctionSpec::make(
      "linear", [](double x) { return x; }, [](double) { return 1.0; },
      [](const Interval&) { return 0.0; }, true);
}

FunctionSpec catalog_square() {
  return FunctionSpec::make(
      "square", [](double x) { return x * x; },
      [](double x) { return 2.0 * x; }, [](const Interval&) { return 0.0; });
}

FunctionSpec catalog_power(double n) {
  if (!std::isfinite(n) || n <= -1.0 || n == 0.0) {
    throw ValidationError("power(n) requires n in (-1, inf) \\ {0}");
  }
  const double m = n + 2.0;
  const double c4 = m * (m - 1.0) * (m - 2.0) * (m - 3.0);
  return FunctionSpec::make(
      "power(n=" + format_number(n) + ")",
      [m](double x) { return std::pow(x, m); },
      [m](double x) { return m * std::pow(x, m - 1.0); },
      [m, c4](const Interval& iv) {
        return std::abs(c4) *
               std::max(std::pow(iv.a(), m - 4.0), std::pow(iv.b(), m - 4.0));
      });
}

FunctionSpec catalog_square_log() {
  // f'''' = -2 / x^2, largest in magnitude at the left endpoint.
  return FunctionSpec::make(
      "square_log", [](double x) { return x * x * std::log(x); },
      [](double x) { return 2.0 * x * std::log(x) + x; },
      [](const Interval& iv) { return 2.0 / (iv.a() * iv.a()); });
}

FunctionSpec catalog(std::string_view name, std::optional<double> param) {
  if (name == "linear") return catalog_linear();
  if (name == "square") return catalog_square();
  if (name == "square_log") return catalog_square_log();
  if (name == "constant") return catalog_constant(param.value_or(1.0));
  if (name == "power") {
    if (!param) throw ValidationError("power requires its exponent parameter n");
    return catalog_power(*param);
  }
  throw ValidationError("unknown catalog function '" + std::string(name) + "'");
}

FunctionSpec catalog_from_string(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return catalog(spec);
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  double value = 0.0;
  auto res = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (res.ec != std::errc{} || res.ptr != arg.data() + arg.size()) {
    throw ValidationError("malformed catalog parameter in '" +
                          std::string(spec) + "'");
  }
  return catalog(name, value);
}

FunctionSpec catalog_for_use(std::string_view spec, const Interval& iv,
                             double q, bool allow_uncertified) {
  FunctionSpec fs = catalog_from_string(spec);
  if (!allow_uncertified && !certify_derivative_power(fs, iv, q)) {
    std::ostringstream msg;
    msg << "|f'|^q for '" << fs.name << "' with q=" << q
        << " is not certified harmonically convex on [" << iv.a() << ", "
        << iv.b() << "]";
    throw ValidationError(msg.str());
  }
  return fs;
}

}  // namespace hconvex
