#pragma once

// Independent reference computations for the tests: operators evaluated
// straight from their integral definitions on step functions, and norms by
// adaptive quadrature with explicit sign-change splitting.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "hardy/cone.hpp"
#include "hardy/kernel.hpp"

namespace oracle {

using hardy::StepFunction;

// \int_x^\infty f(t) dt/t as a sum over steps.
inline double dual_hardy(const StepFunction& f, double x) {
  double sum = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    const double lo = std::max(f.left(m), x);
    const double hi = f.breakpoint(m);
    if (hi > lo) sum += f.value(m) * std::log(hi / lo);
  }
  return sum;
}

// (1/x) \int_0^x f as a sum over steps.
inline double hardy(const StepFunction& f, double x) {
  double sum = 0.0;
  for (std::size_t m = 0; m < f.size(); ++m) {
    const double lo = f.left(m);
    const double hi = std::min(f.breakpoint(m), x);
    if (hi > lo) sum += f.value(m) * (hi - lo);
  }
  return sum / x;
}

inline double dual_osc(const StepFunction& f, double x) { return dual_hardy(f, x) - f(x); }
inline double hardy_osc(const StepFunction& f, double x) { return hardy(f, x) - f(x); }

// Sign changes of g on (lo, hi) located by scanning and bisection.
inline std::vector<double> sign_changes(const std::function<double(double)>& g, double lo,
                                        double hi, int probes = 400) {
  std::vector<double> out;
  double prev_x = lo;
  double prev = g(lo + (hi - lo) * 1e-12);
  for (int i = 1; i <= probes; ++i) {
    const double x = i == probes ? hi : lo + (hi - lo) * i / probes;
    const double gx = g(i == probes ? hi - (hi - lo) * 1e-12 : x);
    if ((prev < 0.0) != (gx < 0.0) && prev != 0.0 && gx != 0.0) {
      double a = prev_x;
      double b = x;
      for (int k = 0; k < 200 && b - a > 1e-16 * b; ++k) {
        const double m = 0.5 * (a + b);
        if ((g(m) < 0.0) == (prev < 0.0)) {
          a = m;
        } else {
          b = m;
        }
      }
      out.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev = gx;
  }
  return out;
}

// \int_lo^hi |g|^p with splits at the sign changes. lo may be 0, where the
// interval is mapped through x = hi e^{-y} to tame logarithmic growth.
inline double pow_integral(const std::function<double(double)>& g, double lo, double hi, double p,
                           double tol = 1e-13) {
  auto abs_pow = [&](double x) { return std::pow(std::abs(g(x)), p); };
  if (lo > 0.0) {
    std::vector<double> pts{lo};
    for (double r : sign_changes(g, lo, hi)) {
      if (r > pts.back() && r < hi) pts.push_back(r);
    }
    pts.push_back(hi);
    return hardy::kernel::integrate(abs_pow, pts, tol).value;
  }
  auto in_y = [&](double y) {
    if (y > 700.0) return 0.0;
    const double x = hi * std::exp(-y);
    return std::pow(std::abs(g(x)), p) * x;
  };
  std::vector<double> ys{0.0};
  std::vector<double> roots = sign_changes([&](double y) { return g(hi * std::exp(-y)); }, 0.0, 60.0);
  for (double r : roots) {
    if (r > ys.back()) ys.push_back(r);
  }
  ys.push_back(std::numeric_limits<double>::infinity());
  return hardy::kernel::integrate(in_y, ys, tol).value;
}

// Quadrature tolerance for the norm oracles. The integrands are sums of logs
// with their own round-off, so asking for much more than this stalls.
inline constexpr double kNormTol = 1e-12;

// ||(H*-I)f||_p^p piece by piece; the image vanishes beyond a_N.
inline double dual_osc_pow(const StepFunction& f, double p) {
  double total = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double lo = f.left(n);
    const double hi = f.breakpoint(n);
    const double b = f.value(n);
    total += pow_integral([&](double x) { return dual_hardy(f, x) - b; }, lo, hi, p, kNormTol);
  }
  return total;
}

// ||(H-I)f||_p^p; the tail beyond a_N is P/x.
inline double hardy_osc_pow(const StepFunction& f, double p) {
  double total = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double lo = f.left(n);
    const double hi = f.breakpoint(n);
    const double b = f.value(n);
    if (lo == 0.0) continue;  // Hf = f on the first step
    total += pow_integral([&](double x) { return hardy(f, x) - b; }, lo, hi, p, kNormTol);
  }
  const double end = f.support_end();
  auto tail = [&](double x) { return std::pow(hardy(f, x), p); };
  total += hardy::kernel::integrate(tail, end, std::numeric_limits<double>::infinity(), kNormTol).value;
  return total;
}

inline double lp_pow(const StepFunction& f, double p) {
  double total = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    total += std::pow(f.value(n), p) * (f.breakpoint(n) - f.left(n));
  }
  return total;
}

}  // namespace oracle
