#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace hardy::kernel {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Raised when adaptive quadrature exhausts its subdivision budget. The
/// best estimate reached so far travels with the exception.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

using Integrand = std::function<double(double)>;

inline constexpr std::size_t kDefaultMaxSubintervals = 4000;

/// Adaptive 7/15-point Gauss-Kronrod with global bisection. `hi` may be
/// +infinity; the tail is mapped through x = b e^s, s = t/(1-t).
/// Converged once the summed error estimate is below max(tol, tol*|I|) plus
/// the accumulated round-off floor (50 eps |f| per segment), so tolerances
/// near machine precision terminate instead of bisecting forever.
QuadratureResult integrate(const Integrand& f, double lo, double hi, double tol,
                           std::size_t max_subintervals = kDefaultMaxSubintervals);

/// Same, split at the given sorted interior points.
QuadratureResult integrate(const Integrand& f, std::span<const double> points, double tol,
                           std::size_t max_subintervals = kDefaultMaxSubintervals);

/// Integral of f over (0,1) evaluated as the integral of f(e^-y) e^-y over
/// (0, inf), which removes logarithmic blow-up at x = 0. Optional interior
/// x-points in (0,1) are mapped and used as splits.
QuadratureResult integrate_log_singular(const Integrand& f, double tol,
                                        std::span<const double> interior = {});

/// Upper incomplete gamma Gamma(a, x).
double gamma_upper(double a, double x);

/// e^x Gamma(a, x); finite for large x where Gamma(a, x) underflows.
double gamma_upper_scaled(double a, double x);

/// Digamma psi(x) for x > 0.
double digamma(double x);

inline constexpr double kSeriesTol = 1e-15;
inline constexpr int kSeriesTermCap = 200;

/// Integral of t^p e^t over (0, s), summed as
/// sum_k s^{p+k+1} / (k! (p+k+1)).
double exp_moment(double s, double p);

/// Kernel h(r) = e^r \int_r^\infty |y-1|^p e^{-y} dy for a fixed exponent p.
class HEvaluator {
 public:
  explicit HEvaluator(double p, double series_tol = kSeriesTol);

  double p() const noexcept { return p_; }
  double gamma_p1() const noexcept { return gamma_p1_; }
  double series_tol() const noexcept { return series_tol_; }

  /// Requires r >= 0.
  double operator()(double r) const;

 private:
  double p_;
  double gamma_p1_;
  double series_tol_;
};

inline double h_eval(const HEvaluator& ev, double r) { return ev(r); }

/// \int_lo^hi |m - ln x|^p dx in closed form (lo may be 0, hi finite).
double log_power_integral(double m, double lo, double hi, double p);

}  // namespace hardy::kernel
