#pragma once

#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "hardy/report.hpp"

namespace hardy {

inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;

/// C_p = \int_0^1 |1 + ln x|^p dx = e^{-1} [Gamma(p+1) + sum_k 1/(k! (k+p+1))].
double cp(double p);

/// C_p by quadrature of its defining integral (the independent route).
double cp_quadrature(double p, double tol = 1e-13);

/// dC_p/dp = e^{-1} [Gamma'(p+1) - sum_k 1/(k! (k+p+1)^2)].
double cp_prime(double p);

/// Gamma'(p+1) = Gamma(p+1) psi(p+1).
double gamma_prime(double p);

/// sum_k 1/(k! (k+p+1)^2).
double inverse_square_series(double p);

/// C_p^{1/p}.
double cp_root(double p);

/// lim_{p->0+} C_p^{1/p} = exp(\int_0^1 ln|1 + ln x| dx).
double cp_limit_zero();

/// Bounds in the three two-sided inequalities on the cone, ordered by regime
/// (the two orderings meet at p = 2).
struct SharpConstants {
  double p = 0.0;
  double dual_lower = 0.0;     ///< ||(H*-I)f|| / ||f||
  double dual_upper = 0.0;
  double hardy_lower = 0.0;    ///< ||(H-I)f|| / ||f||
  double hardy_upper = 0.0;
  double compare_lower = 0.0;  ///< ||(H*-I)f|| / ||(H-I)f||
  double compare_upper = 0.0;
};

/// Requires p > 1.
SharpConstants sharp(double p);

/// (lower, upper) for ||(H*-I)f|| / ||f||; valid for p >= 1.
std::pair<double, double> dual_bounds(double p);

/// Monotonicity and convexity checks on a sorted positive grid, one report
/// per property.
std::vector<VerificationReport> property_scan(std::span<const double> p_grid);

}  // namespace hardy
