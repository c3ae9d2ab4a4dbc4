#pragma once

#include <span>
#include <vector>

#include "hardy/cone.hpp"

namespace hardy {

/// Logarithmic centres S_n of a cone step function: on (a_{n-1}, a_n] the
/// image (H* - I)f equals b_n (S_n - 1 - ln x).
struct SValues {
  std::vector<double> s;
  /// S_n - d_n, kept separately because S_n and d_n nearly cancel when the
  /// step ratios are close to one.
  std::vector<double> gap;
};

/// Backward recursion b_n (S_n - d_n) = b_{n+1} (S_{n+1} - d_n), S_N = d_N.
/// Throws ValidationError for non-cone input.
SValues s_values(const StepFunction& f);

/// H* f(x) = \int_x^\infty f(t) dt / t, computed piece by piece with a single
/// right-to-left pass. Throws std::domain_error when a piece carries a log
/// term (its image needs ln^2 x).
PiecewiseFunction dual_hardy(const PiecewiseFunction& f);

/// H f(x) = (1/x) \int_0^x f, with a reciprocal tail beyond the support.
/// Throws std::domain_error for reciprocal terms (image needs ln(x)/x) and
/// for powers that are not integrable at 0.
PiecewiseFunction hardy(const PiecewiseFunction& f);

PiecewiseFunction dual_osc(const PiecewiseFunction& f);
PiecewiseFunction hardy_osc(const PiecewiseFunction& f);

/// b_n (S_n - 1 - ln x) on each step for cone input; the general H* pass
/// otherwise.
PiecewiseFunction dual_osc(const StepFunction& f);

/// c_n / x on (a_{n-1}, a_n] with c_n = P_{n-1} - b_n a_{n-1}, and P_N / x
/// beyond a_N, where P_m = sum_{k<=m} b_k (a_k - a_{k-1}).
PiecewiseFunction hardy_osc(const StepFunction& f);

/// Worst |(H-I)(H*-I)f - f| over the grid, skipping breakpoints.
double inversion_residual(const StepFunction& f, std::span<const double> grid);

/// Log-spaced grid over [a_1 / 100, 4 a_N].
std::vector<double> residual_grid(const StepFunction& f, std::size_t points = 100);

}  // namespace hardy
