#pragma once

#include "hardy/cone.hpp"
#include "hardy/kernel.hpp"

namespace hardy {

/// Tolerance of the quadrature fallback used for pieces without a closed form.
inline constexpr double kFallbackTol = 1e-12;

/// ||f||_p^p. Constant, power and reciprocal pieces are integrated
/// analytically, log-affine pieces through the h kernel, anything else by
/// quadrature. Throws std::domain_error naming a non-integrable piece.
double lp_pow(const PiecewiseFunction& f, double p);
double lp_pow(const StepFunction& f, double p);
double lp_pow(const Piece& piece, double p);

/// ||(H*-I) f||_p^p for a cone step function, as sum_n A_n with
/// A_n = b_n^p [a_n h(S_n - d_n) - a_{n-1} h(S_n - d_{n-1})].
double dual_osc_pow(const StepFunction& f, double p);
double dual_osc_pow(const StepFunction& f, const kernel::HEvaluator& h);

/// ||(H-I) f||_p^p in closed form; requires p > 1.
double hardy_osc_pow(const StepFunction& f, double p);

struct NormReport {
  double p = 0.0;
  double norm_f = 0.0;
  double norm_hardy_osc = 0.0;
  double norm_dual_osc = 0.0;
  double ratio_dual = 0.0;
  double ratio_hardy = 0.0;
  double ratio_dual_over_hardy = 0.0;
};

/// Requires p > 1.
NormReport norm_report(const StepFunction& f, double p);
NormReport norm_report(const PiecewiseFunction& f, double p);

}  // namespace hardy
