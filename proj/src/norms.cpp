#include "hardy/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hardy/operators.hpp"

namespace hardy {

namespace {

std::string describe(const Piece& piece) {
  return std::string(kind_name(piece.kind())) + " piece on (" + std::to_string(piece.lo) + ", " +
         std::to_string(piece.hi) + "]";
}

double power_integral(const Piece& piece, double coeff, double alpha, double p) {
  if (coeff == 0.0) return 0.0;
  const double beta = p * alpha + 1.0;
  const double scale = std::pow(std::abs(coeff), p);
  const bool at_zero = piece.lo == 0.0;
  const bool at_infinity = std::isinf(piece.hi);
  if ((at_zero && !(beta > 0.0)) || (at_infinity && !(beta < 0.0))) {
    throw std::domain_error("lp_pow: non-integrable " + describe(piece));
  }
  if (beta == 0.0) return scale * std::log(piece.hi / piece.lo);
  const double upper = at_infinity ? 0.0 : std::pow(piece.hi, beta);
  const double lower = at_zero ? 0.0 : std::pow(piece.lo, beta);
  return scale * (upper - lower) / beta;
}

// Quadrature of |t(x)|^p with splits at sign changes found on a sampling grid.
double fallback_integral(const Piece& piece, double p) {
  const Terms t = piece.terms;
  auto value = [&t](double x) { return t(x); };
  const double lo = piece.lo;
  const double hi = piece.hi;
  const bool infinite = std::isinf(hi);

  std::vector<double> probes;
  const double first = lo > 0.0 ? lo : std::min(1e-12, hi * 1e-12);
  const double last = infinite ? std::max(lo, 1.0) * 1e6 : hi;
  constexpr int kProbes = 256;
  const bool log_spaced = lo == 0.0 || infinite || hi / std::max(lo, 1e-300) > 16.0;
  for (int i = 0; i <= kProbes; ++i) {
    const double s = static_cast<double>(i) / kProbes;
    probes.push_back(log_spaced ? first * std::pow(last / first, s) : lo + s * (hi - lo));
  }
  if (!(probes.front() > lo)) probes.front() = std::nextafter(lo, hi);

  std::vector<double> points{lo};
  for (std::size_t i = 0; i + 1 < probes.size(); ++i) {
    double a = probes[i];
    double b = probes[i + 1];
    double fa = value(a);
    const double fb = value(b);
    if (fa == 0.0 || fb == 0.0 || (fa < 0.0) == (fb < 0.0)) continue;
    for (int it = 0; it < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * b; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = value(mid);
      if ((fm < 0.0) == (fa < 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    const double root = 0.5 * (a + b);
    if (root > points.back() && root < hi) points.push_back(root);
  }
  points.push_back(hi);
  auto integrand = [&value, p](double x) { return std::pow(std::abs(value(x)), p); };
  return kernel::integrate(integrand, points, kFallbackTol).value;
}

}  // namespace

double lp_pow(const Piece& piece, double p) {
  if (!(p > 0.0)) throw std::domain_error("lp_pow: requires p > 0");
  const Terms t = piece.terms.normalized();
  switch (t.kind()) {
    case PieceKind::Constant:
      if (t.constant == 0.0) return 0.0;
      if (std::isinf(piece.hi)) throw std::domain_error("lp_pow: non-integrable " + describe(piece));
      return std::pow(std::abs(t.constant), p) * (piece.hi - piece.lo);
    case PieceKind::Power:
      return power_integral(piece, t.power, t.exponent, p);
    case PieceKind::Reciprocal:
      return power_integral(piece, t.reciprocal, -1.0, p);
    case PieceKind::LogAffine: {
      // |u + v ln x| = |v| |m - ln x| with m = -u / v
      const double m = -t.constant / t.log;
      return std::pow(std::abs(t.log), p) * kernel::log_power_integral(m, piece.lo, piece.hi, p);
    }
    case PieceKind::LinearPlusLog:
    case PieceKind::Mixed:
      if (std::isinf(piece.hi) && (t.constant != 0.0 || t.linear != 0.0 || t.log != 0.0)) {
        throw std::domain_error("lp_pow: non-integrable " + describe(piece));
      }
      return fallback_integral(piece, p);
  }
  return 0.0;
}

double lp_pow(const PiecewiseFunction& f, double p) {
  double total = 0.0;
  for (const Piece& piece : f.pieces()) total += lp_pow(piece, p);
  return total;
}

double lp_pow(const StepFunction& f, double p) {
  if (!(p > 0.0)) throw std::domain_error("lp_pow: requires p > 0");
  double total = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    total += std::pow(f.value(n), p) * (f.breakpoint(n) - f.left(n));
  }
  return total;
}

double dual_osc_pow(const StepFunction& f, const kernel::HEvaluator& h) {
  const SValues s = s_values(f);
  const double p = h.p();
  double total = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double a = f.breakpoint(n);
    double a_n = a * h(s.gap[n]);
    // The n = 1 left term a h(S - ln a) vanishes as a -> 0.
    if (n > 0) {
      const double left = f.left(n);
      a_n -= left * h(s.gap[n] + std::log(a / left));
    }
    total += std::pow(f.value(n), p) * a_n;
  }
  return total;
}

double dual_osc_pow(const StepFunction& f, double p) {
  return dual_osc_pow(f, kernel::HEvaluator(p));
}

double hardy_osc_pow(const StepFunction& f, double p) {
  if (!(p > 1.0)) throw std::domain_error("hardy_osc_pow: requires p > 1 (the 1/x tail diverges)");
  const double q = p - 1.0;
  double prefix = 0.0;
  double total = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double lo = f.left(n);
    const double hi = f.breakpoint(n);
    if (n > 0) {
      const double c = prefix - f.value(n) * lo;
      // lo^{1-p} - hi^{1-p} without cancellation
      const double width = -std::pow(lo, -q) * std::expm1(-q * std::log(hi / lo));
      total += std::pow(std::abs(c), p) * width / q;
    }
    prefix += f.value(n) * (hi - lo);
  }
  total += std::pow(prefix, p) * std::pow(f.support_end(), -q) / q;
  return total;
}

namespace {

NormReport assemble(double p, double f_pow, double hardy_pow, double dual_pow) {
  NormReport r;
  r.p = p;
  r.norm_f = std::pow(f_pow, 1.0 / p);
  r.norm_hardy_osc = std::pow(hardy_pow, 1.0 / p);
  r.norm_dual_osc = std::pow(dual_pow, 1.0 / p);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.ratio_dual = r.norm_f > 0.0 ? r.norm_dual_osc / r.norm_f : nan;
  r.ratio_hardy = r.norm_f > 0.0 ? r.norm_hardy_osc / r.norm_f : nan;
  r.ratio_dual_over_hardy = r.norm_hardy_osc > 0.0 ? r.norm_dual_osc / r.norm_hardy_osc : nan;
  return r;
}

}  // namespace

NormReport norm_report(const StepFunction& f, double p) {
  if (!(p > 1.0)) throw std::domain_error("norm_report: requires p > 1");
  const double dual = f.is_cone() ? dual_osc_pow(f, p) : lp_pow(dual_osc(f), p);
  return assemble(p, lp_pow(f, p), hardy_osc_pow(f, p), dual);
}

NormReport norm_report(const PiecewiseFunction& f, double p) {
  if (!(p > 1.0)) throw std::domain_error("norm_report: requires p > 1");
  return assemble(p, lp_pow(f, p), lp_pow(hardy_osc(f), p), lp_pow(dual_osc(f), p));
}

}  // namespace hardy
