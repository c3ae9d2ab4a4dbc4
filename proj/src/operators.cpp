#include "hardy/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hardy {

SValues s_values(const StepFunction& f) {
  if (!f.is_cone()) throw ValidationError("s_values: input must be nonincreasing");
  const std::size_t n = f.size();
  SValues out;
  out.s.resize(n);
  out.gap.resize(n);
  out.gap[n - 1] = 0.0;
  out.s[n - 1] = std::log(f.breakpoint(n - 1));
  for (std::size_t k = n - 1; k-- > 0;) {
    // S_{k+1} - d_k = (S_{k+1} - d_{k+1}) + ln(a_{k+1} / a_k)
    const double rise = out.gap[k + 1] + std::log(f.breakpoint(k + 1) / f.breakpoint(k));
    out.gap[k] = f.value(k + 1) / f.value(k) * rise;
    out.s[k] = std::log(f.breakpoint(k)) + out.gap[k];
  }
  return out;
}

namespace {

// \int_x^hi t(s) ds / s as terms in x, plus the full integral over (lo, hi].
struct DualImage {
  Terms inside;
  double full = 0.0;
};

DualImage dual_piece(const Piece& piece) {
  const Terms t = piece.terms.normalized();
  if (t.log != 0.0) {
    throw std::domain_error("dual_hardy: image of a log term is not representable");
  }
  const double hi = piece.hi;
  const double lo = piece.lo;
  const bool finite = std::isfinite(hi);
  DualImage img;
  Terms& in = img.inside;
  if (t.constant != 0.0) {
    in.constant += t.constant * std::log(hi);
    in.log = -t.constant;
  }
  if (t.linear != 0.0) {
    in.constant += t.linear * hi;
    in.linear = -t.linear;
  }
  if (t.reciprocal != 0.0) {
    if (finite) in.constant -= t.reciprocal / hi;
    in.reciprocal = t.reciprocal;
  }
  if (t.power != 0.0) {
    const double alpha = t.exponent;
    if (!finite && !(alpha < 0.0)) {
      throw std::domain_error("dual_hardy: power tail not integrable against dt/t");
    }
    if (finite) in.constant += t.power / alpha * std::pow(hi, alpha);
    in.power = -t.power / alpha;
    in.exponent = alpha;
  }
  in = in.normalized();

  if (lo > 0.0) {
    double full = 0.0;
    if (t.constant != 0.0) full += t.constant * std::log(hi / lo);
    if (t.linear != 0.0) full += t.linear * (hi - lo);
    if (t.reciprocal != 0.0) full += t.reciprocal * (1.0 / lo - (finite ? 1.0 / hi : 0.0));
    if (t.power != 0.0) {
      const double alpha = t.exponent;
      const double upper = finite ? std::pow(hi, alpha) : 0.0;
      full += t.power / alpha * (upper - std::pow(lo, alpha));
    }
    img.full = full;
  }
  return img;
}

}  // namespace

PiecewiseFunction dual_hardy(const PiecewiseFunction& f) {
  const auto pieces = f.pieces();
  std::vector<Piece> out(pieces.size());
  double tail = 0.0;
  for (std::size_t i = pieces.size(); i-- > 0;) {
    const DualImage img = dual_piece(pieces[i]);
    out[i] = {pieces[i].lo, pieces[i].hi, img.inside + Terms{.constant = tail}};
    tail += img.full;
  }
  if (!pieces.empty() && pieces.front().lo > 0.0 && tail != 0.0) {
    out.insert(out.begin(), Piece::constant(0.0, pieces.front().lo, tail));
  }
  return PiecewiseFunction(std::move(out));
}

PiecewiseFunction hardy(const PiecewiseFunction& f) {
  std::vector<Piece> out;
  double prefix = 0.0;  // \int_0^lo f
  for (const Piece& piece : f.pieces()) {
    const Terms t = piece.terms.normalized();
    const double lo = piece.lo;
    const double hi = piece.hi;
    if (t.reciprocal != 0.0) {
      throw std::domain_error("hardy: image of a reciprocal term is not representable");
    }
    // H f(x) = (prefix + \int_lo^x t) / x
    Terms img{.reciprocal = prefix};
    double full = 0.0;
    if (t.constant != 0.0) {
      img.constant += t.constant;
      img.reciprocal -= t.constant * lo;
      full += t.constant * (hi - lo);
    }
    if (t.linear != 0.0) {
      img.linear += 0.5 * t.linear;
      img.reciprocal -= 0.5 * t.linear * lo * lo;
      full += 0.5 * t.linear * (hi * hi - lo * lo);
    }
    if (t.log != 0.0) {
      const double at_lo = lo > 0.0 ? lo * std::log(lo) - lo : 0.0;
      img.log += t.log;
      img.constant -= t.log;
      img.reciprocal -= t.log * at_lo;
      full += t.log * (hi * std::log(hi) - hi - at_lo);
    }
    if (t.power != 0.0) {
      const double beta = t.exponent + 1.0;
      if (lo == 0.0 && !(beta > 0.0)) {
        throw std::domain_error("hardy: power piece not integrable at 0");
      }
      const double at_lo = lo > 0.0 ? std::pow(lo, beta) : 0.0;
      img.power = t.power / beta;
      img.exponent = t.exponent;
      img.reciprocal -= t.power / beta * at_lo;
      if (std::isfinite(hi)) full += t.power / beta * (std::pow(hi, beta) - at_lo);
    }
    out.push_back({lo, hi, img.normalized()});
    if (std::isfinite(hi)) prefix += full;
  }
  if (!out.empty() && std::isfinite(out.back().hi) && prefix != 0.0) {
    out.push_back(Piece::reciprocal(out.back().hi, kInfinity, prefix));
  }
  return PiecewiseFunction(std::move(out));
}

PiecewiseFunction dual_osc(const PiecewiseFunction& f) { return dual_hardy(f) - f; }

PiecewiseFunction hardy_osc(const PiecewiseFunction& f) { return hardy(f) - f; }

PiecewiseFunction dual_osc(const StepFunction& f) {
  if (!f.is_cone()) return dual_osc(to_piecewise(f));
  const SValues s = s_values(f);
  std::vector<Piece> pieces;
  pieces.reserve(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double b = f.value(n);
    pieces.push_back(Piece::log_affine(f.left(n), f.breakpoint(n), b * (s.s[n] - 1.0), -b));
  }
  return PiecewiseFunction(std::move(pieces));
}

PiecewiseFunction hardy_osc(const StepFunction& f) {
  std::vector<Piece> pieces;
  pieces.reserve(f.size() + 1);
  double prefix = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    const double lo = f.left(n);
    const double c = prefix - f.value(n) * lo;
    pieces.push_back(Piece::reciprocal(lo, f.breakpoint(n), c));
    prefix += f.value(n) * (f.breakpoint(n) - lo);
  }
  pieces.push_back(Piece::reciprocal(f.support_end(), kInfinity, prefix));
  return PiecewiseFunction(std::move(pieces));
}

double inversion_residual(const StepFunction& f, std::span<const double> grid) {
  const PiecewiseFunction roundtrip = hardy_osc(dual_osc(f));
  const auto bps = f.breakpoints();
  double worst = 0.0;
  for (double x : grid) {
    if (std::binary_search(bps.begin(), bps.end(), x)) continue;
    worst = std::max(worst, std::abs(roundtrip(x) - f(x)));
  }
  return worst;
}

std::vector<double> residual_grid(const StepFunction& f, std::size_t points) {
  const double lo = std::log(f.breakpoint(0) / 100.0);
  const double hi = std::log(4.0 * f.support_end());
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points > 1 ? static_cast<double>(i) / static_cast<double>(points - 1) : 0.5;
    grid[i] = std::exp(lo + t * (hi - lo));
  }
  return grid;
}

}  // namespace hardy
