#include "hardy/cone.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace hardy {

namespace {

std::string at_index(const char* what, std::size_t i) {
  return std::string(what) + " at index " + std::to_string(i);
}

void validate_piece(const Piece& piece, std::size_t i) {
  if (!(piece.lo >= 0.0) || !(piece.lo < piece.hi) || std::isnan(piece.hi)) {
    throw ValidationError(at_index("piece interval must satisfy 0 <= lo < hi", i), i);
  }
  if (std::isinf(piece.hi)) {
    const Terms& t = piece.terms;
    const bool tail_ok = t.constant == 0.0 && t.linear == 0.0 && t.log == 0.0 &&
                         (t.power == 0.0 || t.exponent < 0.0);
    if (!tail_ok) {
      throw ValidationError(at_index("infinite piece must decay (power with alpha<0 or reciprocal)", i),
                            i);
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- StepFunction

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty()) throw ValidationError("step function needs at least one level");
  if (breakpoints_.size() != values_.size()) {
    throw ValidationError("breakpoints and values must have the same length");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] > 0.0) || !std::isfinite(breakpoints_[i])) {
      throw ValidationError(at_index("breakpoint must be positive and finite", i), i);
    }
    if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw ValidationError(at_index("breakpoints must be strictly increasing", i), i);
    }
    if (!(values_[i] > 0.0) || !std::isfinite(values_[i])) {
      throw ValidationError(at_index("value must be positive and finite", i), i);
    }
  }
  cone_ = std::is_sorted(values_.rbegin(), values_.rend());
}

double StepFunction::operator()(double x) const {
  if (!(x > 0.0) || x > breakpoints_.back()) return 0.0;
  const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

StepFunction make_step(std::vector<double> breakpoints, std::vector<double> values) {
  return StepFunction(std::move(breakpoints), std::move(values));
}

// ----------------------------------------------------------------------- Terms

std::string_view kind_name(PieceKind kind) {
  switch (kind) {
    case PieceKind::Constant: return "constant";
    case PieceKind::LogAffine: return "log_affine";
    case PieceKind::Power: return "power";
    case PieceKind::Reciprocal: return "reciprocal";
    case PieceKind::LinearPlusLog: return "linear_plus_log";
    case PieceKind::Mixed: return "mixed";
  }
  return "mixed";
}

PieceKind kind_from_name(std::string_view name) {
  for (PieceKind k : {PieceKind::Constant, PieceKind::LogAffine, PieceKind::Power,
                      PieceKind::Reciprocal, PieceKind::LinearPlusLog, PieceKind::Mixed}) {
    if (kind_name(k) == name) return k;
  }
  throw ValidationError("unknown piece kind '" + std::string(name) + "'");
}

double Terms::operator()(double x) const {
  double v = constant;
  if (linear != 0.0) v += linear * x;
  if (log != 0.0) v += log * std::log(x);
  if (reciprocal != 0.0) v += reciprocal / x;
  if (power != 0.0) v += power * std::pow(x, exponent);
  return v;
}

Terms Terms::normalized() const {
  Terms t = *this;
  if (t.power != 0.0 && t.exponent == 0.0) {
    t.constant += t.power;
    t.power = 0.0;
  } else if (t.power != 0.0 && t.exponent == -1.0) {
    t.reciprocal += t.power;
    t.power = 0.0;
  }
  if (t.power == 0.0) t.exponent = 0.0;
  return t;
}

PieceKind Terms::kind() const {
  const Terms t = normalized();
  const bool c = t.constant != 0.0;
  const bool w = t.linear != 0.0;
  const bool v = t.log != 0.0;
  const bool r = t.reciprocal != 0.0;
  const bool pw = t.power != 0.0;
  if (!w && !v && !r && !pw) return PieceKind::Constant;
  if (!c && !w && !v && !r) return PieceKind::Power;
  if (!c && !w && !v && !pw) return PieceKind::Reciprocal;
  if (!r && !pw && !w) return PieceKind::LogAffine;
  if (!r && !pw) return PieceKind::LinearPlusLog;
  return PieceKind::Mixed;
}

namespace {

Terms combine(const Terms& lhs, const Terms& rhs, double sign) {
  const Terms a = lhs.normalized();
  const Terms b = rhs.normalized();
  if (a.power != 0.0 && b.power != 0.0 && a.exponent != b.exponent) {
    throw ValidationError("cannot combine power terms with different exponents");
  }
  Terms out;
  out.constant = a.constant + sign * b.constant;
  out.linear = a.linear + sign * b.linear;
  out.log = a.log + sign * b.log;
  out.reciprocal = a.reciprocal + sign * b.reciprocal;
  out.power = a.power + sign * b.power;
  out.exponent = a.power != 0.0 ? a.exponent : b.exponent;
  return out.normalized();
}

}  // namespace

Terms operator+(const Terms& lhs, const Terms& rhs) { return combine(lhs, rhs, 1.0); }
Terms operator-(const Terms& lhs, const Terms& rhs) { return combine(lhs, rhs, -1.0); }

Terms operator*(double scale, const Terms& terms) {
  Terms t = terms.normalized();
  t.constant *= scale;
  t.linear *= scale;
  t.log *= scale;
  t.reciprocal *= scale;
  t.power *= scale;
  return t.normalized();
}

// ----------------------------------------------------------------------- Piece

Piece Piece::constant(double lo, double hi, double c) { return {lo, hi, Terms{.constant = c}}; }

Piece Piece::log_affine(double lo, double hi, double u, double v) {
  return {lo, hi, Terms{.constant = u, .log = v}};
}

Piece Piece::power(double lo, double hi, double c, double alpha) {
  return {lo, hi, Terms{.power = c, .exponent = alpha}.normalized()};
}

Piece Piece::reciprocal(double lo, double hi, double c) {
  return {lo, hi, Terms{.reciprocal = c}};
}

Piece Piece::linear_plus_log(double lo, double hi, double u, double w, double v) {
  return {lo, hi, Terms{.constant = u, .linear = w, .log = v}};
}

std::vector<double> Piece::coeffs() const {
  const Terms t = terms.normalized();
  switch (t.kind()) {
    case PieceKind::Constant: return {t.constant};
    case PieceKind::LogAffine: return {t.constant, t.log};
    case PieceKind::Power: return {t.power, t.exponent};
    case PieceKind::Reciprocal: return {t.reciprocal};
    case PieceKind::LinearPlusLog: return {t.constant, t.linear, t.log};
    case PieceKind::Mixed:
      return {t.constant, t.linear, t.log, t.reciprocal, t.power, t.exponent};
  }
  return {};
}

Piece Piece::from_coeffs(double lo, double hi, PieceKind kind, std::span<const double> c) {
  auto need = [&](std::size_t n) {
    if (c.size() != n) {
      throw ValidationError("kind '" + std::string(kind_name(kind)) + "' expects " +
                            std::to_string(n) + " coefficients");
    }
  };
  switch (kind) {
    case PieceKind::Constant: need(1); return constant(lo, hi, c[0]);
    case PieceKind::LogAffine: need(2); return log_affine(lo, hi, c[0], c[1]);
    case PieceKind::Power: need(2); return power(lo, hi, c[0], c[1]);
    case PieceKind::Reciprocal: need(1); return reciprocal(lo, hi, c[0]);
    case PieceKind::LinearPlusLog: need(3); return linear_plus_log(lo, hi, c[0], c[1], c[2]);
    case PieceKind::Mixed:
      need(6);
      return {lo, hi,
              Terms{.constant = c[0], .linear = c[1], .log = c[2], .reciprocal = c[3],
                    .power = c[4], .exponent = c[5]}
                  .normalized()};
  }
  throw ValidationError("unknown piece kind");
}

// ----------------------------------------------------------- PiecewiseFunction

PiecewiseFunction::PiecewiseFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    validate_piece(pieces_[i], i);
    if (i > 0 && pieces_[i].lo != pieces_[i - 1].hi) {
      throw ValidationError(at_index("pieces must abut", i), i);
    }
    pieces_[i].terms = pieces_[i].terms.normalized();
  }
}

double PiecewiseFunction::operator()(double x) const {
  if (pieces_.empty() || !(x > pieces_.front().lo) || x > pieces_.back().hi) return 0.0;
  const auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                                   [](const Piece& p, double v) { return p.hi < v; });
  return (*it)(x);
}

namespace {

std::vector<double> cut_points(const PiecewiseFunction& f) {
  std::vector<double> cuts;
  for (const Piece& p : f.pieces()) {
    cuts.push_back(p.lo);
    cuts.push_back(p.hi);
  }
  return cuts;
}

Terms terms_on(const PiecewiseFunction& f, double lo, double hi) {
  for (const Piece& p : f.pieces()) {
    if (p.lo <= lo && hi <= p.hi) return p.terms;
  }
  return {};
}

PiecewiseFunction merge(const PiecewiseFunction& lhs, const PiecewiseFunction& rhs, double sign) {
  std::vector<double> cuts = cut_points(lhs);
  const std::vector<double> more = cut_points(rhs);
  cuts.insert(cuts.end(), more.begin(), more.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    pieces.push_back({lo, hi, combine(terms_on(lhs, lo, hi), terms_on(rhs, lo, hi), sign)});
  }
  return PiecewiseFunction(std::move(pieces));
}

}  // namespace

PiecewiseFunction operator+(const PiecewiseFunction& lhs, const PiecewiseFunction& rhs) {
  return merge(lhs, rhs, 1.0);
}

PiecewiseFunction operator-(const PiecewiseFunction& lhs, const PiecewiseFunction& rhs) {
  return merge(lhs, rhs, -1.0);
}

PiecewiseFunction to_piecewise(const StepFunction& f) {
  std::vector<Piece> pieces;
  pieces.reserve(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) {
    pieces.push_back(Piece::constant(f.left(n), f.breakpoint(n), f.value(n)));
  }
  return PiecewiseFunction(std::move(pieces));
}

double eval(const StepFunction& f, double x) { return f(x); }
double eval(const PiecewiseFunction& f, double x) { return f(x); }

// -------------------------------------------------------------------- families

Family family_from_name(std::string_view name) {
  if (name == "g_q") return Family::GQ;
  if (name == "f_q") return Family::FQ;
  if (name == "f_q_minus_g_q") return Family::FQMinusGQ;
  if (name == "k_eps") return Family::KEps;
  if (name == "chi01") return Family::Chi01;
  throw ValidationError("unknown family '" + std::string(name) + "'");
}

PiecewiseFunction family(Family kind, double param) {
  switch (kind) {
    case Family::GQ:
    case Family::FQ:
    case Family::FQMinusGQ: {
      const double q = param;
      if (!(q > 1.0) || !std::isfinite(q)) throw ValidationError("family: q must satisfy q > 1");
      if (kind == Family::GQ) return PiecewiseFunction({Piece::power(1.0, kInfinity, 1.0 / q, -1.0 / q)});
      const double tail = kind == Family::FQ ? 1.0 : 1.0 - 1.0 / q;
      return PiecewiseFunction(
          {Piece::constant(0.0, 1.0, 1.0), Piece::power(1.0, kInfinity, tail, -1.0 / q)});
    }
    case Family::KEps: {
      const double eps = param;
      if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("family: k_eps needs 0 < eps < 1");
      return PiecewiseFunction({Piece::linear_plus_log(1.0 - eps, 1.0, 0.0, 1.0 / eps, 0.0)});
    }
    case Family::Chi01:
      return PiecewiseFunction({Piece::constant(0.0, 1.0, 1.0)});
  }
  throw ValidationError("unknown family");
}

bool is_nonincreasing_on(const PiecewiseFunction& f, std::span<const double> xs) {
  double previous = kInfinity;
  for (double x : xs) {
    const double v = f(x);
    if (v < 0.0 || v > previous) return false;
    previous = v;
  }
  return true;
}

// -------------------------------------------------------------------- sampling

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

StepFunction random_cone_sample(std::uint64_t seed, std::size_t n_max, const SampleScale& scale) {
  if (n_max < 1) throw ValidationError("random_cone_sample: n_max must be >= 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng()); };
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % n_max);

  std::set<double> logs;
  while (logs.size() < n) logs.insert(uniform(scale.log_breakpoint_lo, scale.log_breakpoint_hi));
  std::vector<double> breakpoints;
  for (double l : logs) breakpoints.push_back(std::exp(l));
  // exp can merge neighbours that differ in the last ulp
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1])) {
      breakpoints[i] = std::nextafter(breakpoints[i - 1], kInfinity);
    }
  }

  std::vector<double> values(n);
  for (double& v : values) v = std::exp(uniform(scale.log_value_lo, scale.log_value_hi));
  std::sort(values.begin(), values.end(), std::greater<>());
  return StepFunction(std::move(breakpoints), std::move(values));
}

}  // namespace hardy
