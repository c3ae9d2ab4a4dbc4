#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Input validation failure; `index()` names the offending entry when the
/// problem is local to one element (npos otherwise).
class ValidationError : public std::invalid_argument {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  explicit ValidationError(const std::string& what, std::size_t index = npos)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// f = sum_n b_n chi_(a_{n-1}, a_n] with a_0 = 0.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  std::size_t size() const noexcept { return breakpoints_.size(); }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const double> values() const noexcept { return values_; }
  double breakpoint(std::size_t n) const { return breakpoints_.at(n); }
  double value(std::size_t n) const { return values_.at(n); }
  /// a_{n-1} for the n-th step (0 for the first).
  double left(std::size_t n) const { return n == 0 ? 0.0 : breakpoints_.at(n - 1); }
  double support_end() const noexcept { return breakpoints_.back(); }
  /// Nonincreasing values: a member of the cone.
  bool is_cone() const noexcept { return cone_; }

  double operator()(double x) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  bool cone_ = false;
};

StepFunction make_step(std::vector<double> breakpoints, std::vector<double> values);

enum class PieceKind { Constant, LogAffine, Power, Reciprocal, LinearPlusLog, Mixed };

std::string_view kind_name(PieceKind kind);
PieceKind kind_from_name(std::string_view name);

/// Coefficients of u + w x + v ln x + r / x + c x^alpha. Every tagged kind
/// is a restriction of this sum; `kind()` reports the narrowest one.
struct Terms {
  double constant = 0.0;
  double linear = 0.0;
  double log = 0.0;
  double reciprocal = 0.0;
  double power = 0.0;
  double exponent = 0.0;

  double operator()(double x) const;
  /// Folds degenerate powers (alpha = 0, alpha = -1) into the constant and
  /// reciprocal slots.
  Terms normalized() const;
  PieceKind kind() const;

  friend bool operator==(const Terms&, const Terms&) = default;
};

Terms operator+(const Terms& lhs, const Terms& rhs);
Terms operator-(const Terms& lhs, const Terms& rhs);
Terms operator*(double scale, const Terms& terms);

/// One tagged piece on (lo, hi]; hi may be infinite.
struct Piece {
  double lo = 0.0;
  double hi = 0.0;
  Terms terms;

  static Piece constant(double lo, double hi, double c);
  static Piece log_affine(double lo, double hi, double u, double v);
  static Piece power(double lo, double hi, double c, double alpha);
  static Piece reciprocal(double lo, double hi, double c);
  static Piece linear_plus_log(double lo, double hi, double u, double w, double v);

  PieceKind kind() const { return terms.kind(); }
  /// Kind-specific coefficient list, in the order used by the JSON form.
  std::vector<double> coeffs() const;
  static Piece from_coeffs(double lo, double hi, PieceKind kind, std::span<const double> coeffs);

  bool contains(double x) const { return x > lo && x <= hi; }
  double operator()(double x) const { return terms(x); }

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Contiguous pieces covering (0, X] or (0, inf); zero beyond the last piece.
class PiecewiseFunction {
 public:
  PiecewiseFunction() = default;
  explicit PiecewiseFunction(std::vector<Piece> pieces);

  std::span<const Piece> pieces() const noexcept { return pieces_; }
  std::size_t size() const noexcept { return pieces_.size(); }
  bool empty() const noexcept { return pieces_.empty(); }
  double support_end() const noexcept { return pieces_.empty() ? 0.0 : pieces_.back().hi; }
  double operator()(double x) const;

  /// Same partition, term-wise sum or difference.
  friend PiecewiseFunction operator+(const PiecewiseFunction& lhs, const PiecewiseFunction& rhs);
  friend PiecewiseFunction operator-(const PiecewiseFunction& lhs, const PiecewiseFunction& rhs);

  friend bool operator==(const PiecewiseFunction&, const PiecewiseFunction&) = default;

 private:
  std::vector<Piece> pieces_;
};

PiecewiseFunction to_piecewise(const StepFunction& f);

double eval(const StepFunction& f, double x);
double eval(const PiecewiseFunction& f, double x);

enum class Family { GQ, FQ, FQMinusGQ, KEps, Chi01 };

Family family_from_name(std::string_view name);

/// Named test families: g_q, f_q = H* g_q, f_q - g_q, k_eps, chi_(0,1].
PiecewiseFunction family(Family kind, double param = 0.0);

/// Cone-valued on its whole support (nonnegative and nonincreasing), checked
/// on a sampling grid; used for family outputs.
bool is_nonincreasing_on(const PiecewiseFunction& f, std::span<const double> xs);

struct SampleScale {
  double log_breakpoint_lo = -3.0;
  double log_breakpoint_hi = 3.0;
  double log_value_lo = -3.0;
  double log_value_hi = 3.0;
};

/// Deterministic cone sample: 1..n_max levels, log-uniform breakpoints and
/// sorted-descending log-uniform values.
StepFunction random_cone_sample(std::uint64_t seed, std::size_t n_max, const SampleScale& scale = {});

/// Seed for the i-th item of a stream (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0,1) from a 64-bit generator, stable across platforms.
double unit_uniform(std::uint64_t bits);

}  // namespace hardy
