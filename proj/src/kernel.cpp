#include "hardy/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace hardy::kernel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Kronrod abscissae on [-1,1] (non-negative half) and weights; the Gauss
// 7-point rule uses the odd-indexed Kronrod nodes plus the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double floor;  // round-off part of the error; bisection cannot go below it
};

struct ByError {
  bool operator()(const Segment& l, const Segment& r) const { return l.error < r.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(centre - dx);
    fv2[j] = f(centre + dx);
    const double sum = fv1[j] + fv2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }
  const double result = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  double floor = 0.0;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    floor = 50.0 * kEps * resabs;
    err = std::max(floor, err);
  }
  return {a, b, result, err, floor};
}

QuadratureResult adaptive_finite(const Integrand& f, double lo, double hi, double tol,
                                 std::size_t max_subintervals) {
  std::priority_queue<Segment, std::vector<Segment>, ByError> open;
  std::vector<Segment> frozen;
  std::size_t evaluations = 15;
  open.push(gauss_kronrod(f, lo, hi));
  double value = open.top().value;
  double error = open.top().error;
  double floor = open.top().floor;
  std::size_t count = 1;

  // The round-off floor is unavoidable, so it is granted on top of tol.
  auto target = [&] { return std::max(tol, tol * std::abs(value)) + floor; };

  while (!open.empty() && error > target() && count < max_subintervals) {
    Segment worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.error <= worst.floor || !(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) <= 64.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      frozen.push_back(worst);
      continue;
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    evaluations += 30;
    ++count;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    floor += left.floor + right.floor - worst.floor;
    open.push(left);
    open.push(right);
  }

  // Re-sum in a fixed order so the result does not carry update drift.
  std::vector<Segment> all = std::move(frozen);
  while (!open.empty()) {
    all.push_back(open.top());
    open.pop();
  }
  std::sort(all.begin(), all.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  value = 0.0;
  error = 0.0;
  floor = 0.0;
  for (const Segment& s : all) {
    value += s.value;
    error += s.error;
    floor += s.floor;
  }
  QuadratureResult result{value, error, evaluations};
  if (!std::isfinite(value) || !std::isfinite(error)) {
    throw QuadratureError("integrand produced non-finite values", result);
  }
  if (error > target()) {
    throw QuadratureError("adaptive quadrature did not reach tolerance", result);
  }
  return result;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi, double tol,
                           std::size_t max_subintervals) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");
  if (!(lo < hi)) throw std::invalid_argument("integrate: requires lo < hi");
  if (std::isinf(lo)) throw std::invalid_argument("integrate: lower limit must be finite");
  if (!std::isinf(hi)) return adaptive_finite(f, lo, hi, tol, max_subintervals);

  const double base = std::max(lo, 1.0);
  QuadratureResult head{};
  if (lo < base) head = adaptive_finite(f, lo, base, tol, max_subintervals);

  // x = base * e^s, s = t / (1 - t), t in (0, 1).
  auto mapped = [&f, base](double t) {
    const double one_minus = 1.0 - t;
    const double s = t / one_minus;
    if (s > 700.0) return 0.0;
    const double x = base * std::exp(s);
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx * x / (one_minus * one_minus);
  };
  QuadratureResult tail = adaptive_finite(mapped, 0.0, 1.0, tol, max_subintervals);
  return {head.value + tail.value, head.error_estimate + tail.error_estimate,
          head.evaluations + tail.evaluations};
}

QuadratureResult integrate(const Integrand& f, std::span<const double> points, double tol,
                           std::size_t max_subintervals) {
  if (points.size() < 2) throw std::invalid_argument("integrate: need at least two points");
  QuadratureResult total{};
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) {
      throw std::invalid_argument("integrate: split points must be strictly increasing");
    }
    const QuadratureResult part = integrate(f, points[i], points[i + 1], tol, max_subintervals);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
  }
  return total;
}

QuadratureResult integrate_log_singular(const Integrand& f, double tol,
                                        std::span<const double> interior) {
  std::vector<double> ys{0.0};
  std::vector<double> mapped;
  for (double x : interior) {
    if (!(x > 0.0 && x < 1.0)) {
      throw std::invalid_argument("integrate_log_singular: interior points must lie in (0,1)");
    }
    mapped.push_back(-std::log(x));
  }
  std::sort(mapped.begin(), mapped.end());
  ys.insert(ys.end(), mapped.begin(), mapped.end());
  ys.push_back(kInf);
  auto g = [&f](double y) {
    const double x = std::exp(-y);
    if (x == 0.0) return 0.0;
    return f(x) * x;
  };
  return integrate(g, ys, tol);
}

double gamma_upper_scaled(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("gamma_upper: requires a > 0");
  if (!(x >= 0.0)) throw std::domain_error("gamma_upper: requires x >= 0");
  if (x == 0.0) return std::tgamma(a);

  if (x < a + 1.0) {
    if (a < 1.0) {
      // Gamma(a,x) = (Gamma(a+1)-1)/a - (x^a-1)/a - x^a sum_{n>=1} (-x)^n/(n!(a+n)),
      // arranged so nothing cancels as a -> 0.
      double term = 1.0;
      double tail = 0.0;
      for (int n = 1; n < 200; ++n) {
        term *= -x / n;
        const double add = term / (a + n);
        tail += add;
        if (std::abs(add) <= 1e-17 * std::abs(tail)) break;
      }
      const double xa = std::exp(a * std::log(x));
      const double upper = std::expm1(std::lgamma(a + 1.0)) / a - std::expm1(a * std::log(x)) / a -
                           xa * tail;
      return std::exp(x) * upper;
    }
    // Lower series gamma(a,x) = e^{-x} x^a sum_n x^n / (a (a+1) ... (a+n)).
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 1000; ++n) {
      term *= x / (a + n);
      sum += term;
      if (term <= 1e-17 * sum) break;
    }
    return std::exp(x) * std::tgamma(a) - std::exp(a * std::log(x)) * sum;
  }

  // Modified Lentz evaluation of the Legendre continued fraction.
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double frac = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    frac *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(a * std::log(x)) * frac;
}

double gamma_upper(double a, double x) {
  const double scaled = gamma_upper_scaled(a, x);
  if (x == 0.0) return scaled;
  return scaled * std::exp(-x);
}

double digamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Asymptotic Bernoulli series.
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))));
  return shift + std::log(x) - 0.5 * inv - series;
}

double exp_moment(double s, double p) {
  if (!(s >= 0.0)) throw std::domain_error("exp_moment: requires s >= 0");
  if (!(p > -1.0)) throw std::domain_error("exp_moment: requires p > -1");
  if (s == 0.0) return 0.0;
  double power = std::exp((p + 1.0) * std::log(s));
  double sum = power / (p + 1.0);
  for (int k = 1; k <= kSeriesTermCap; ++k) {
    power *= s / k;
    const double add = power / (p + k + 1.0);
    sum += add;
    if (k > s && add <= kSeriesTol * sum) break;
  }
  return sum;
}

HEvaluator::HEvaluator(double p, double series_tol)
    : p_(p), gamma_p1_(0.0), series_tol_(series_tol) {
  if (!(p > 0.0)) throw std::domain_error("HEvaluator: requires p > 0");
  if (!(series_tol > 0.0)) throw std::domain_error("HEvaluator: series_tol must be positive");
  gamma_p1_ = std::tgamma(p + 1.0);
}

double HEvaluator::operator()(double r) const {
  if (!(r >= 0.0)) throw std::domain_error("h: requires r >= 0");
  if (r >= 1.0) return gamma_upper_scaled(p_ + 1.0, r - 1.0);
  return std::exp(r - 1.0) * (gamma_p1_ + exp_moment(1.0 - r, p_));
}

double log_power_integral(double m, double lo, double hi, double p) {
  if (!(lo >= 0.0 && lo < hi && std::isfinite(hi))) {
    throw std::domain_error("log_power_integral: requires 0 <= lo < hi < inf");
  }
  if (!(p > 0.0)) throw std::domain_error("log_power_integral: requires p > 0");
  // With y = m - ln x the integral becomes e^m \int_{y1}^{y2} |y|^p e^{-y} dy.
  const double y1 = m - std::log(hi);
  const double y2 = lo > 0.0 ? m - std::log(lo) : kInf;
  const double a = p + 1.0;
  double total = 0.0;
  if (y2 > 0.0) {
    const double ya = std::max(y1, 0.0);
    const double left_scale = ya == y1 ? hi : std::exp(m);
    total += left_scale * gamma_upper_scaled(a, ya);
    if (lo > 0.0) total -= lo * gamma_upper_scaled(a, y2);
  }
  if (y1 < 0.0) {
    const double z_hi = -y1;
    const double z_lo = std::max(0.0, -y2);
    total += std::exp(m) * (exp_moment(z_hi, p) - exp_moment(z_lo, p));
  }
  return total;
}

}  // namespace hardy::kernel
