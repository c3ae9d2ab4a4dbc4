#include "hardy/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hardy/kernel.hpp"

namespace hardy {

namespace {

void require_positive(double p, const char* who) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::domain_error(std::string(who) + ": requires 0 < p < inf");
  }
}

}  // namespace

double cp(double p) {
  require_positive(p, "cp");
  // Both halves of the integral carry e^{-1} after substituting y = -1 - ln x
  // and y = 1 + ln x.
  return std::exp(-1.0) * (std::tgamma(p + 1.0) + kernel::exp_moment(1.0, p));
}

double cp_quadrature(double p, double tol) {
  require_positive(p, "cp_quadrature");
  const std::array<double, 1> kink{std::exp(-1.0)};
  auto integrand = [p](double x) { return std::pow(std::abs(1.0 + std::log(x)), p); };
  return kernel::integrate_log_singular(integrand, tol, kink).value;
}

double gamma_prime(double p) {
  require_positive(p, "gamma_prime");
  return std::tgamma(p + 1.0) * kernel::digamma(p + 1.0);
}

double inverse_square_series(double p) {
  require_positive(p, "inverse_square_series");
  double factorial = 1.0;
  double sum = 0.0;
  for (int k = 0; k < kernel::kSeriesTermCap; ++k) {
    if (k > 0) factorial *= k;
    const double denom = k + p + 1.0;
    const double term = 1.0 / (factorial * denom * denom);
    sum += term;
    if (term <= kernel::kSeriesTol * sum) break;
  }
  return sum;
}

double cp_prime(double p) {
  return std::exp(-1.0) * (gamma_prime(p) - inverse_square_series(p));
}

double cp_root(double p) { return std::pow(cp(p), 1.0 / p); }

double cp_limit_zero() {
  const std::array<double, 1> kink{std::exp(-1.0)};
  auto integrand = [](double x) { return std::log(std::abs(1.0 + std::log(x))); };
  return std::exp(kernel::integrate_log_singular(integrand, 1e-13, kink).value);
}

std::pair<double, double> dual_bounds(double p) {
  if (!(p >= 1.0)) throw std::domain_error("dual_bounds: requires p >= 1");
  const double root = cp_root(p);
  if (p <= 2.0) return {p - 1.0, root};
  return {root, p - 1.0};
}

SharpConstants sharp(double p) {
  if (!(p > 1.0)) throw std::domain_error("sharp: requires p > 1");
  SharpConstants s;
  s.p = p;
  std::tie(s.dual_lower, s.dual_upper) = dual_bounds(p);
  const double kolyada_root = std::pow(p - 1.0, -1.0 / p);
  const double kolyada_linear = 1.0 / (p - 1.0);
  const double squared = (p - 1.0) * (p - 1.0);
  const double mixed = cp_root(p) * std::pow(p - 1.0, 1.0 / p);
  if (p <= 2.0) {
    s.hardy_lower = kolyada_root;
    s.hardy_upper = kolyada_linear;
    s.compare_lower = squared;
    s.compare_upper = mixed;
  } else {
    s.hardy_lower = kolyada_linear;
    s.hardy_upper = kolyada_root;
    s.compare_lower = mixed;
    s.compare_upper = squared;
  }
  return s;
}

namespace {

std::string at_p(double p) {
  std::ostringstream os;
  os.precision(17);
  os << "p=" << p;
  return os.str();
}

// Worst value of values[i] - values[i+1] over consecutive grid points with
// p >= from (positive means a decrease).
VerificationReport monotone_report(const char* name, std::span<const double> grid,
                                   const std::vector<double>& values, double from) {
  double worst = 0.0;
  std::size_t samples = 0;
  std::vector<std::string> details;
  bool first = true;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (grid[i] < from) continue;
    const double drop = values[i] - values[i + 1];
    ++samples;
    if (first || drop > worst) {
      worst = drop;
      details = {at_p(grid[i]) + " -> " + at_p(grid[i + 1])};
      first = false;
    }
  }
  return make_report(name, samples, worst, 0.0, std::move(details));
}

VerificationReport convex_report(const char* name, std::span<const double> grid,
                                 const std::vector<double>& values) {
  double worst = 0.0;
  std::size_t samples = 0;
  std::vector<std::string> details;
  bool first = true;
  for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
    const double left = (values[i + 1] - values[i]) / (grid[i + 1] - grid[i]);
    const double right = (values[i + 2] - values[i + 1]) / (grid[i + 2] - grid[i + 1]);
    const double second = 2.0 * (right - left) / (grid[i + 2] - grid[i]);
    ++samples;
    if (first || -second > worst) {
      worst = -second;
      details = {at_p(grid[i + 1])};
      first = false;
    }
  }
  return make_report(name, samples, worst, 1e-10, std::move(details));
}

}  // namespace

std::vector<VerificationReport> property_scan(std::span<const double> p_grid) {
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    require_positive(p_grid[i], "property_scan");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1])) {
      throw std::invalid_argument("property_scan: grid must be strictly increasing");
    }
  }
  std::vector<double> c(p_grid.size());
  std::vector<double> root(p_grid.size());
  std::vector<double> log_c(p_grid.size());
  std::vector<double> log_inverse(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    c[i] = cp(p);
    root[i] = cp_root(p);
    log_c[i] = std::log(c[i]);
    log_inverse[i] = p * std::log(cp(1.0 / p));
  }
  std::vector<VerificationReport> out;
  out.push_back(monotone_report("cp_root_increasing", p_grid, root, 0.0));
  out.push_back(convex_report("log_cp_convex", p_grid, log_c));
  out.push_back(convex_report("log_cp_inverse_power_convex", p_grid, log_inverse));
  out.push_back(monotone_report("cp_increasing_from_1", p_grid, c, 1.0));
  out.push_back(monotone_report("cp_increasing_from_2", p_grid, c, 2.0));
  const double near_zero = cp(0.01);
  const double at_one = cp(1.0);
  out.push_back(make_report("cp_not_increasing_near_zero", 1, at_one - near_zero, 0.0,
                            {"cp(0.01)=" + std::to_string(near_zero) +
                             " cp(1)=" + std::to_string(at_one)}));
  return out;
}

}  // namespace hardy
