#include "hardy/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "hardy/kernel.hpp"
#include "hardy/nelder_mead.hpp"
#include "hardy/norms.hpp"
#include "hardy/operators.hpp"
#include "hardy/parallel.hpp"

namespace hardy {

std::string_view mode_name(SearchMode mode) { return mode == SearchMode::Sup ? "sup" : "inf"; }

SearchMode mode_from_name(std::string_view name) {
  if (name == "sup") return SearchMode::Sup;
  if (name == "inf") return SearchMode::Inf;
  throw std::invalid_argument("unknown search mode '" + std::string(name) + "'");
}

StepFunction decode_cone(std::span<const double> coords) {
  if (coords.empty() || coords.size() % 2 != 0) {
    throw std::invalid_argument("decode_cone: expects 2N coordinates");
  }
  const std::size_t n = coords.size() / 2;
  std::vector<double> breakpoints(n);
  std::vector<double> values(n);
  double a = 0.0;
  double log_b = std::clamp(coords[n], -30.0, 30.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double step = std::exp(std::clamp(coords[k], -30.0, 30.0));
    const double next = a + step;
    a = next > a ? next : std::nextafter(a, kInfinity);
    breakpoints[k] = a;
    if (k > 0) log_b -= std::min(coords[n + k] * coords[n + k], 60.0);
    values[k] = std::exp(log_b);
  }
  return StepFunction(std::move(breakpoints), std::move(values));
}

double dual_ratio(const StepFunction& f, double p) {
  return std::pow(dual_osc_pow(f, p) / lp_pow(f, p), 1.0 / p);
}

namespace {

struct RestartOutcome {
  double best_ratio = 0.0;
  std::vector<double> best_coords;
  std::vector<TracePoint> trace;
  std::size_t evaluations = 0;
  double extreme = 0.0;
};

RestartOutcome run_restart(double p, SearchMode mode, const SearchOptions& options,
                           std::size_t index) {
  const kernel::HEvaluator h(p);
  const double sign = mode == SearchMode::Sup ? -1.0 : 1.0;
  std::mt19937_64 rng(derive_seed(options.seed, index));
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng()); };

  const std::size_t n = options.pieces;
  std::vector<double> start(2 * n);
  for (std::size_t k = 0; k < n; ++k) start[k] = uniform(-2.0, 1.0);
  for (std::size_t k = 0; k < n; ++k) start[n + k] = uniform(-1.5, 1.5);

  RestartOutcome out;
  out.best_ratio = std::numeric_limits<double>::quiet_NaN();
  out.extreme = out.best_ratio;
  std::size_t counter = 0;
  auto objective = [&](const std::vector<double>& x) {
    const StepFunction f = decode_cone(x);
    const double lhs = dual_osc_pow(f, h);
    const double ratio = std::pow(lhs / lp_pow(f, p), 1.0 / p);
    ++counter;
    if (!std::isfinite(ratio)) return std::numeric_limits<double>::infinity();
    if (std::isnan(out.extreme) || sign * ratio < sign * out.extreme) out.extreme = ratio;
    if (std::isnan(out.best_ratio) || sign * ratio < sign * out.best_ratio) {
      out.best_ratio = ratio;
      out.best_coords = x;
      out.trace.push_back({counter, ratio});
    }
    return sign * ratio;
  };

  std::vector<double> x = start;
  double step = 1.0;
  while (counter < options.budget) {
    const std::size_t before = counter;
    const SimplexResult r = nelder_mead(objective, x, step, options.budget - counter);
    x = out.best_coords.empty() ? r.x : out.best_coords;
    step = std::max(step * 0.5, 1e-3);
    if (counter == before) break;
  }
  out.evaluations = counter;
  return out;
}

}  // namespace

SearchResult search(double p, SearchMode mode, const SearchOptions& options) {
  if (!(p > 1.0)) throw std::invalid_argument("search: requires p > 1");
  if (options.pieces < 1) throw std::invalid_argument("search: pieces must be >= 1");
  if (options.budget < 1) throw std::invalid_argument("search: budget must be >= 1");
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);

  const std::vector<RestartOutcome> outcomes = parallel_map(
      restarts, [&](std::size_t i) { return run_restart(p, mode, options, i); });

  const double sign = mode == SearchMode::Sup ? -1.0 : 1.0;
  std::size_t winner = 0;
  SearchResult result;
  result.p = p;
  result.mode = mode;
  result.extreme_ratio = outcomes[0].extreme;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    result.iterations += outcomes[i].evaluations;
    if (sign * outcomes[i].best_ratio < sign * outcomes[winner].best_ratio) winner = i;
    if (sign * outcomes[i].extreme < sign * result.extreme_ratio) {
      result.extreme_ratio = outcomes[i].extreme;
    }
  }
  result.winning_restart = winner;
  result.best_ratio = outcomes[winner].best_ratio;
  result.best_function = decode_cone(outcomes[winner].best_coords);
  result.trace = outcomes[winner].trace;
  return result;
}

std::vector<double> default_q_list(double p, int count) {
  std::vector<double> q;
  for (int k = 1; k <= count; ++k) q.push_back(p - std::pow(10.0, -k));
  return q;
}

FamilyScan family_scan(double p, std::span<const double> q_list) {
  if (!(p > 1.0)) throw std::invalid_argument("family_scan: requires p > 1");
  const kernel::HEvaluator h(p);
  FamilyScan scan;
  scan.p = p;
  for (double q : q_list) {
    if (!(q > 1.0 && q < p)) {
      throw std::invalid_argument("family_scan: q must lie in (1, p), got " + std::to_string(q));
    }
    // Tail integral \int_1^\infty x^{-p/q} dx.
    const double tail = q / (p - q);
    const double f_pow = 1.0 + tail;
    // (H*-I) f_q = q - 1 - ln x on (0,1], (q-1) x^{-1/q} beyond.
    const double dual_f_pow = h(q) + std::pow(q - 1.0, p) * tail;
    // (H*-I)(f_q - g_q) = q - 2 - ln x on (0,1], ((q-1)^2/q) x^{-1/q} beyond.
    const double dual_diff_pow = h(q - 1.0) + std::pow((q - 1.0) * (q - 1.0) / q, p) * tail;
    // (H-I)(f_q - g_q) = g_q by the inversion identity.
    const double g_pow = lp_pow(family(Family::GQ, q), p);
    const double eps = std::pow(q, (p - 1.0) / p) * std::pow(p - q, 1.0 / p);

    scan.q_list.push_back(q);
    scan.ratios_test1.push_back(std::pow(dual_f_pow / f_pow, 1.0 / p));
    scan.ratios_test2.push_back(std::pow(dual_diff_pow / g_pow, 1.0 / p));
    scan.eps_check.push_back(eps * std::pow(g_pow, 1.0 / p));
  }
  return scan;
}

std::vector<KepsRow> keps_scan(double p, std::span<const double> eps_list) {
  if (!(p >= 1.0)) throw std::invalid_argument("keps_scan: requires p >= 1");
  std::vector<KepsRow> rows;
  for (double eps : eps_list) {
    const PiecewiseFunction image = dual_hardy(family(Family::KEps, eps));
    const PiecewiseFunction sqrd = dual_osc(image);
    rows.push_back({eps, std::pow(lp_pow(image, p), 1.0 / p), std::pow(lp_pow(sqrd, p), 1.0 / p)});
  }
  return rows;
}

}  // namespace hardy
