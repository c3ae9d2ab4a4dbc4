#include "hardy/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "hardy/cone.hpp"
#include "hardy/constants.hpp"
#include "hardy/extremal.hpp"
#include "hardy/kernel.hpp"
#include "hardy/norms.hpp"
#include "hardy/operators.hpp"
#include "hardy/parallel.hpp"

namespace hardy {

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Main: return "main";
    case Suite::Kolyada: return "kolyada";
    case Suite::Compare: return "compare";
    case Suite::Sqrd: return "sqrd";
    case Suite::Lemmas: return "lemmas";
    case Suite::All: return "all";
  }
  return "all";
}

Suite suite_from_name(std::string_view name) {
  for (Suite s : {Suite::Main, Suite::Kolyada, Suite::Compare, Suite::Sqrd, Suite::Lemmas,
                  Suite::All}) {
    if (suite_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<double> default_p_grid() { return {1.0, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0}; }

namespace {

constexpr double kQuadTol = 1e-13;
constexpr std::uint64_t kPStream = 0x70a3d70a3d70a3d7ULL;
constexpr std::uint64_t kShuffleStream = 0x5851f42d4c957f2dULL;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string tagged(const std::string& name, double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", p);
  return name + "[p=" + buf + "]";
}

double relative(double x, double scale) { return x / std::max(1.0, std::abs(scale)); }

// Signed relative excess of `ratio` over [lo, hi].
double bound_excess(double ratio, double lo, double hi) {
  const double below = lo > 0.0 ? (lo - ratio) / lo : lo - ratio;
  const double above = (ratio - hi) / hi;
  return std::max(below, above);
}

struct Outcome {
  bool any = false;
  double worst = 0.0;
  std::size_t count = 0;
  std::string detail;

  void offer(double violation, const std::string& what) {
    ++count;
    // A NaN is the worst possible outcome and sticks once seen.
    if (!any || (!std::isnan(worst) && (std::isnan(violation) || violation > worst))) {
      any = true;
      worst = violation;
      detail = what;
    }
  }
};

// One (sample, p) evaluation. Returns false when p is outside the check's
// domain.
using SampleCheck =
    std::function<bool(std::size_t index, double p, double& violation, std::string& what)>;

VerificationReport sweep(const std::string& name, const SweepOptions& options, double tol,
                         const SampleCheck& check) {
  if (options.samples < 1) throw std::invalid_argument("sweep: samples must be >= 1");
  const std::vector<Outcome> parts = parallel_map(options.samples, [&](std::size_t i) {
    Outcome out;
    auto run = [&](double p) {
      double violation = 0.0;
      std::string what;
      if (check(i, p, violation, what)) {
        out.offer(violation, "sample=" + std::to_string(i) + " p=" + num(p) + " " + what);
      }
    };
    if (options.random_p) {
      const double u = unit_uniform(derive_seed(options.seed ^ kPStream, i));
      run(options.p_lo + (options.p_hi - options.p_lo) * u);
    } else {
      for (double p : options.p_grid) run(p);
    }
    return out;
  });

  Outcome merged;
  std::size_t total = 0;
  for (const Outcome& part : parts) {
    total += part.count;
    if (part.any) {
      const std::size_t keep = merged.count;
      merged.offer(part.worst, part.detail);
      merged.count = keep;
    }
  }
  std::vector<std::string> details;
  if (merged.any) details.push_back(merged.detail);
  return make_report(name, total, merged.any ? merged.worst : 0.0, tol, std::move(details));
}

StepFunction sample(const SweepOptions& options, std::size_t i) {
  return random_cone_sample(derive_seed(options.seed, i), options.max_pieces);
}

// (H*^2 - H*) g for a step g, written on (a_{k-1}, a_k] as a quadratic in
// delta = ln x - d_k:  (b_k/2) delta^2 + (b_k - V_k) delta + W_k.
struct Quadratic {
  double half_b = 0.0;
  double linear = 0.0;
  double constant = 0.0;
  double operator()(double delta) const { return (half_b * delta + linear) * delta + constant; }
};

std::vector<double> roots_below_zero(const Quadratic& q, double lower) {
  std::vector<double> out;
  const double disc = q.linear * q.linear - 4.0 * q.half_b * q.constant;
  if (!(disc > 0.0)) return out;
  const double s = q.linear + std::copysign(std::sqrt(disc), q.linear);
  const double w = -0.5 * s;
  for (double r : {w / q.half_b, w != 0.0 ? q.constant / w : 0.0}) {
    if (r > lower && r < 0.0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double sqrd_pow(const StepFunction& g, double p) {
  const std::size_t n = g.size();
  std::vector<double> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = std::log(g.breakpoint(k));
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    Quadratic q;
    q.half_b = 0.5 * g.value(k);
    double v = 0.0;
    for (std::size_t j = k + 1; j < n; ++j) {
      const double width = d[j] - d[j - 1];
      v += g.value(j) * width;
      q.constant += g.value(j) * width * (0.5 * (d[j] + d[j - 1]) - 1.0 - d[k]);
    }
    q.linear = g.value(k) - v;

    if (k == 0) {
      // x = a_1 e^{-y}: removes the ln^2 growth at the origin.
      const double a1 = g.breakpoint(0);
      std::vector<double> ys{0.0};
      std::vector<double> roots = roots_below_zero(q, -kInfinity);
      for (auto it = roots.rbegin(); it != roots.rend(); ++it) ys.push_back(-*it);
      ys.push_back(kInfinity);
      auto integrand = [&](double y) {
        if (y > 1500.0) return 0.0;  // e^{-y} underflows long before the quadratic matters
        const double v = std::abs(q(-y));
        return v == 0.0 ? 0.0 : a1 * std::exp(p * std::log(v) - y);
      };
      total += kernel::integrate(integrand, ys, kQuadTol).value;
    } else {
      const double lo = g.breakpoint(k - 1);
      const double hi = g.breakpoint(k);
      std::vector<double> xs{lo};
      for (double r : roots_below_zero(q, d[k - 1] - d[k])) {
        const double x = hi * std::exp(r);
        if (x > xs.back() && x < hi) xs.push_back(x);
      }
      xs.push_back(hi);
      auto integrand = [&](double x) { return std::pow(std::abs(q(std::log(x) - d[k])), p); };
      total += kernel::integrate(integrand, xs, kQuadTol).value;
    }
  }
  return total;
}

// Random nonnegative step, rescaled so that a_N = 1 and max b = 1 (both
// ratios are invariant under dilation and scaling).
StepFunction sqrd_sample(const SweepOptions& options, std::size_t i) {
  const StepFunction base = sample(options, i);
  std::vector<double> values(base.values().begin(), base.values().end());
  std::mt19937_64 rng(derive_seed(options.seed ^ kShuffleStream, i));
  for (std::size_t k = values.size(); k > 1; --k) {
    std::swap(values[k - 1], values[rng() % k]);
  }
  const double top = *std::max_element(values.begin(), values.end());
  for (double& v : values) v /= top;
  std::vector<double> breakpoints(base.breakpoints().begin(), base.breakpoints().end());
  const double end = breakpoints.back();
  for (double& a : breakpoints) a /= end;
  breakpoints.back() = 1.0;
  return StepFunction(std::move(breakpoints), std::move(values));
}

// |y-1|^{p-2} psi(y) e^{shift-y} integrated over (s, inf), psi = 1 or y - 1.
// For p < 2 the pieces next to y = 1 go through u = |y-1|^{p-1}.
double weighted_tail(double p, double s, bool odd, double shift) {
  auto direct = [&](double y) {
    if (y - shift > 1500.0) return 0.0;
    const double w = y - 1.0;
    const double base = std::pow(std::abs(w), p - 2.0) * std::exp(shift - y);
    return odd ? base * w : base;
  };
  if (p >= 2.0) {
    std::vector<double> pts{s};
    if (s < 1.0) pts.push_back(1.0);
    pts.push_back(kInfinity);
    return kernel::integrate(direct, pts, kQuadTol).value;
  }
  const double inv = 1.0 / (p - 1.0);
  auto substituted = [&](double sign) {
    return [&, sign](double u) {
      const double w = std::pow(u, inv);
      const double y = 1.0 + sign * w;
      const double e = std::exp(shift - y);
      return inv * (odd ? sign * w * e : e);
    };
  };
  double total = 0.0;
  if (s < 1.0) {
    total += kernel::integrate(substituted(-1.0), 0.0, std::pow(1.0 - s, p - 1.0), kQuadTol).value;
  }
  if (s < 2.0) {
    const double u_lo = s > 1.0 ? std::pow(s - 1.0, p - 1.0) : 0.0;
    total += kernel::integrate(substituted(1.0), u_lo, 1.0, kQuadTol).value;
    total += kernel::integrate(direct, 2.0, kInfinity, kQuadTol).value;
  } else {
    total += kernel::integrate(direct, s, kInfinity, kQuadTol).value;
  }
  return total;
}

void require_above_one(double p, const char* who) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::domain_error(std::string(who) + ": requires 1 < p < inf");
  }
}

}  // namespace

VerificationReport sweep_dual_bounds(const SweepOptions& options) {
  return sweep("dual_bounds", options, options.slack,
               [&](std::size_t i, double p, double& violation, std::string& what) {
                 if (!(p >= 1.0)) return false;
                 const StepFunction f = sample(options, i);
                 const double ratio = std::pow(dual_osc_pow(f, p) / lp_pow(f, p), 1.0 / p);
                 const auto [lo, hi] = dual_bounds(p);
                 violation = bound_excess(ratio, lo, hi);
                 what = "ratio=" + num(ratio);
                 return true;
               });
}

VerificationReport sweep_hardy_bounds(const SweepOptions& options) {
  return sweep("hardy_bounds", options, options.slack,
               [&](std::size_t i, double p, double& violation, std::string& what) {
                 if (!(p > 1.0)) return false;
                 const StepFunction f = sample(options, i);
                 const double ratio = std::pow(hardy_osc_pow(f, p) / lp_pow(f, p), 1.0 / p);
                 const SharpConstants s = sharp(p);
                 violation = bound_excess(ratio, s.hardy_lower, s.hardy_upper);
                 what = "ratio=" + num(ratio);
                 return true;
               });
}

VerificationReport sweep_compare_bounds(const SweepOptions& options) {
  return sweep("compare_bounds", options, options.slack,
               [&](std::size_t i, double p, double& violation, std::string& what) {
                 if (!(p > 1.0)) return false;
                 const StepFunction f = sample(options, i);
                 const double ratio = std::pow(dual_osc_pow(f, p) / hardy_osc_pow(f, p), 1.0 / p);
                 const SharpConstants s = sharp(p);
                 violation = bound_excess(ratio, s.compare_lower, s.compare_upper);
                 what = "ratio=" + num(ratio);
                 return true;
               });
}

VerificationReport sweep_sqrd_bounds(const SweepOptions& options) {
  // The left side is a quadrature, so the tolerance is the quadrature one.
  return sweep("sqrd_bounds", options, std::max(options.slack, 1e-9),
               [&](std::size_t i, double p, double& violation, std::string& what) {
                 if (!(p > 1.0)) return false;
                 const StepFunction g = sqrd_sample(options, i);
                 const double image = lp_pow(dual_hardy(to_piecewise(g)), p);
                 const double ratio = std::pow(sqrd_pow(g, p) / image, 1.0 / p);
                 const auto [lo, hi] = dual_bounds(p);
                 violation = bound_excess(ratio, lo, hi);
                 what = "ratio=" + num(ratio);
                 return true;
               });
}

VerificationReport sweep_inversion(const SweepOptions& options) {
  SweepOptions single = options;
  single.random_p = false;
  single.p_grid = {0.0};
  return sweep("inversion_identity", single, 1e-10,
               [&](std::size_t i, double, double& violation, std::string& what) {
                 const StepFunction f = sample(options, i);
                 violation = inversion_residual(f, residual_grid(f));
                 what = "pieces=" + std::to_string(f.size());
                 return true;
               });
}

VerificationReport sweep_isometry(const SweepOptions& options) {
  SweepOptions single = options;
  single.random_p = false;
  single.p_grid = {2.0};
  return sweep("p2_isometry", single, 1e-10,
               [&](std::size_t i, double, double& violation, std::string& what) {
                 const NormReport r = norm_report(sample(options, i), 2.0);
                 violation = std::max(std::abs(r.ratio_dual - 1.0), std::abs(r.ratio_hardy - 1.0));
                 what = "ratio_dual=" + num(r.ratio_dual) + " ratio_hardy=" + num(r.ratio_hardy);
                 return true;
               });
}

VerificationReport check_lemma_tech(double p, std::span<const double> u_grid,
                                    std::span<const double> t_grid) {
  require_above_one(p, "check_lemma_tech");
  const kernel::HEvaluator h(p);
  const double h0 = h(0.0);
  Outcome out;
  for (double u : u_grid) {
    if (!(u > 0.0)) throw std::invalid_argument("check_lemma_tech: u must be positive");
    const double hu = h(u);
    for (double t : t_grid) {
      if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("check_lemma_tech: t in [0,1]");
      const double lhs = h(std::pow(t, 1.0 / p) * u);
      const double rhs = (1.0 - t) * h0 + t * hu;
      double excess = 0.0;
      if (p < 2.0) {
        excess = lhs - rhs;
      } else if (p > 2.0) {
        excess = rhs - lhs;
      } else {
        excess = std::abs(lhs - rhs);
      }
      out.offer(relative(excess, rhs), "u=" + num(u) + " t=" + num(t));
    }
  }
  return make_report(tagged("lemma_tech", p), out.count, out.any ? out.worst : 0.0, 1e-10,
                     out.any ? std::vector<std::string>{out.detail} : std::vector<std::string>{});
}

double g_function(double p, double s) {
  require_above_one(p, "g_function");
  if (!(s >= 0.0)) throw std::domain_error("g_function: requires s >= 0");
  const double even = s > 0.0 ? weighted_tail(p, s, false, 0.0) : 0.0;
  return s * even - weighted_tail(p, s, true, 0.0);
}

std::vector<VerificationReport> check_g_function(double p, std::span<const double> s_grid,
                                                 double decay_at) {
  require_above_one(p, "check_g_function");
  const bool flat = p == 2.0;
  Outcome sign;
  for (double s : s_grid) {
    const double g = g_function(p, s);
    double v = std::abs(g);
    if (p < 2.0) v = -g;
    if (p > 2.0) v = g;
    sign.offer(v, "s=" + num(s) + " g=" + num(g));
  }
  std::vector<VerificationReport> out;
  out.push_back(make_report(tagged("g_sign", p), sign.count, sign.any ? sign.worst : 0.0,
                            flat ? 1e-10 : 1e-9,
                            sign.any ? std::vector<std::string>{sign.detail}
                                     : std::vector<std::string>{}));
  const double g0 = g_function(p, 0.0);
  const double expect = (1.0 - cp(p)) / p;
  out.push_back(make_report(tagged("g_at_zero", p), 1, std::abs(g0 - expect), 1e-9,
                            {"g(0)=" + num(g0) + " (1-C_p)/p=" + num(expect)}));
  const double tail = g_function(p, decay_at);
  out.push_back(make_report(tagged("g_decay", p), 1, std::abs(tail), 1e-4,
                            {"g(" + num(decay_at) + ")=" + num(tail)}));
  return out;
}

std::vector<VerificationReport> check_identities(double p, std::span<const double> r_grid) {
  require_above_one(p, "check_identities");
  const kernel::HEvaluator h(p);
  Outcome first;
  Outcome second;
  for (double r : r_grid) {
    if (!(r >= 0.0)) throw std::invalid_argument("check_identities: r must be >= 0");
    const double odd = weighted_tail(p, r, true, r);
    const double hr = h(r);
    const double rhs1 = hr - std::pow(std::abs(r - 1.0), p);
    first.offer(relative(std::abs(p * odd - rhs1), rhs1), "r=" + num(r));
    if (r == 1.0 && p < 2.0) continue;
    const double even = weighted_tail(p, r, false, r);
    const double rhs2 = odd - (r == 1.0 ? 0.0 : std::pow(std::abs(r - 1.0), p - 2.0) * (r - 1.0));
    second.offer(relative(std::abs((p - 1.0) * even - rhs2), rhs2), "r=" + num(r));
  }
  auto report = [&](const std::string& name, const Outcome& o) {
    return make_report(tagged(name, p), o.count, o.any ? o.worst : 0.0, 1e-9,
                       o.any ? std::vector<std::string>{o.detail} : std::vector<std::string>{});
  };
  std::vector<VerificationReport> out;
  out.push_back(report("identity_odd_moment", first));
  out.push_back(report("identity_even_moment", second));
  const double c = cp(p);
  const double h0 = h(0.0);
  out.push_back(make_report(tagged("h0_equals_cp", p), 1, std::abs(h0 - c) / c, 1e-12,
                            {"h(0)=" + num(h0) + " C_p=" + num(c)}));
  return out;
}

std::vector<VerificationReport> check_family_limits(double p) {
  require_above_one(p, "check_family_limits");
  std::vector<double> q;
  for (double x : default_q_list(p, 4)) {
    if (x > 1.0) q.push_back(x);
  }
  if (q.empty()) throw std::domain_error("check_family_limits: p too close to 1");
  const FamilyScan scan = family_scan(p, q);

  // Each gap must shrink with k, and the last must be under 1% of the limit.
  auto approach = [&](const std::string& name, const std::vector<double>& ratios, double limit) {
    double worst = -kInfinity;
    std::string detail;
    for (std::size_t k = 0; k + 1 < ratios.size(); ++k) {
      const double growth = std::abs(ratios[k + 1] - limit) - std::abs(ratios[k] - limit);
      if (growth > worst) {
        worst = growth;
        detail = "q=" + num(q[k + 1]) + " ratio=" + num(ratios[k + 1]);
      }
    }
    const double final_gap = std::abs(ratios.back() - limit) / limit - 0.01;
    if (final_gap > worst) {
      worst = final_gap;
      detail = "final ratio=" + num(ratios.back()) + " limit=" + num(limit);
    }
    return make_report(tagged(name, p), ratios.size(), worst, 1e-10, {detail});
  };

  std::vector<VerificationReport> out;
  out.push_back(approach("family_test1", scan.ratios_test1, p - 1.0));
  out.push_back(approach("family_test2", scan.ratios_test2, (p - 1.0) * (p - 1.0)));
  double eps_worst = 0.0;
  for (double e : scan.eps_check) eps_worst = std::max(eps_worst, std::abs(e - 1.0));
  out.push_back(make_report(tagged("family_eps_norm", p), scan.eps_check.size(), eps_worst, 1e-10));
  return out;
}

VerificationReport check_keps_convergence(double p, std::span<const double> eps_list) {
  require_above_one(p, "check_keps_convergence");
  const std::vector<KepsRow> rows = keps_scan(p, eps_list);
  const double target = cp_root(p);
  double worst = -kInfinity;
  std::string detail;
  auto offer = [&](double v, const std::string& what) {
    if (v > worst) {
      worst = v;
      detail = what;
    }
  };
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string at = "eps=" + num(rows[k].eps);
    offer(rows[k].norm_dual_image - 1.0, at + " image norm above 1");
    if (k == 0) continue;
    offer(rows[k - 1].norm_dual_image - rows[k].norm_dual_image, at + " image norm not increasing");
    offer(std::abs(rows[k].norm_sqrd_image - target) - std::abs(rows[k - 1].norm_sqrd_image - target),
          at + " gap to C_p^{1/p} not shrinking");
  }
  return make_report(tagged("keps_convergence", p), rows.size(), worst, 1e-9, {detail});
}

std::vector<VerificationReport> run_suite(Suite suite, const SweepOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("run_suite: samples must be >= 1");
  auto wants = [&](Suite s) { return suite == Suite::All || suite == s; };
  std::vector<double> fixed_p;
  for (double p : options.p_grid) {
    if (p > 1.0) fixed_p.push_back(p);
  }

  std::vector<VerificationReport> out;
  if (wants(Suite::Main)) {
    out.push_back(sweep_dual_bounds(options));
    out.push_back(sweep_inversion(options));
    out.push_back(sweep_isometry(options));
    std::vector<double> grid;
    for (int i = 1; i <= 20; ++i) grid.push_back(0.25 * i);
    for (VerificationReport& r : property_scan(grid)) out.push_back(std::move(r));
  }
  if (wants(Suite::Kolyada)) out.push_back(sweep_hardy_bounds(options));
  if (wants(Suite::Compare)) out.push_back(sweep_compare_bounds(options));
  if (wants(Suite::Sqrd)) {
    out.push_back(sweep_sqrd_bounds(options));
    const std::array<double, 3> eps{0.1, 0.01, 0.001};
    for (double p : fixed_p) out.push_back(check_keps_convergence(p, eps));
  }
  if (wants(Suite::Lemmas)) {
    std::vector<double> u;
    std::vector<double> t;
    std::vector<double> s;
    std::vector<double> r;
    for (int i = 1; i <= 50; ++i) u.push_back(0.2 * i);
    for (int i = 0; i < 50; ++i) t.push_back(i / 49.0);
    for (int i = 1; i <= 100; ++i) s.push_back(0.1 * i);
    for (int i = 0; i <= 20; ++i) r.push_back(0.25 * i);
    for (double p : fixed_p) {
      out.push_back(check_lemma_tech(p, u, t));
      // g behaves like s^{p-3} e^{-s}, so the decay point moves out with p.
      const double decay_at = 10.0 * std::max(1.0, p - 2.0);
      for (VerificationReport& x : check_g_function(p, s, decay_at)) out.push_back(std::move(x));
      for (VerificationReport& x : check_identities(p, r)) out.push_back(std::move(x));
      for (VerificationReport& x : check_family_limits(p)) out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace hardy
