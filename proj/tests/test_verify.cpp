#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hardy/constants.hpp"
#include "hardy/kernel.hpp"
#include "hardy/verify.hpp"

using namespace hardy;

namespace {

SweepOptions small(std::size_t samples, std::uint64_t seed, std::vector<double> grid) {
  SweepOptions o;
  o.samples = samples;
  o.seed = seed;
  o.p_grid = std::move(grid);
  return o;
}

bool all_passed(const std::vector<VerificationReport>& rs) {
  for (const auto& r : rs) {
    if (!r.passed) return false;
  }
  return true;
}

// g by tanh-sinh / exp-sinh quadrature, which copes with the |y-1|^{p-2}
// endpoint singularity without any substitution.
double g_direct(double p, double s) {
  // |y-1|^k e^{-y} given the distance d = |y-1|.
  auto weight = [](double k, double y, double d) {
    if (d == 0.0 || y > 700.0) return 0.0;
    return std::exp(k * std::log(d) - y);
  };
  boost::math::quadrature::exp_sinh<double> tail;
  const double inf = std::numeric_limits<double>::infinity();
  const double mid = std::max(s, 2.0);
  double i0 = tail.integrate([&](double y) { return weight(p - 2.0, y, y - 1.0); }, mid, inf, 1e-14);
  double i1 = tail.integrate([&](double y) { return weight(p - 1.0, y, y - 1.0); }, mid, inf, 1e-14);
  // Both finite pieces end at y = 1; near it tanh-sinh hands over the exact
  // distance to the endpoint as the complement argument.
  boost::math::quadrature::tanh_sinh<double> finite;
  for (auto [a, b] : {std::pair{s, 1.0}, std::pair{std::max(s, 1.0), 2.0}}) {
    if (!(a < b)) continue;
    const double half = 0.5 * (b - a);
    auto dist = [&](double y, double yc) { return std::abs(y - 1.0) < half ? std::abs(yc) : std::abs(y - 1.0); };
    const double sign = b <= 1.0 ? -1.0 : 1.0;
    i0 += finite.integrate([&](double y, double yc) { return weight(p - 2.0, y, dist(y, yc)); }, a, b, 1e-14);
    i1 += sign * finite.integrate([&](double y, double yc) { return weight(p - 1.0, y, dist(y, yc)); }, a, b, 1e-14);
  }
  return s * i0 - i1;
}

}  // namespace

TEST_CASE("suite names round trip") {
  for (Suite s : {Suite::Main, Suite::Kolyada, Suite::Compare, Suite::Sqrd, Suite::Lemmas, Suite::All}) {
    CHECK(suite_from_name(suite_name(s)) == s);
  }
  CHECK_THROWS_AS(suite_from_name("everything"), std::invalid_argument);
  CHECK(default_p_grid().size() == 8);
}

TEST_CASE("bound sweeps pass on small samples") {
  const SweepOptions o = small(60, 3, default_p_grid());
  for (const VerificationReport& r :
       {sweep_dual_bounds(o), sweep_hardy_bounds(o), sweep_compare_bounds(o), sweep_sqrd_bounds(o),
        sweep_inversion(o), sweep_isometry(o)}) {
    CAPTURE(r.check_name);
    CAPTURE(r.worst_violation);
    CHECK(r.passed);
    CHECK(r.samples > 0);
  }
  // p = 1 is outside the Kolyada range; it is skipped rather than checked.
  CHECK(sweep_hardy_bounds(o).samples == 60 * 7);
  CHECK(sweep_dual_bounds(o).samples == 60 * 8);
}

TEST_CASE("single steps sit on the C_p bound") {
  // One-step samples are dilates of chi_(0,1], which attains C_p^{1/p}; the
  // worst excess is therefore round-off around zero.
  const VerificationReport r = sweep_dual_bounds(small(100, 11, {1.5, 3.0}));
  CHECK(std::abs(r.worst_violation) < 1e-14);
}

TEST_CASE("random-p sweeps") {
  SweepOptions o = small(200, 5, {});
  o.random_p = true;
  o.p_lo = 1.0;
  o.p_hi = 2.0;
  const VerificationReport a = sweep_dual_bounds(o);
  CHECK(a.passed);
  CHECK(a.samples == 200);
  const VerificationReport b = sweep_dual_bounds(o);
  CHECK(a.worst_violation == b.worst_violation);
  CHECK(a.details == b.details);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  const SweepOptions o = small(40, 99, {1.25, 2.5});
  ::setenv("HARDY_SHARP_THREADS", "1", 1);
  const auto one = run_suite(Suite::All, o);
  ::setenv("HARDY_SHARP_THREADS", "3", 1);
  const auto three = run_suite(Suite::All, o);
  ::unsetenv("HARDY_SHARP_THREADS");
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].check_name == three[i].check_name);
    CHECK(one[i].worst_violation == three[i].worst_violation);
    CHECK(one[i].details == three[i].details);
  }
  CHECK(all_passed(one));
}

TEST_CASE("the all suite on p = 2") {
  const auto reports = run_suite(Suite::All, small(10, 0, {2.0}));
  CHECK(all_passed(reports));
  CHECK(reports.size() > 10);
  CHECK_THROWS_AS(run_suite(Suite::Main, small(0, 0, {2.0})), std::invalid_argument);
}

TEST_CASE("lemma_tech") {
  std::vector<double> u;
  std::vector<double> t;
  for (int i = 1; i <= 50; ++i) u.push_back(0.2 * i);
  for (int i = 0; i < 50; ++i) t.push_back(i / 49.0);
  for (double p : {1.1, 1.5, 2.0, 2.5, 4.0}) {
    const VerificationReport r = check_lemma_tech(p, u, t);
    CAPTURE(p);
    CHECK(r.passed);
    CHECK(r.samples == 2500);
  }
  CHECK_THROWS_AS(check_lemma_tech(1.0, u, t), std::domain_error);
}

TEST_CASE("g against direct quadrature") {
  for (double p : {1.5, 2.0, 3.0, 3.5}) {
    for (double s : {0.0, 0.3, 0.9, 1.0, 1.7, 4.0}) {
      CAPTURE(p);
      CAPTURE(s);
      CHECK(g_function(p, s) == doctest::Approx(g_direct(p, s)).epsilon(1e-10).scale(1.0));
    }
  }
  // At p = 2 the two integrals cancel.
  CHECK(std::abs(g_function(2.0, 1.3)) < 1e-14);
  CHECK(g_function(3.0, 0.0) == doctest::Approx((1.0 - cp(3.0)) / 3.0).epsilon(1e-12));
}

TEST_CASE("g checks and identities") {
  std::vector<double> s;
  std::vector<double> r;
  for (int i = 1; i <= 100; ++i) s.push_back(0.1 * i);
  for (int i = 0; i <= 20; ++i) r.push_back(0.25 * i);
  for (double p : {1.5, 3.0}) {
    CHECK(all_passed(check_g_function(p, s)));
    CHECK(all_passed(check_identities(p, r)));
  }
  // g ~ s e^{-s} at p = 4, so the default decay point is too close in.
  const auto at4 = check_g_function(4.0, s);
  CHECK_FALSE(at4.back().passed);
  CHECK(check_g_function(4.0, s, 20.0).back().passed);
}

TEST_CASE("family limits and k_eps") {
  for (double p : {1.5, 2.0, 3.0}) {
    CAPTURE(p);
    CHECK(all_passed(check_family_limits(p)));
  }
  const std::vector<double> eps{0.1, 0.01, 0.001};
  CHECK(check_keps_convergence(3.0, eps).passed);
  CHECK(check_keps_convergence(1.5, eps).passed);
}
