#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <cmath>
#include <limits>

#include "hardy/kernel.hpp"

using namespace hardy::kernel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

// e^r \int_r^\infty |y-1|^p e^{-y} dy straight from the definition.
double h_by_quadrature(double r, double p) {
  // Log form: the tail mapping reaches y ~ e^700, where pow overflows.
  auto f = [&](double y) { return std::exp(p * std::log(std::abs(y - 1.0)) + r - y); };
  if (r < 1.0) {
    const std::array<double, 3> pts{r, 1.0, kInf};
    return integrate(f, pts, 1e-14).value;
  }
  return integrate(f, r, kInf, 1e-14).value;
}

}  // namespace

TEST_CASE("quadrature on integrals with known values") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-14).value == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, 1e-14).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, kInf, 1e-14).value ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return 1.0 / (x * x); }, 1.0, kInf, 1e-14).value ==
        doctest::Approx(1.0).epsilon(1e-13));
  // Integrable endpoint singularity.
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12).value ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("split points are honoured and must increase") {
  const std::array<double, 3> pts{0.0, 0.5, 1.0};
  auto kink = [](double x) { return std::abs(x - 0.5); };
  CHECK(integrate(kink, pts, 1e-14).value == doctest::Approx(0.25).epsilon(1e-15));
  const std::array<double, 3> bad{0.0, 1.0, 0.5};
  CHECK_THROWS_AS(integrate(kink, bad, 1e-12), std::invalid_argument);
  CHECK_THROWS_AS(integrate(kink, 1.0, 0.0, 1e-12), std::invalid_argument);
}

TEST_CASE("divergent integral exhausts the budget and reports a partial result") {
  try {
    integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-12, 60);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.partial().evaluations > 0);
  }
}

TEST_CASE("log-singular mapping") {
  CHECK(integrate_log_singular([](double x) { return std::log(x); }, 1e-14).value ==
        doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(integrate_log_singular([](double x) { return std::log(x) * std::log(x); }, 1e-14).value ==
        doctest::Approx(2.0).epsilon(1e-13));
  const std::array<double, 1> outside{1.5};
  CHECK_THROWS_AS(integrate_log_singular([](double) { return 1.0; }, 1e-12, outside),
                  std::invalid_argument);
}

TEST_CASE("upper incomplete gamma against Boost") {
  for (double a : {0.3, 0.5, 1.0, 2.5, 5.0, 10.5}) {
    for (double x : {0.01, 0.5, 1.0, 3.0, 10.0, 30.0}) {
      CAPTURE(a);
      CAPTURE(x);
      CHECK(rel(gamma_upper(a, x), boost::math::tgamma(a, x)) < 1e-13);
      CHECK(rel(gamma_upper_scaled(a, x), boost::math::tgamma(a, x) * std::exp(x)) < 1e-12);
    }
  }
  CHECK(gamma_upper(2.5, 3.0) == doctest::Approx(0.407069175871302998434).epsilon(1e-14));
  // Far tail: Gamma(a,x) itself underflows, the scaled value does not.
  CHECK(gamma_upper_scaled(3.0, 800.0) == doctest::Approx(800.0 * 800.0 + 2 * 800.0 + 2).epsilon(1e-13));
}

TEST_CASE("digamma against Boost and known values") {
  const double euler = 0.57721566490153286061;
  CHECK(digamma(1.0) == doctest::Approx(-euler).epsilon(1e-15));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - euler).epsilon(1e-15));
  for (double x : {0.1, 0.5, 1.5, 3.7, 9.9, 10.0, 25.0, 123.4}) {
    CAPTURE(x);
    CHECK(rel(digamma(x), boost::math::digamma(x)) < 1e-13);
  }
}

TEST_CASE("exp_moment against quadrature") {
  CHECK(exp_moment(1.0, 1.5) == doctest::Approx(0.834836704631249795526).epsilon(1e-14));
  for (double p : {0.5, 1.0, 2.0, 3.5}) {
    for (double s : {0.1, 0.7, 1.0}) {
      const double q =
          integrate([&](double t) { return std::pow(t, p) * std::exp(t); }, 0.0, s, 1e-15).value;
      CHECK(rel(exp_moment(s, p), q) < 1e-13);
    }
  }
  CHECK(exp_moment(0.0, 2.0) == 0.0);
}

TEST_CASE("h kernel") {
  SUBCASE("frozen high-precision values") {
    CHECK(HEvaluator(1.5)(0.5) == doctest::Approx(0.867922566271152397361).epsilon(1e-14));
    CHECK(HEvaluator(2.5)(3.0) == doctest::Approx(19.1485468180554587731).epsilon(1e-14));
    CHECK(HEvaluator(3.7)(0.25) == doctest::Approx(7.33781993492809994019).epsilon(1e-14));
  }
  SUBCASE("p = 2 is the parabola r^2 + 1") {
    const HEvaluator h(2.0);
    for (double r : {0.0, 0.3, 1.0, 2.0, 7.5, 40.0}) {
      CHECK(h(r) == doctest::Approx(r * r + 1.0).epsilon(1e-14));
    }
  }
  SUBCASE("matches the defining integral") {
    for (double p : {1.0, 1.3, 2.5, 4.0}) {
      const HEvaluator h(p);
      for (double r : {0.0, 0.2, 0.999, 1.0, 1.5, 6.0, 25.0}) {
        CAPTURE(p);
        CAPTURE(r);
        CHECK(rel(h(r), h_by_quadrature(r, p)) < 1e-12);
      }
    }
  }
  SUBCASE("h is continuous across r = 1") {
    const HEvaluator h(1.7);
    CHECK(rel(h(std::nextafter(1.0, 0.0)), h(1.0)) < 1e-14);
  }
  CHECK_THROWS_AS(HEvaluator(2.0)(-0.1), std::domain_error);
  CHECK(h_eval(HEvaluator(2.0), 1.0) == doctest::Approx(2.0));
}

TEST_CASE("closed-form integral of |m - ln x|^p") {
  CHECK(log_power_integral(0.3, 0.1, 2.0, 1.7) == doctest::Approx(1.21640260859579038933).epsilon(1e-13));
  CHECK(log_power_integral(0.3, 0.0, 2.0, 1.7) == doctest::Approx(2.13883538702748333737).epsilon(1e-13));
  for (double p : {1.0, 1.5, 3.0}) {
    for (double m : {-2.0, 0.0, 0.5, 3.0}) {
      const double lo = 0.05;
      const double hi = 4.0;
      auto f = [&](double x) { return std::pow(std::abs(m - std::log(x)), p); };
      const double root = std::exp(m);
      double q = 0.0;
      if (root > lo && root < hi) {
        const std::array<double, 3> pts{lo, root, hi};
        q = integrate(f, pts, 1e-14).value;
      } else {
        q = integrate(f, lo, hi, 1e-14).value;
      }
      CAPTURE(p);
      CAPTURE(m);
      CHECK(rel(log_power_integral(m, lo, hi, p), q) < 1e-12);
    }
  }
}
