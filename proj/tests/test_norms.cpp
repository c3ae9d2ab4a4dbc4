#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "hardy/norms.hpp"
#include "hardy/operators.hpp"
#include "oracle.hpp"

using namespace hardy;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("two-step example at p = 2") {
  const StepFunction f({1.0, std::exp(1.0)}, {2.0, 1.0});
  CHECK(std::abs(dual_osc_pow(f, 2.0) - (3.0 + std::exp(1.0))) <= 1e-12);
  CHECK(dual_osc_pow(f, kernel::HEvaluator(2.0)) == dual_osc_pow(f, 2.0));
  // The p = 2 isometry: ||f||^2 = 4 + (e - 1).
  CHECK(lp_pow(f, 2.0) == doctest::Approx(3.0 + std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("cone step norms match quadrature of the definitions") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const StepFunction f = random_cone_sample(derive_seed(101, i), 8);
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
      CAPTURE(i);
      CAPTURE(p);
      CHECK(rel(dual_osc_pow(f, p), oracle::dual_osc_pow(f, p)) < 1e-10);
      CHECK(rel(lp_pow(f, p), oracle::lp_pow(f, p)) < 1e-14);
      if (p > 1.0) CHECK(rel(hardy_osc_pow(f, p), oracle::hardy_osc_pow(f, p)) < 1e-10);
    }
  }
}

TEST_CASE("general piecewise norms agree with the step shortcut") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const StepFunction f = random_cone_sample(derive_seed(7, i), 6);
    for (double p : {1.5, 3.0}) {
      CHECK(rel(lp_pow(dual_osc(to_piecewise(f)), p), dual_osc_pow(f, p)) < 1e-11);
      CHECK(rel(lp_pow(hardy_osc(to_piecewise(f)), p), hardy_osc_pow(f, p)) < 1e-11);
      const NormReport a = norm_report(f, p);
      const NormReport b = norm_report(to_piecewise(f), p);
      CHECK(rel(a.ratio_dual, b.ratio_dual) < 1e-11);
      CHECK(rel(a.ratio_hardy, b.ratio_hardy) < 1e-11);
    }
  }
}

TEST_CASE("family norms in closed form") {
  const double p = 3.0;
  const double q = 2.5;
  CHECK(lp_pow(family(Family::GQ, q), p) == doctest::Approx(std::pow(q, 1 - p) / (p - q)).epsilon(1e-14));
  CHECK(lp_pow(family(Family::FQ, q), p) == doctest::Approx(1 + q / (p - q)).epsilon(1e-14));
  CHECK(lp_pow(family(Family::Chi01), p) == doctest::Approx(1.0));
  const kernel::HEvaluator h(p);
  const double expected = h(q) + std::pow(q - 1, p) * q / (p - q);
  CHECK(lp_pow(dual_osc(family(Family::FQ, q)), p) == doctest::Approx(expected).epsilon(1e-13));
  // g_q is not in L^p once q >= p.
  CHECK_THROWS_AS(lp_pow(family(Family::GQ, 3.0), 3.0), std::domain_error);
  CHECK_THROWS_AS(lp_pow(family(Family::GQ, 4.0), 3.0), std::domain_error);
}

TEST_CASE("single pieces against direct quadrature") {
  auto quad = [](const Piece& piece, double p) {
    auto f = [&](double x) { return piece(x); };
    return oracle::pow_integral(f, piece.lo, piece.hi, p);
  };
  const std::array<Piece, 5> pieces{
      Piece::log_affine(0.0, 2.0, 0.3, -1.0), Piece::log_affine(0.5, 3.0, -0.2, 2.0),
      Piece::linear_plus_log(0.5, 1.0, 1.0, -1.5, 0.7), Piece::power(0.0, 1.0, 2.0, -0.3),
      Piece::reciprocal(1.0, 5.0, -2.0)};
  for (const Piece& piece : pieces) {
    for (double p : {1.0, 1.7, 3.0}) {
      CAPTURE(kind_name(piece.kind()));
      CAPTURE(p);
      CHECK(rel(lp_pow(piece, p), quad(piece, p)) < 1e-10);
    }
  }
  Terms mixed;
  mixed.constant = 1.0;
  mixed.reciprocal = -2.0;
  mixed.log = 0.5;
  const Piece m{0.5, 4.0, mixed};
  CHECK(rel(lp_pow(m, 2.0), quad(m, 2.0)) < 1e-10);
}

TEST_CASE("non-integrable pieces are rejected") {
  CHECK_THROWS_AS(lp_pow(Piece::power(0.0, 1.0, 1.0, -0.5), 2.0), std::domain_error);
  CHECK_THROWS_AS(lp_pow(Piece::reciprocal(0.0, 1.0, 1.0), 2.0), std::domain_error);
  CHECK_THROWS_AS(lp_pow(Piece::reciprocal(1.0, kInfinity, 1.0), 1.0), std::domain_error);
  CHECK(lp_pow(Piece::reciprocal(1.0, kInfinity, 1.0), 2.0) == doctest::Approx(1.0));
}

TEST_CASE("norm report") {
  const StepFunction f = random_cone_sample(derive_seed(5, 0), 8);
  const NormReport r = norm_report(f, 2.0);
  CHECK(r.ratio_dual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.ratio_hardy == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.ratio_dual_over_hardy == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.norm_f == doctest::Approx(std::sqrt(oracle::lp_pow(f, 2.0))));
  CHECK_THROWS_AS(norm_report(f, 1.0), std::domain_error);
  CHECK_THROWS_AS(hardy_osc_pow(f, 1.0), std::domain_error);
}
