#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hardy/cone.hpp"

using namespace hardy;

TEST_CASE("step function construction and evaluation") {
  const StepFunction f({1.0, 2.0, 4.0}, {3.0, 2.0, 2.0});
  CHECK(f.size() == 3);
  CHECK(f.is_cone());
  CHECK(f.support_end() == 4.0);
  CHECK(f.left(0) == 0.0);
  CHECK(f.left(2) == 2.0);
  // Right-continuous convention: (a_{n-1}, a_n].
  CHECK(f(1.0) == 3.0);
  CHECK(f(std::nextafter(1.0, 2.0)) == 2.0);
  CHECK(f(0.001) == 3.0);
  CHECK(f(4.0) == 2.0);
  CHECK(f(4.5) == 0.0);
  CHECK(eval(f, 3.0) == 2.0);

  const StepFunction up({1.0, 2.0}, {1.0, 2.0});
  CHECK_FALSE(up.is_cone());
}

TEST_CASE("validation names the offending index") {
  auto index_of = [](std::vector<double> a, std::vector<double> b) {
    try {
      StepFunction f(std::move(a), std::move(b));
    } catch (const ValidationError& e) {
      return e.index();
    }
    return std::size_t{999};
  };
  CHECK(index_of({1.0, 1.0}, {1.0, 1.0}) == 1);
  CHECK(index_of({1.0, 0.5, 2.0}, {1.0, 1.0, 1.0}) == 1);
  CHECK(index_of({-1.0}, {1.0}) == 0);
  CHECK(index_of({1.0, 2.0}, {1.0, 0.0}) == 1);
  CHECK(index_of({1.0, 2.0, INFINITY}, {1.0, 1.0, 1.0}) == 2);
  CHECK(index_of({1.0, 2.0}, {1.0, NAN}) == 1);
  CHECK_THROWS_AS(StepFunction({}, {}), ValidationError);
  CHECK_THROWS_AS(StepFunction({1.0}, {1.0, 2.0}), ValidationError);
}

TEST_CASE("piece kinds and coefficient round trip") {
  const std::vector<Piece> pieces{
      Piece::constant(0.0, 1.0, 2.0),          Piece::log_affine(1.0, 2.0, 1.0, -0.5),
      Piece::power(2.0, 3.0, 0.5, -0.25),      Piece::reciprocal(3.0, 4.0, 7.0),
      Piece::linear_plus_log(4.0, 5.0, 1.0, 2.0, 3.0)};
  const std::vector<PieceKind> kinds{PieceKind::Constant, PieceKind::LogAffine, PieceKind::Power,
                                     PieceKind::Reciprocal, PieceKind::LinearPlusLog};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    CHECK(pieces[i].kind() == kinds[i]);
    CHECK(kind_from_name(kind_name(kinds[i])) == kinds[i]);
    const Piece back = Piece::from_coeffs(pieces[i].lo, pieces[i].hi, kinds[i], pieces[i].coeffs());
    CHECK(back == pieces[i]);
  }
  CHECK(Piece::log_affine(1.0, 2.0, 1.0, -0.5)(std::exp(1.0)) == doctest::Approx(0.5));
  CHECK(Piece::power(2.0, 3.0, 0.5, -0.25)(16.0) == doctest::Approx(0.25));
  CHECK(Piece::linear_plus_log(4.0, 5.0, 1.0, 2.0, 3.0)(1.0) == doctest::Approx(3.0));

  Terms mixed;
  mixed.constant = 1.0;
  mixed.reciprocal = 2.0;
  CHECK(mixed.kind() == PieceKind::Mixed);
  Terms degenerate;
  degenerate.power = 3.0;
  degenerate.exponent = -1.0;
  CHECK(degenerate.normalized().kind() == PieceKind::Reciprocal);
  CHECK_THROWS_AS(kind_from_name("quadratic"), ValidationError);
  CHECK_THROWS_AS(Piece::from_coeffs(0.0, 1.0, PieceKind::Power, std::vector<double>{1.0}),
                  ValidationError);
}

TEST_CASE("piecewise functions check contiguity and tail decay") {
  CHECK_THROWS_AS(PiecewiseFunction({Piece::constant(0.0, 1.0, 1.0), Piece::constant(1.5, 2.0, 1.0)}),
                  ValidationError);
  CHECK_THROWS_AS(PiecewiseFunction({Piece::constant(0.0, kInfinity, 1.0)}), ValidationError);
  CHECK_THROWS_AS(PiecewiseFunction({Piece::power(1.0, kInfinity, 1.0, 0.5)}), ValidationError);
  CHECK_NOTHROW(PiecewiseFunction({Piece::reciprocal(1.0, kInfinity, 1.0)}));

  const PiecewiseFunction f({Piece::constant(0.0, 1.0, 2.0), Piece::reciprocal(1.0, kInfinity, 2.0)});
  CHECK(f(0.5) == 2.0);
  CHECK(f(4.0) == doctest::Approx(0.5));
  const PiecewiseFunction g({Piece::constant(0.0, 2.0, 1.0)});
  const PiecewiseFunction sum = f + g;
  CHECK(sum(0.5) == doctest::Approx(3.0));
  CHECK(sum(1.5) == doctest::Approx(1.0 / 0.75 + 1.0));
  CHECK(sum(3.0) == doctest::Approx(2.0 / 3.0));
  CHECK((f - f)(0.5) == 0.0);

  const PiecewiseFunction step = to_piecewise(StepFunction({1.0, 3.0}, {2.0, 1.0}));
  CHECK(step.size() == 2);
  CHECK(step(2.0) == 1.0);
  CHECK(step(5.0) == 0.0);
}

TEST_CASE("named families") {
  const PiecewiseFunction g = family(Family::GQ, 2.0);
  CHECK(g(0.5) == 0.0);
  CHECK(g(4.0) == doctest::Approx(0.25));  // (1/2) 4^{-1/2}
  const PiecewiseFunction f = family(Family::FQ, 2.0);
  CHECK(f(0.5) == 1.0);
  CHECK(f(4.0) == doctest::Approx(0.5));
  const PiecewiseFunction d = family(Family::FQMinusGQ, 2.0);
  CHECK(d(4.0) == doctest::Approx(0.25));
  const PiecewiseFunction k = family(Family::KEps, 0.5);
  CHECK(k(0.25) == 0.0);
  CHECK(k(0.75) == doctest::Approx(1.5));
  CHECK(family(Family::Chi01)(0.3) == 1.0);
  CHECK(family_from_name("f_q_minus_g_q") == Family::FQMinusGQ);
  CHECK_THROWS_AS(family(Family::GQ, 1.0), ValidationError);
  CHECK_THROWS_AS(family(Family::KEps, 1.0), ValidationError);
  CHECK_THROWS_AS(family_from_name("h_q"), ValidationError);

  std::vector<double> xs;
  for (int i = 1; i <= 200; ++i) xs.push_back(0.05 * i);
  CHECK(is_nonincreasing_on(f, xs));
  CHECK(is_nonincreasing_on(d, xs));
  CHECK_FALSE(is_nonincreasing_on(g, xs));
}

TEST_CASE("random cone samples are valid and reproducible") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const StepFunction f = random_cone_sample(derive_seed(11, i), 8);
    CHECK(f.is_cone());
    CHECK(f.size() >= 1);
    CHECK(f.size() <= 8);
    CHECK(f == random_cone_sample(derive_seed(11, i), 8));
  }
  CHECK_FALSE(random_cone_sample(derive_seed(11, 0), 8) == random_cone_sample(derive_seed(12, 0), 8));
  CHECK(derive_seed(5, 0) != derive_seed(5, 1));
  CHECK(unit_uniform(0) == 0.0);
  CHECK(unit_uniform(~std::uint64_t{0}) < 1.0);
}
