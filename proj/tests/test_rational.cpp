#include <doctest.h>

#include "isotool/rational.hpp"

using iso::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("normalization and arithmetic") {
  CHECK(Rational::of(6, 4) == Rational::of(3, 2));
  CHECK(Rational::of(0, 7) == Rational::zero());
  CHECK(Rational::of(1, 3) + Rational::of(1, 6) == Rational::of(1, 2));
  CHECK(Rational::of(3, 4) - Rational::of(1, 4) == Rational::of(1, 2));
  CHECK(Rational::of(2, 3) * Rational::of(3, 4) == Rational::of(1, 2));
  CHECK(Rational::of(1, 3).scaled(6) == Rational::of(2, 1));
  CHECK(Rational::of(1, 3) < Rational::of(1, 2));
  CHECK(Rational::of(7, 2) > Rational::of(10, 3));
  CHECK_THROWS(Rational::of(1, 0));
}

TEST_CASE("empty-set conventions") {
  CHECK(iso::accuracy(0, 0) == Rational::zero());
  CHECK(iso::accuracy(3, 4) == Rational::of(3, 4));
  CHECK(iso::percentage(0, 0) == Rational::zero());
  CHECK(iso::percentage(79, 188) == Rational::of(7900, 188));
}

TEST_CASE("round half up at two decimals") {
  CHECK(iso::round_half_up(iso::percentage(79, 188), 2) ==
        doctest::Approx(42.02).epsilon(1e-12));
  CHECK(iso::round_half_up(Rational::of(1, 8), 2) == doctest::Approx(0.13));
  CHECK(iso::round_half_up(Rational::of(25, 1), 2) == doctest::Approx(25.0));
  // exact .005 goes up
  CHECK(iso::round_half_up(Rational::of(4202'5, 100000).scaled(100), 2) ==
        doctest::Approx(42.03));
  CHECK(iso::format_fixed(iso::percentage(79, 188), 2) == "42.02");
  CHECK(iso::format_fixed(Rational::zero(), 2) == "0.00");
  CHECK(iso::format_fixed(Rational::of(1, 1), 3) == "1.000");
  CHECK(iso::format_fixed(Rational::of(1999, 1000), 2) == "2.00");
}

TEST_SUITE_END();
