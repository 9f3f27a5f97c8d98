#include <doctest.h>

#include <cmath>

#include "cyberquote/error.hpp"
#include "cyberquote/money.hpp"

using cyberquote::Money;

TEST_SUITE("money") {
  TEST_CASE("half-even rounding onto cents") {
    CHECK(Money::from_units(0.125).cents() == 12);
    CHECK(Money::from_units(0.375).cents() == 38);
    CHECK(Money::from_units(-0.125).cents() == -12);
    CHECK(Money::from_units(66666.666666).cents() == 6666667);
    CHECK(Money::from_units(1038.0622837).cents() == 103806);
  }

  TEST_CASE("non-finite amounts are rejected") {
    CHECK_THROWS_AS(Money::from_units(1.0 / 0.0), cyberquote::NumericalError);
    CHECK_THROWS_AS(Money::from_units(std::nan("")), cyberquote::NumericalError);
  }

  TEST_CASE("parse") {
    CHECK(Money::parse("1234").cents() == 123400);
    CHECK(Money::parse("1234.5").cents() == 123450);
    CHECK(Money::parse("-0.07").cents() == -7);
    CHECK(Money::parse(".5").cents() == 50);
    CHECK_THROWS_AS(Money::parse("1.234"), cyberquote::FormatError);
    CHECK_THROWS_AS(Money::parse("abc"), cyberquote::FormatError);
    CHECK_THROWS_AS(Money::parse("--5"), cyberquote::FormatError);
    CHECK_THROWS_AS(Money::parse(""), cyberquote::FormatError);
    CHECK_THROWS_AS(Money::parse("1.x"), cyberquote::FormatError);
  }

  TEST_CASE("formatting") {
    CHECK(Money::from_cents(482278).to_string() == "4822.78");
    CHECK(Money::from_cents(-7).to_string() == "-0.07");
    CHECK(Money::from_cents(0).to_string() == "0.00");
    CHECK(Money::from_cents(1050).to_string() == "10.50");
  }

  TEST_CASE("sums are exact in cents") {
    Money total;
    for (int i = 0; i < 1000; ++i) total += Money::from_cents(1);
    CHECK(total.cents() == 1000);
    CHECK(Money::from_cents(222222) + Money::from_cents(156250) + Money::from_cents(103806) ==
          Money::from_cents(482278));
    CHECK(Money::from_cents(5) < Money::from_cents(6));
  }
}
