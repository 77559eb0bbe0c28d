#include <doctest.h>

#include "folcan/error.hpp"
#include "folcan/rational.hpp"
#include "support/random.hpp"

using folcan::Error;
using folcan::ErrorCode;
using folcan::Rational;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(0, -5).str() == "0");
  CHECK(Rational(-4, -8).denominator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(-2, 3) * Rational(9, 4) == Rational(-3, 2));
  CHECK(Rational(1, 4) / Rational(-1, 2) == Rational(-1, 2));
  CHECK(Rational(-1, 4) < Rational(-1, 5));
  CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("canonical text form") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("0") == Rational(0));

  for (const char* bad : {"", "-", "+1", "-0", "1/0", "1/-2", "-1/-2", "2/4", "3/1", "01", "1/02", "1.5",
                          " 1", "1 ", "1/", "/2", "a/b", "--1", "1//2"}) {
    CAPTURE(bad);
    try {
      (void)Rational::parse(bad);
      FAIL("accepted non-canonical text");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}

TEST_CASE("text form round-trips on random values") {
  folcan::testing::Generator gen(17);
  for (int i = 0; i < 1000; ++i) {
    const Rational r(mpz_class(gen.integer(-1'000'000'000, 1'000'000'000)) * gen.integer(1, 1000),
                     mpz_class(gen.integer(1, 1'000'000)));
    const std::string text = r.str();
    const Rational back = Rational::parse(text);
    REQUIRE(back == r);
    REQUIRE(back.str() == text);
  }
}

TEST_CASE("integer extraction") {
  CHECK(Rational(12, 4).to_integer() == 3);
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), Error);
}
