// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/rational.hpp"

#include <doctest.h>

#include <sstream>

using isocartan::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(Rational(-3, 5).abs() == Rational(3, 5));

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), isocartan::Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), isocartan::Error);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("x"), isocartan::ParseError);

  std::ostringstream os;
  os << Rational(-1, 2) << " " << Rational(4);
  CHECK(os.str() == "-1/2 4");
}

TEST_CASE("exact grouping keys do not drift") {
  // 1/3 summed three times is exactly 1; the double route is not.
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  Rational q(7, 12);
  CHECK(q * q == Rational(49, 144));
}
