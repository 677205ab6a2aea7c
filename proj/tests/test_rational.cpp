// Copyright 2026 The crosscut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rational.hpp"

#include <cstdint>

#include "doctest.h"

using crosscut::Rational;

TEST_CASE("construction keeps lowest terms and positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 6) + Rational(1, 10) == Rational(4, 15));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(-2, 9) == Rational(-27, 8));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK(-Rational(5, 3) == Rational(-5, 3));
}

TEST_CASE("ordering compares by value") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 6) >= Rational(1, 3));
  CHECK(crosscut::max(Rational(-3), Rational(0)) == Rational(0));
  CHECK(crosscut::max(Rational(5, 2), Rational(2)) == Rational(5, 2));
}

TEST_CASE("parsing and printing round-trip") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("2/6") == Rational(1, 3));
  CHECK(Rational::parse("-2/6").str() == "-1/3");
  CHECK(Rational(12).str() == "12");
  CHECK(Rational(1, 3).str() == "1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("overflow is detected, never wrapped") {
  Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), crosscut::ArithmeticOverflow);
  CHECK_THROWS_AS(big * Rational(2), crosscut::ArithmeticOverflow);
  // Wide intermediates that cancel back into range are fine.
  Rational a(INT64_MAX / 2, 3);
  CHECK(a - a == Rational(0));
}
