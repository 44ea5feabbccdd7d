#include <doctest.h>

#include <random>
#include <vector>

#include "rellandau/errors.hpp"
#include "rellandau/polynomial.hpp"
#include "rellandau/rational.hpp"

using namespace rellandau;

TEST_CASE("parse_rational accepts fractions and exact decimals") {
  CHECK(parse_rational("1/2") == make_rational(1, 2));
  CHECK(parse_rational("-3/4") == make_rational(-3, 4));
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("1e-6") == make_rational(1, 1000000));
  CHECK(parse_rational("+1.5E+2") == 150);
  CHECK(parse_rational(".5") == make_rational(1, 2));
  CHECK(parse_rational("-2.5e-1") == make_rational(-1, 4));
}

TEST_CASE("make_rational normalizes the sign") {
  CHECK(make_rational(3, -4) == make_rational(-3, 4));
  CHECK(make_rational(-2, -6) == make_rational(1, 3));
  CHECK(make_rational(0, -5) == 0);
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1/-2", "1e", "--1", "1/2/3", "e5", "."})
    CHECK_THROWS_AS(parse_rational(bad), ConfigError);
}

TEST_CASE("parse_positive_fraction only takes p/q with positive integers") {
  CHECK(parse_positive_fraction("7/13") == make_rational(7, 13));
  CHECK(parse_positive_fraction("1/1") == 1);
  CHECK(parse_positive_fraction("3") == 3);
  for (const char* bad : {"0.3", "0/1", "-1/2", "1/0", "1/", "/2", "1e3"})
    CHECK_THROWS_AS(parse_positive_fraction(bad), ConfigError);
}

TEST_CASE("rational rendering") {
  CHECK(to_string(make_rational(-83, 32)) == "-83/32");
  CHECK(to_string(make_rational(10, 4)) == "5/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(to_double(make_rational(-3, 32)) == -0.09375);
}

TEST_CASE("polynomial basics") {
  Polynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(Polynomial{Rational(1), Rational(0), Rational(0)}.degree() == 0);

  const Polynomial x = Polynomial::variable();
  const Polynomial p = x * x - Polynomial(3) * x + Polynomial(2);  // (x-1)(x-2)
  CHECK(p.degree() == 2);
  CHECK(p(Rational(1)) == 0);
  CHECK(p(Rational(2)) == 0);
  CHECK(p(3.0) == doctest::Approx(2.0));
  CHECK(p.derivative() == Polynomial{Rational(-3), Rational(2)});
  CHECK((p - p).is_zero());
  CHECK(p.taylor_shift(Rational(1)) == Polynomial{Rational(0), Rational(-1), Rational(1)});
}

namespace {

Polynomial random_polynomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> degree(0, 5);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& v : c) v = make_rational(num(rng), den(rng));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("property: taylor shift and products agree with pointwise evaluation") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_polynomial(rng);
    const Polynomial q = random_polynomial(rng);
    const Rational shift = make_rational(num(rng), den(rng));
    const Rational x = make_rational(num(rng), den(rng));
    CHECK(p.taylor_shift(shift)(x) == p(x + shift));
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK((p + q)(x) == p(x) + q(x));
  }
}
