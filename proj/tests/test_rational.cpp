#include <binwaring/common/rational.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace binwaring;

TEST_CASE("wire and text formats", "[rational]") {
  CHECK(to_wire(Rational(3)) == "3/1");
  CHECK(to_wire(make_rational(-6, 4)) == "-3/2");
  CHECK(to_text(Rational(5)) == "5");
  CHECK(to_text(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("parse_rational round trips and rejects junk", "[rational]") {
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+7/2") == Rational(7, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK_THROWS(parse_rational("1.5"));
  CHECK_THROWS(parse_rational(""));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    CHECK(parse_rational(to_wire(q)) == q);
    CHECK(parse_rational(to_text(q)) == q);
  }
}

TEST_CASE("binomials match Pascal's rule", "[rational]") {
  for (unsigned n = 1; n < 30; ++n)
    for (unsigned k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 0) == 1);
}

TEST_CASE("floor and pow", "[rational]") {
  CHECK(binwaring::floor(Rational(7, 2)) == 3);
  CHECK(binwaring::floor(Rational(-7, 2)) == -4);
  CHECK(binwaring::floor(Rational(-4)) == -4);
  CHECK(binwaring::pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(binwaring::pow(Rational(5), 0) == 1);
}

TEST_CASE("simplest_between picks the least denominator", "[rational]") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_between(Rational(-5, 2), Rational(3)) == 0);
  CHECK(simplest_between(Rational(31, 100), Rational(32, 100)) == Rational(5, 16));
  CHECK(simplest_between(Rational(-32, 100), Rational(-31, 100)) == Rational(-5, 16));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
  for (int i = 0; i < 300; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a > b) std::swap(a, b);
    Rational s = simplest_between(a, b);
    REQUIRE(s >= a);
    REQUIRE(s <= b);
    // No smaller denominator fits.
    for (long q = 1; q < s.get_den().get_si(); ++q) {
      Rational lo = a * q;
      Integer c = binwaring::floor(lo);
      if (Rational(c) < lo) c += 1;
      CHECK(Rational(c, q) > b);
    }
  }
}
