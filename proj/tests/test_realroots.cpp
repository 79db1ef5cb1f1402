#include <binwaring/binwaring.hpp>

#include <catch_amalgamated.hpp>

#include "support.hpp"

#include <algorithm>
#include <random>

using namespace binwaring;
using namespace binwaring::realroots;

namespace {

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly f = UniPoly::constant(1);
  for (const auto& r : roots) f = f * UniPoly::linear_root(r);
  return f;
}

}  // namespace

TEST_CASE("polynomial division and gcd", "[unipoly]") {
  UniPoly f{-1, 0, 1};  // t^2 - 1
  UniPoly g{1, 1};
  auto [q, r] = f.divmod(g);
  CHECK(q == UniPoly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(from_roots({1, 2, 3}), from_roots({2, 3, 5})).monic() == from_roots({2, 3}));
  CHECK(UniPoly().degree() == -1);
  CHECK(compose(UniPoly{0, 0, 1}, UniPoly{1, 1}) == UniPoly({1, 2, 1}));
}

TEST_CASE("interpolation reproduces random polynomials", "[unipoly]") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Rational> c(1 + rng() % 7);
    for (auto& q : c) q = testsupport::random_rational(rng);
    UniPoly f(c);
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= std::max(f.degree(), 0); ++k) {
      xs.push_back(Rational(k - 2, 3));
      ys.push_back(f(xs.back()));
    }
    CHECK(interpolate(xs, ys) == f);
  }
}

TEST_CASE("Sturm counts agree with planted roots", "[sturm]") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Rational> roots;
    unsigned n = 1 + rng() % 6;
    while (roots.size() < n) {
      Rational r = testsupport::random_rational(rng, 12, 5);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    UniPoly f = from_roots(roots);
    // Complex pair t^2 + 1 adds no real roots.
    if (iter % 2) f = f * UniPoly{1, 0, 1};
    CHECK(count_real_roots(f) == static_cast<int>(n));
    Rational lo = *std::min_element(roots.begin(), roots.end());
    CHECK(count_real_roots(f, RootRange::closed(lo, lo)) == 1);
    auto iso = isolate_roots(f);
    REQUIRE(iso.size() == n);
    std::sort(roots.begin(), roots.end());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(iso[i].is_rational());
      CHECK(iso[i].with_rational_detection().rational_value() == roots[i]);
    }
  }
}

TEST_CASE("squarefree decomposition by multiplicity", "[sturm]") {
  UniPoly f = from_roots({1, 2, 2, 3, 3, 3});
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].monic() == from_roots({1}));
  CHECK(parts[1].monic() == from_roots({2}));
  CHECK(parts[2].monic() == from_roots({3}));
  CHECK_FALSE(is_squarefree(f));
  CHECK(is_squarefree(squarefree_part(f)));
  CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), ZeroPolynomial);
}

TEST_CASE("algebraic numbers compare exactly", "[algebraic]") {
  UniPoly t2m2{-2, 0, 1};
  auto roots = isolate_roots(t2m2);
  REQUIRE(roots.size() == 2);
  RealAlgebraic s2 = roots[1];
  CHECK_FALSE(s2.is_rational());
  CHECK(compare(s2, Rational(141, 100)) > 0);
  CHECK(compare(s2, Rational(142, 100)) < 0);
  CHECK(roots[0] < s2);
  CHECK(compare(s2.refined(), s2) == 0);
  CHECK(sign_at(t2m2, s2) == 0);
  CHECK(sign_at(UniPoly{-3, 0, 1}, s2) < 0);
  RealAlgebraic other = RealAlgebraic::from_isolating(UniPoly{0, -2, 0, 1}, 1, 2);  // t^3 - 2t, root sqrt2
  CHECK(other == s2);
  auto r = s2.refined_to(Rational(1, 1000000), 200);
  CHECK(r.hi() - r.lo() <= Rational(1, 1000000));
  CHECK(r.approx() == Catch::Approx(1.41421356237).margin(1e-6));
}

TEST_CASE("exact reals at algebraic points", "[exact-real]") {
  RealAlgebraic s3 = RealAlgebraic::from_isolating(UniPoly{-3, 0, 1}, 1, 2);
  // (t^2 + 1) / t at sqrt3 is 4/sqrt3.
  ExactReal x = ExactReal::at(s3, UniPoly{1, 0, 1}, UniPoly{0, 1});
  CHECK(x.sign() == 1);
  CHECK((-x).sign() == -1);
  auto e = x.enclosure(Rational(1, Integer(1) << 100), 1000);
  CHECK(e.width() <= Rational(1, Integer(1) << 100));
  CHECK(e.lo * e.lo <= Rational(16, 3));
  CHECK(e.hi * e.hi >= Rational(16, 3));
  // t^2 - 3 vanishes there: sign decided exactly.
  ExactReal z = ExactReal::at(s3, UniPoly{-3, 0, 1}, UniPoly::constant(1));
  CHECK(z.sign() == 0);
  CHECK(ExactReal(Rational(-2, 7)).rational_value() == Rational(-2, 7));
}

TEST_CASE("interval arithmetic encloses", "[interval]") {
  Interval a{Rational(-1), Rational(2)}, b{Rational(3), Rational(4)};
  CHECK((a * b).contains(Rational(-4)));
  CHECK((a * b).contains(Rational(8)));
  CHECK(a.contains_zero());
  CHECK_THROWS_AS(b / a, PrecisionExhausted);
  CHECK(pow(a, 2).lo == 0);
}

TEST_CASE("real linear factor counts", "[factor-count]") {
  using polyform::parse_form;
  CHECK(real_linear_factor_count(parse_form("x^2*y^2")) == 4);
  CHECK(real_linear_factor_count(parse_form("6*x^5*y + 6*x*y^5")) == 2);
  CHECK(real_linear_factor_count(parse_form("(x^2 + y^2)^2")) == 0);
  CHECK(real_linear_factor_count(parse_form("y^3*(x - y)")) == 4);
  CHECK(splits(parse_form("(x - y)^2*(x + 2*y)")));
  CHECK(is_power_of_linear(parse_form("(2*x - 3*y)^4")));
  CHECK(is_power_of_linear(parse_form("-5*y^6")));
  CHECK_FALSE(is_power_of_linear(parse_form("x^2*y^2")));
  CHECK_THROWS_AS(real_linear_factor_count(polyform::BinaryForm::zero(4)), ZeroForm);
}
