#include <binwaring/binwaring.hpp>

#include <catch_amalgamated.hpp>

#include "support.hpp"

#include <random>

using namespace binwaring;
using namespace binwaring::quadsig;
using polyform::parse_form;

namespace {

Matrix invertible(std::mt19937_64& rng, std::size_t n) {
  Matrix c;
  do c = testsupport::random_matrix(rng, n);
  while (determinant(c) == 0);
  return c;
}

// rank A = number of positive eigenvalues of A^T A.
unsigned rank_oracle(const Matrix& a) { return testsupport::descartes_inertia(SymMatrix(a.transposed() * a)).pos; }

}  // namespace

TEST_CASE("catalecticant and Hankel layout", "[matrix]") {
  BinaryForm p = parse_form("8*x^4 + 48*x^2*y^2 - 8*y^4");
  CHECK(catalecticant(p).matrix() == Matrix({{8, 0, 8}, {0, 8, 0}, {8, 0, -8}}));
  HankelMatrix h = hankel(p, 1);
  CHECK(h.rows() == 4);
  CHECK(h.cols() == 2);
  CHECK(h.matrix()(3, 1) == -8);
  CHECK_THROWS_AS(hankel(p, 6), RankOutOfRange);
  CHECK_THROWS_AS(catalecticant(parse_form("x^3")), OddDegree);
  CHECK(catalecticant_value(p, {0, 0, 1}) == -8);
  CHECK(catalecticant_value(p, {1, 0, 1}) == 16);
  CHECK(catalecticant_value(p, {1, 0, -1}) == -16);
  CHECK_THROWS_AS(catalecticant_value(p, {1, 0}), DimensionMismatch);
}

TEST_CASE("catalecticant quadratic form is the apolar pairing with a square", "[matrix]") {
  // t^T H t = [p, g^2] for g = t_0 x^s + ... and p in binomial form.
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const unsigned s = 1 + rng() % 3, d = 2 * s;
    BinaryForm p = testsupport::random_form(rng, d);
    std::vector<Rational> t(s + 1);
    for (auto& q : t) q = testsupport::random_rational(rng);
    // g^2 with g = sum_i C(s,i) t_i x^(s-i) y^i has binomial coefficients
    // sum_{i+j=k} C(s,i) C(s,j) t_i t_j / C(d,k).
    std::vector<Rational> b(d + 1);
    for (unsigned a = 0; a <= s; ++a)
      for (unsigned c = 0; c <= s; ++c) b[a + c] += Rational(binomial(s, a) * binomial(s, c)) * t[a] * t[c];
    for (unsigned k = 0; k <= d; ++k) b[k] /= Rational(binomial(d, k));
    std::vector<Rational> u(s + 1);
    for (unsigned a = 0; a <= s; ++a) u[a] = Rational(binomial(s, a)) * t[a];
    CHECK(catalecticant_value(p, u) == inner_product(p, BinaryForm(d, b)));
  }
}

TEST_CASE("determinant matches the characteristic polynomial", "[matrix]") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 1 + rng() % 5;
    Matrix m = testsupport::random_matrix(rng, n);
    auto f = testsupport::charpoly(m);
    Rational c0 = f.coeff(0);
    CHECK((n % 2 == 0 ? c0 : Rational(-c0)) == determinant(m));
  }
}

TEST_CASE("inertia agrees with Descartes on the characteristic polynomial", "[inertia]") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 150; ++i) {
    SymMatrix s = testsupport::random_symmetric(rng, 1 + rng() % 5);
    Inertia in = inertia(s);
    CHECK(in == testsupport::descartes_inertia(s));
    CHECK(in == inertia(s.congruent(invertible(rng, s.n()))));
  }
}

TEST_CASE("inertia on zero diagonals", "[inertia]") {
  CHECK(inertia(SymMatrix(Matrix({{0, 1}, {1, 0}}))) == Inertia{1, 1, 0});
  CHECK(inertia(SymMatrix(Matrix({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}))) == Inertia{1, 1, 1});
  CHECK(inertia(SymMatrix(Matrix(3, 3))) == Inertia{0, 0, 3});
  CHECK_THROWS_AS(SymMatrix(Matrix({{0, 1}, {2, 0}})), InvalidArgument);
}

TEST_CASE("kernel bases are exact, independent and primitive", "[kernel]") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 80; ++i) {
    const unsigned d = 2 + rng() % 7, r = 1 + rng() % d;
    BinaryForm p = testsupport::random_form(rng, d);
    // Low-rank forms: a few powers of linear forms.
    if (i % 2) p = polyform::expand_exact(polyform::PowerSumRep::from_rational(d, testsupport::random_triples(rng, 1 + rng() % 3)));
    Matrix h = hankel(p, r).matrix();
    auto basis = kernel_basis(h);
    CHECK(basis.size() == h.cols() - rank_oracle(h));
    for (const auto& v : basis) {
      for (const auto& e : h.apply(v)) CHECK(e == 0);
      Integer g = 0;
      for (const auto& e : v) {
        CHECK(e.get_den() == 1);
        g = binwaring::gcd(g, e.get_num());
      }
      CHECK(g == 1);
    }
    if (!basis.empty()) {
      Matrix b(basis.size(), basis[0].size());
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t j = 0; j < basis[k].size(); ++j) b(k, j) = basis[k][j];
      CHECK(rank_oracle(b) == basis.size());
    }
  }
}

TEST_CASE("width and cone membership", "[width]") {
  for (unsigned s = 1; s <= 4; ++s) {
    std::string text = "(x^2 + y^2)^" + std::to_string(s);
    Width w = width(parse_form(text));
    CHECK(w.rank == s + 1);
    CHECK(w.cone == ConeMembership::InCone);
    CHECK(width(-parse_form(text)).cone == ConeMembership::NegInCone);
  }
  CHECK(width(parse_form("x^6 - y^6")).cone == ConeMembership::Neither);
  CHECK(width(parse_form("x^4")).rank == 1);
}
