#pragma once

#include <binwaring/binwaring.hpp>

#include <random>
#include <vector>

namespace testsupport {

using binwaring::Integer;
using binwaring::Rational;
using binwaring::polyform::BinaryForm;
using binwaring::quadsig::Matrix;
using binwaring::quadsig::SymMatrix;
using binwaring::realroots::UniPoly;

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero(std::mt19937_64& rng, int num_bound = 9, int den_bound = 4) {
  Rational q;
  do q = random_rational(rng, num_bound, den_bound);
  while (q == 0);
  return q;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
  return m;
}

// Symmetric with a random rank: a sum of k signed rank-one terms.
inline SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> rk(0, n);
  const std::size_t k = rk(rng);
  Matrix m(n, n);
  if (k == n && rng() % 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng);
    return SymMatrix(m);
  }
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = random_rational(rng);
    Rational s = (rng() % 2) ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) += s * v[i] * v[j];
  }
  return SymMatrix(m);
}

// det(t I - M) by interpolation through n + 1 exact determinants.
inline UniPoly charpoly(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix a = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? Rational(k) : Rational(0)) - m(i, j);
    xs.push_back(Rational(k));
    ys.push_back(binwaring::quadsig::determinant(a));
  }
  return binwaring::realroots::interpolate(xs, ys);
}

inline unsigned sign_variations(const std::vector<Rational>& c) {
  unsigned v = 0;
  int last = 0;
  for (const auto& q : c) {
    int s = binwaring::sign(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// All eigenvalues of a symmetric matrix are real, so Descartes' rule is exact.
inline binwaring::quadsig::Inertia descartes_inertia(const SymMatrix& s) {
  UniPoly f = charpoly(s.matrix());
  std::vector<Rational> c = f.coeffs(), neg = f.coeffs();
  for (std::size_t k = 1; k < neg.size(); k += 2) neg[k] = -neg[k];
  unsigned zero = 0;
  while (zero < c.size() && c[zero] == 0) ++zero;
  return {sign_variations(c), sign_variations(neg), zero};
}

// (alpha x + beta y)^d in monomial coefficients, straight from the binomial theorem.
inline std::vector<Rational> power_monomials(const Rational& alpha, const Rational& beta, unsigned d) {
  std::vector<Rational> m(d + 1);
  for (unsigned j = 0; j <= d; ++j)
    m[j] = Rational(binwaring::binomial(d, j)) * binwaring::pow(alpha, d - j) * binwaring::pow(beta, j);
  return m;
}

inline BinaryForm random_form(std::mt19937_64& rng, unsigned d) {
  std::vector<Rational> a(d + 1);
  do
    for (auto& q : a) q = random_rational(rng);
  while (BinaryForm(d, a).is_zero());
  return BinaryForm(d, a);
}

// Distinct rational slopes with matching random nonzero coefficients.
inline std::vector<std::array<Rational, 3>> random_triples(std::mt19937_64& rng, unsigned terms, bool allow_y = true) {
  std::vector<std::array<Rational, 3>> out;
  std::vector<Rational> slopes;
  bool used_y = false;
  while (out.size() < terms) {
    if (allow_y && !used_y && rng() % 6 == 0) {
      used_y = true;
      out.push_back({random_nonzero(rng), Rational(0), random_nonzero(rng, 3, 1)});
      continue;
    }
    Rational s = random_rational(rng, 7, 3);
    if (std::find(slopes.begin(), slopes.end(), s) != slopes.end()) continue;
    slopes.push_back(s);
    Rational alpha = random_nonzero(rng, 3, 2);
    out.push_back({random_nonzero(rng), alpha, alpha * s});
  }
  return out;
}

}  // namespace testsupport
