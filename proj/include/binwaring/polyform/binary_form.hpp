#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/common/rational.hpp>
#include <binwaring/realroots/unipoly.hpp>

#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace binwaring::polyform {

/// A real binary form of degree d with rational coefficients, stored in the
/// binomial-normalized basis:
///
///     p(x, y) = sum_j C(d, j) * a_j * x^(d-j) * y^j
///
/// Every matrix built from a form (catalecticant, Hankel blocks) reads the a_j
/// directly; monomial coefficients are only produced for printing and parsing.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(1, {0, 0}) {}
  BinaryForm(unsigned degree, std::vector<Rational> binomial_coeffs) : d_(degree), a_(std::move(binomial_coeffs)) {
    for (auto& q : a_) q.canonicalize();
    if (d_ == 0) throw InvalidArgument("binary forms must have positive degree");
    if (a_.size() != d_ + 1)
      throw InvalidArgument("a degree-" + std::to_string(d_) + " form needs " + std::to_string(d_ + 1) +
                            " coefficients, got " + std::to_string(a_.size()));
  }

  static BinaryForm zero(unsigned degree) { return BinaryForm(degree, std::vector<Rational>(degree + 1)); }
  /// From monomial coefficients m_j of x^(d-j) y^j.
  static BinaryForm from_monomials(unsigned degree, const std::vector<Rational>& m) {
    if (m.size() != degree + 1) throw InvalidArgument("monomial coefficient count does not match degree");
    std::vector<Rational> a(degree + 1);
    for (unsigned j = 0; j <= degree; ++j) a[j] = m[j] / Rational(binomial(degree, j));
    return BinaryForm(degree, std::move(a));
  }

  unsigned degree() const { return d_; }
  const std::vector<Rational>& coeffs() const { return a_; }
  const Rational& a(unsigned j) const { return a_.at(j); }
  Rational monomial_coeff(unsigned j) const { return a_.at(j) * Rational(binomial(d_, j)); }
  std::vector<Rational> monomial_coeffs() const {
    std::vector<Rational> m(d_ + 1);
    for (unsigned j = 0; j <= d_; ++j) m[j] = monomial_coeff(j);
    return m;
  }

  bool is_zero() const {
    for (const auto& q : a_)
      if (q != 0) return false;
    return true;
  }

  Rational operator()(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (unsigned j = 0; j <= d_; ++j) acc += monomial_coeff(j) * binwaring::pow(x, d_ - j) * binwaring::pow(y, j);
    return acc;
  }

  /// p(t, 1) as a univariate polynomial in t.
  realroots::UniPoly dehomogenized() const {
    std::vector<Rational> c(d_ + 1);
    for (unsigned j = 0; j <= d_; ++j) c[d_ - j] = monomial_coeff(j);
    return realroots::UniPoly(std::move(c));
  }

  BinaryForm operator-() const {
    std::vector<Rational> v(a_);
    for (auto& q : v) q = -q;
    return BinaryForm(d_, std::move(v));
  }
  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    check_same_degree(f, g);
    std::vector<Rational> v(f.a_);
    for (unsigned j = 0; j <= f.d_; ++j) v[j] += g.a_[j];
    return BinaryForm(f.d_, std::move(v));
  }
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + (-g); }
  friend BinaryForm operator*(const Rational& s, const BinaryForm& f) {
    std::vector<Rational> v(f.a_);
    for (auto& q : v) q *= s;
    return BinaryForm(f.d_, std::move(v));
  }
  friend bool operator==(const BinaryForm& f, const BinaryForm& g) { return f.d_ == g.d_ && f.a_ == g.a_; }

  /// Canonical text: monomials by descending power of x, explicit `*` and `^`.
  /// The parser reads this back to the identical form.
  std::string to_text() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned j = 0; j <= d_; ++j) {
      Rational c = monomial_coeff(j);
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      std::vector<std::string> factors;
      if (mag != 1) factors.push_back(to_text(mag));
      if (d_ - j == 1) factors.emplace_back("x");
      if (d_ - j > 1) factors.push_back("x^" + std::to_string(d_ - j));
      if (j == 1) factors.emplace_back("y");
      if (j > 1) factors.push_back("y^" + std::to_string(j));
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    if (first) os << "0";
    return os.str();
  }

  static void check_same_degree(const BinaryForm& f, const BinaryForm& g) {
    if (f.d_ != g.d_)
      throw DegreeMismatch("degrees differ: " + std::to_string(f.d_) + " vs " + std::to_string(g.d_));
  }

 private:
  static std::string to_text(const Rational& q) { return binwaring::to_text(q); }
  unsigned d_;
  std::vector<Rational> a_;
};

/// Apolar inner product [f, g] = sum_i C(d, i) a_i b_i.
inline Rational inner_product(const BinaryForm& f, const BinaryForm& g) {
  BinaryForm::check_same_degree(f, g);
  Rational acc = 0;
  for (unsigned i = 0; i <= f.degree(); ++i) acc += Rational(binomial(f.degree(), i)) * f.a(i) * g.a(i);
  return acc;
}

/// 2x2 rational matrix [[m00, m01], [m10, m11]].
using Matrix2 = std::array<std::array<Rational, 2>, 2>;

inline Matrix2 multiply(const Matrix2& m, const Matrix2& n) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = m[i][0] * n[0][j] + m[i][1] * n[1][j];
  return r;
}

/// q(x, y) = p(m00 x + m01 y, m10 x + m11 y).
inline BinaryForm substitute(const BinaryForm& p, const Matrix2& m) {
  if (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0) throw SingularSubstitution("substitution matrix is singular");
  using realroots::UniPoly;
  const unsigned d = p.degree();
  // Work with t = y / x: x^d * (m00 + m01 t)^(d-j) (m10 + m11 t)^j.
  const UniPoly u{m[0][0], m[0][1]}, v{m[1][0], m[1][1]};
  std::vector<UniPoly> upow(d + 1), vpow(d + 1);
  upow[0] = vpow[0] = UniPoly::constant(1);
  for (unsigned k = 1; k <= d; ++k) {
    upow[k] = upow[k - 1] * u;
    vpow[k] = vpow[k - 1] * v;
  }
  std::vector<Rational> mono(d + 1);
  for (unsigned j = 0; j <= d; ++j) {
    Rational c = p.monomial_coeff(j);
    if (c == 0) continue;
    UniPoly term = upow[d - j] * vpow[j];
    for (unsigned k = 0; k <= d; ++k) mono[k] += c * term.coeff(k);
  }
  return BinaryForm::from_monomials(d, mono);
}

/// p(x, -y).
inline BinaryForm mirror(const BinaryForm& p) {
  std::vector<Rational> a(p.coeffs());
  for (unsigned j = 1; j < a.size(); j += 2) a[j] = -a[j];
  return BinaryForm(p.degree(), std::move(a));
}

}  // namespace binwaring::polyform
