#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/common/rational.hpp>

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace binwaring::realroots {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The stored vector never has a trailing zero; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const Rational& v) { return UniPoly({v}); }
  static UniPoly monomial(const Rational& v, std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = v;
    return UniPoly(std::move(c));
  }
  /// The polynomial t - root.
  static UniPoly linear_root(const Rational& root) { return UniPoly({-root, 1}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }
  /// Sign as t -> +inf (dir > 0) or t -> -inf (dir < 0).
  int sign_at_infinity(int dir) const {
    if (is_zero()) return 0;
    int s = sgn(leading());
    return (dir < 0 && degree() % 2 == 1) ? -s : s;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
  }

  /// Positive rational multiple with coprime integer coefficients.
  UniPoly primitive() const {
    if (is_zero()) return {};
    Integer l = lcm_of_denominators(c_);
    Integer g = 0;
    for (const auto& q : c_) {
      Integer v = q.get_num() * (l / q.get_den());
      g = binwaring::gcd(g, v);
    }
    Rational scale = Rational(l) / Rational(g);
    if (scale < 0) scale = -scale;
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * scale;
    return UniPoly(std::move(out));
  }
  /// Primitive with positive leading coefficient.
  UniPoly normalized() const {
    UniPoly p = primitive();
    if (!p.is_zero() && p.leading() < 0) p = -p;
    return p;
  }
  UniPoly monic() const {
    if (is_zero()) return {};
    return *this * (1 / leading());
  }

  UniPoly operator-() const {
    std::vector<Rational> v(c_);
    for (auto& q : v) q = -q;
    return UniPoly(std::move(v));
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<Rational> v(a.c_);
    for (auto& q : v) q *= s;
    return UniPoly(std::move(v));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (degree() < d.degree()) return {UniPoly{}, *this};
    std::vector<Rational> r(c_);
    std::vector<Rational> q(c_.size() - d.c_.size() + 1);
    const Rational& lead = d.leading();
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      Rational f = r[k + d.c_.size() - 1] / lead;
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
    }
    r.resize(d.c_.size() - 1);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }
  UniPoly rem(const UniPoly& d) const { return divmod(d).second; }
  UniPoly quo(const UniPoly& d) const { return divmod(d).first; }

  std::string to_string(char var = 't') const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rational& q = c_[k];
      if (q == 0) continue;
      Rational a = q < 0 ? Rational(-q) : q;
      if (first) {
        if (q < 0) os << "-";
      } else {
        os << (q < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = a == 1 && k > 0;
      if (!unit) os << to_text(a);
      if (k > 0) {
        if (!unit) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.rem(b).normalized();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// f(g(t)).
inline UniPoly compose(const UniPoly& f, const UniPoly& g) {
  UniPoly acc;
  for (int k = f.degree(); k >= 0; --k) acc = acc * g + UniPoly::constant(f.coeff(k));
  return acc;
}

/// Exact polynomial through the points (xs[i], ys[i]) (Newton form).
inline UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly acc = UniPoly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) acc = acc * UniPoly::linear_root(xs[k]) + UniPoly::constant(dd[k]);
  return acc;
}

}  // namespace binwaring::realroots
