#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/realroots/interval.hpp>
#include <binwaring/realroots/real_algebraic.hpp>

#include <string>
#include <variant>

namespace binwaring::realroots {

/// An exact real number of the shape num(theta) / den(theta), where theta is a
/// real algebraic number and den(theta) != 0. Rationals are stored directly.
///
/// This is how coefficients attached to irrational roots are carried: their
/// sign is decided exactly, and enclosures of any width are available.
class ExactReal {
 public:
  ExactReal() : v_(Rational(0)) {}
  ExactReal(const Rational& q) : v_(q) {}  // NOLINT(implicit)
  ExactReal(const RealAlgebraic& a) {      // NOLINT(implicit)
    if (a.is_rational())
      v_ = a.lo();
    else
      v_ = Expr{a, UniPoly{0, 1}, UniPoly{1}};
  }
  /// num(theta) / den(theta); collapses to a rational when theta is rational.
  static ExactReal at(const RealAlgebraic& theta, UniPoly num, UniPoly den) {
    if (theta.is_rational()) return ExactReal(num(theta.lo()) / den(theta.lo()));
    if (den.is_zero() || sign_at(den, theta) == 0) throw InvalidArgument("denominator vanishes at the algebraic point");
    ExactReal r;
    if (num.degree() <= 0 && den.degree() <= 0) {
      r.v_ = num.coeff(0) / den.coeff(0);
      return r;
    }
    r.v_ = Expr{theta, std::move(num), std::move(den)};
    return r;
  }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational_value() const {
    if (!is_rational()) throw NotRational("value is not a known rational");
    return std::get<Rational>(v_);
  }

  int sign() const {
    if (is_rational()) return sgn(std::get<Rational>(v_));
    const Expr& e = std::get<Expr>(v_);
    return sign_at(e.num, e.theta) * sign_at(e.den, e.theta);
  }

  /// Enclosure evaluated at the current resolution of theta.
  Interval enclosure() const {
    if (is_rational()) return Interval(std::get<Rational>(v_));
    const Expr& e = std::get<Expr>(v_);
    return eval(e.num, e.theta.interval()) / eval(e.den, e.theta.interval());
  }

  /// Enclosure of width <= tol using at most `max_steps` bisections of theta.
  Interval enclosure(const Rational& tol, int max_steps) const {
    if (is_rational()) return enclosure();
    ExactReal cur = *this;
    for (int step = 0;; ++step) {
      Expr& e = std::get<Expr>(cur.v_);
      Interval den = eval(e.den, e.theta.interval());
      if (!den.contains_zero()) {
        Interval iv = eval(e.num, e.theta.interval()) / den;
        if (iv.width() <= tol) return iv;
      }
      if (step >= max_steps) throw PrecisionExhausted("enclosure tolerance not reached within the bisection budget");
      if (e.theta.is_rational()) return cur.enclosure();
      e.theta = e.theta.refined();
      if (e.theta.is_rational()) return Interval(e.num(e.theta.lo()) / e.den(e.theta.lo()));
    }
  }

  /// One bisection of the underlying algebraic point.
  ExactReal refined() const {
    if (is_rational()) return *this;
    Expr e = std::get<Expr>(v_);
    return at(e.theta.refined(), e.num, e.den);
  }

  ExactReal operator-() const {
    if (is_rational()) return ExactReal(Rational(-std::get<Rational>(v_)));
    Expr e = std::get<Expr>(v_);
    e.num = -e.num;
    ExactReal r;
    r.v_ = std::move(e);
    return r;
  }

  double approx() const {
    if (is_rational()) return std::get<Rational>(v_).get_d();
    Interval iv = enclosure(Rational(1, 1000000000), 256);
    return Rational((iv.lo + iv.hi) / 2).get_d();
  }

  std::string to_string() const {
    if (is_rational()) return to_text(std::get<Rational>(v_));
    const Expr& e = std::get<Expr>(v_);
    return "(" + e.num.to_string('z') + ") / (" + e.den.to_string('z') + ") at z = " + e.theta.to_string();
  }

 private:
  struct Expr {
    RealAlgebraic theta;
    UniPoly num, den;
  };
  std::variant<Rational, Expr> v_;
};

}  // namespace binwaring::realroots
