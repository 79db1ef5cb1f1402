#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/common/rational.hpp>
#include <binwaring/realroots/unipoly.hpp>

#include <algorithm>
#include <initializer_list>

namespace binwaring::realroots {

/// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo = 0, hi = 0;

  Interval() = default;
  Interval(Rational point) : lo(point), hi(point) {}  // NOLINT(implicit)
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool is_point() const { return lo == hi; }
  /// +1 / -1 when the whole interval has that sign, 0 otherwise.
  int certain_sign() const {
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == 0 && hi == 0) return 0;
    return 2;  // undecided
  }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw PrecisionExhausted("interval division by an interval containing zero");
    return a * Interval(1 / b.hi, 1 / b.lo);
  }
};

inline Interval pow(const Interval& x, unsigned e) {
  if (e % 2 == 0 && x.contains_zero()) {
    Rational m = std::max(binwaring::pow(x.lo, e), binwaring::pow(x.hi, e));
    return {Rational(0), m};
  }
  Rational a = binwaring::pow(x.lo, e), b = binwaring::pow(x.hi, e);
  return a <= b ? Interval(a, b) : Interval(b, a);
}

/// Horner evaluation of f over an interval.
inline Interval eval(const UniPoly& f, const Interval& x) {
  Interval acc(Rational(0));
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

}  // namespace binwaring::realroots
