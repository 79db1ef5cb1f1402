#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/realroots/interval.hpp>
#include <binwaring/realroots/sturm.hpp>
#include <binwaring/realroots/unipoly.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace binwaring::realroots {

/// A real algebraic number: the unique root of a squarefree integer polynomial
/// inside a rational isolating interval.
///
/// Two shapes are allowed:
///  - lo < hi: the defining polynomial has exactly one root in (lo, hi), and
///    neither endpoint is a root (so the polynomial changes sign across it);
///  - lo == hi: the number is the rational lo, and the defining polynomial is
///    the primitive linear polynomial vanishing there.
///
/// Values are immutable; refinement returns a new value.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  RealAlgebraic(const Rational& q)  // NOLINT(implicit): rationals embed exactly
      : poly_(UniPoly::linear_root(q).normalized()), lo_(q), hi_(q) {}

  /// Trusted constructor; `poly` squarefree with one root in (lo, hi).
  static RealAlgebraic from_isolating(UniPoly poly, Rational lo, Rational hi) {
    RealAlgebraic r;
    r.poly_ = poly.normalized();
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
  }

  const UniPoly& defining() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }
  bool is_rational() const { return lo_ == hi_; }
  const Rational& rational_value() const {
    if (!is_rational()) throw NotRational("algebraic number is not known to be rational");
    return lo_;
  }

  /// One bisection step. Lands exactly on the root when the midpoint is one.
  RealAlgebraic refined() const {
    if (is_rational()) return *this;
    Rational mid = (lo_ + hi_) / 2;
    int sm = poly_.sign_at(mid);
    if (sm == 0) return RealAlgebraic(mid);
    RealAlgebraic r = *this;
    if (sm == poly_.sign_at(lo_))
      r.lo_ = mid;
    else
      r.hi_ = mid;
    return r;
  }

  /// Bisects until the interval width is at most `width` or `max_steps` is hit.
  RealAlgebraic refined_to(const Rational& width, int max_steps) const {
    RealAlgebraic r = *this;
    for (int i = 0; i < max_steps && r.hi_ - r.lo_ > width; ++i) r = r.refined();
    return r;
  }

  /// Detects a rational value exactly. A rational root p/q of the primitive
  /// defining polynomial has q | leading coefficient L, and two distinct such
  /// fractions differ by at least 1/L^2, so once the interval is narrower the
  /// simplest fraction inside it is the only candidate.
  RealAlgebraic with_rational_detection() const {
    if (is_rational()) return *this;
    if (poly_.degree() == 1) return RealAlgebraic(-poly_.coeff(0) / poly_.coeff(1));
    Integer lead = poly_.leading().get_num();
    if (lead < 0) lead = -lead;
    Rational bound = Rational(1) / Rational(lead * lead);
    RealAlgebraic r = *this;
    while (!r.is_rational() && r.hi_ - r.lo_ >= bound) r = r.refined();
    if (r.is_rational()) return r;
    Rational cand = simplest_between(r.lo_, r.hi_);
    if (poly_.sign_at(cand) == 0) return RealAlgebraic(cand);
    return *this;
  }

  double approx() const { return Rational((lo_ + hi_) / 2).get_d(); }

  std::string to_string() const {
    if (is_rational()) return to_text(lo_);
    return "root of " + poly_.to_string() + " in (" + to_text(lo_) + ", " + to_text(hi_) + ")";
  }

 private:
  UniPoly poly_;
  Rational lo_, hi_;
};

/// Isolates the distinct real roots of f (any nonzero polynomial), ascending.
inline std::vector<RealAlgebraic> isolate_roots(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("isolating roots of the zero polynomial");
  std::vector<RealAlgebraic> out;
  if (f.degree() <= 0) return out;
  UniPoly g = squarefree_part(f);
  SturmChain chain(g);
  Rational bound = root_bound(g);

  struct Cell {
    Rational a, b;
    int n;
  };
  // Depth-first on (a, b], left cells first, so output comes out ascending.
  std::vector<Cell> stack;
  stack.push_back({-bound, bound, count_half_open(chain, -bound, bound)});
  std::vector<RealAlgebraic> found;
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (c.n == 0) continue;
    if (c.n == 1) {
      Rational a = c.a, b = c.b;
      while (true) {
        if (g.sign_at(b) == 0) {
          found.emplace_back(b);
          break;
        }
        if (g.sign_at(a) != 0) {
          found.push_back(RealAlgebraic::from_isolating(g, a, b));
          break;
        }
        Rational m = (a + b) / 2;
        if (count_half_open(chain, m, b) == 1)
          a = m;
        else
          b = m;
      }
      continue;
    }
    Rational m = (c.a + c.b) / 2;
    int left = count_half_open(chain, c.a, m);
    stack.push_back({m, c.b, c.n - left});
    stack.push_back({c.a, m, left});
  }
  for (auto& r : found) out.push_back(r.with_rational_detection());
  return out;
}

/// Exact sign of g at x. Zero is decided by a gcd test, so this terminates.
inline int sign_at(const UniPoly& g, const RealAlgebraic& x) {
  if (x.is_rational()) return g.sign_at(x.lo());
  if (g.is_zero()) return 0;
  UniPoly common = gcd(g, x.defining());
  if (common.degree() > 0 && count_real_roots(common, RootRange::closed(x.lo(), x.hi())) > 0) return 0;
  RealAlgebraic y = x;
  UniPoly gs = squarefree_part(g);
  while (!y.is_rational() && count_real_roots(gs, RootRange::closed(y.lo(), y.hi())) > 0) y = y.refined();
  if (y.is_rational()) return g.sign_at(y.lo());
  return g.sign_at((y.lo() + y.hi()) / 2);
}

/// Exact three-way comparison: -1, 0, +1.
inline int compare(const RealAlgebraic& x, const RealAlgebraic& y) {
  if (x.is_rational() && y.is_rational()) return sgn(x.lo() - y.lo());
  if (x.is_rational()) return -compare(y, x);
  if (y.is_rational()) {
    const Rational& q = y.lo();
    if (q <= x.lo()) return 1;
    if (q >= x.hi()) return -1;
    // q inside (lo, hi): the root is on the side where the sign changes.
    int sq = x.defining().sign_at(q);
    if (sq == 0) return 0;
    return sq == x.defining().sign_at(x.lo()) ? 1 : -1;
  }
  Rational lo = std::max(x.lo(), y.lo()), hi = std::min(x.hi(), y.hi());
  if (lo < hi) {
    UniPoly common = gcd(x.defining(), y.defining());
    if (common.degree() > 0 && count_real_roots(common, RootRange::closed(lo, hi)) > 0) return 0;
  }
  RealAlgebraic a = x, b = y;
  while (true) {
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    if (a.is_rational() || b.is_rational()) return compare(a, b);
    a = a.refined();
    b = b.refined();
  }
}

inline bool operator==(const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) == 0; }
inline bool operator<(const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) < 0; }

}  // namespace binwaring::realroots
