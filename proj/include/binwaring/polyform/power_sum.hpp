#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/polyform/binary_form.hpp>
#include <binwaring/realroots/exact_real.hpp>
#include <binwaring/realroots/interval.hpp>
#include <binwaring/realroots/real_algebraic.hpp>

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace binwaring::polyform {

using realroots::ExactReal;
using realroots::Interval;
using realroots::RealAlgebraic;

/// A real linear form alpha*x + beta*y up to a nonzero scalar, stored in the
/// canonical normalization: alpha = 1 (so the form is x + slope*y) or, when
/// alpha = 0, the form y itself.
class ProjLinearForm {
 public:
  /// The form x + slope*y.
  static ProjLinearForm with_slope(RealAlgebraic slope) {
    ProjLinearForm f;
    f.slope_ = std::move(slope);
    f.is_y_ = false;
    return f;
  }
  /// The form y.
  static ProjLinearForm y() {
    ProjLinearForm f;
    f.is_y_ = true;
    return f;
  }

  /// Normalizes (alpha, beta) and returns the factor c with
  /// (alpha x + beta y)^degree = c * (normalized form)^degree.
  static std::pair<ProjLinearForm, Rational> normalize(const Rational& alpha, const Rational& beta, unsigned degree) {
    if (alpha == 0 && beta == 0) throw InvalidArgument("linear form (0, 0) is not allowed");
    if (alpha == 0) return {y(), binwaring::pow(beta, degree)};
    return {with_slope(RealAlgebraic(Rational(beta / alpha))), binwaring::pow(alpha, degree)};
  }

  bool is_y() const { return is_y_; }
  Rational alpha() const { return is_y_ ? Rational(0) : Rational(1); }
  RealAlgebraic beta() const { return is_y_ ? RealAlgebraic(Rational(1)) : slope_; }
  const RealAlgebraic& slope() const {
    if (is_y_) throw InvalidArgument("the form y has no finite slope");
    return slope_;
  }
  bool is_rational() const { return is_y_ || slope_.is_rational(); }

  ProjLinearForm refined() const {
    if (is_y_) return *this;
    return with_slope(slope_.refined());
  }

  /// Order by angle theta in (-pi/2, pi/2] for the form cos(theta) x - sin(theta) y:
  /// ascending -beta/alpha, with y (theta = pi/2) last.
  friend bool angle_less(const ProjLinearForm& a, const ProjLinearForm& b) {
    if (a.is_y_) return false;
    if (b.is_y_) return true;
    return realroots::compare(a.slope_, b.slope_) > 0;
  }

  friend bool operator==(const ProjLinearForm& a, const ProjLinearForm& b) {
    if (a.is_y_ || b.is_y_) return a.is_y_ == b.is_y_;
    return realroots::compare(a.slope_, b.slope_) == 0;
  }

  std::string to_string() const {
    if (is_y_) return "y";
    if (slope_.is_rational()) {
      const Rational& b = slope_.lo();
      if (b == 0) return "x";
      std::string mag = to_text(b < 0 ? Rational(-b) : b);
      return std::string("x ") + (b < 0 ? "- " : "+ ") + (mag == "1" ? "" : mag + "*") + "y";
    }
    return "x + b*y, b = " + slope_.to_string();
  }

 private:
  RealAlgebraic slope_;
  bool is_y_ = false;
};

/// Counts (a, b) of positive and negative coefficients in a representation.
struct Badge {
  unsigned pos = 0, neg = 0;
  auto operator<=>(const Badge&) const = default;
  unsigned total() const { return pos + neg; }
  std::string to_string() const { return "(" + std::to_string(pos) + "," + std::to_string(neg) + ")"; }
};

/// Componentwise partial order.
inline bool precedes(const Badge& a, const Badge& b) { return a.pos <= b.pos && a.neg <= b.neg; }
inline bool comparable(const Badge& a, const Badge& b) { return precedes(a, b) || precedes(b, a); }

inline Badge componentwise_max(const Badge& a, const Badge& b) {
  return {std::max(a.pos, b.pos), std::max(a.neg, b.neg)};
}

/// Minimal elements of a finite set, sorted and deduplicated.
inline std::vector<Badge> minimal_elements(std::vector<Badge> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Badge> out;
  for (const auto& b : v) {
    bool dominated = false;
    for (const auto& c : v)
      if (c != b && precedes(c, b)) dominated = true;
    if (!dominated) out.push_back(b);
  }
  return out;
}

struct PowerSumTerm {
  ExactReal lambda;
  ProjLinearForm form;
};

/// p = sum_k lambda_k * form_k^degree with every lambda_k of known nonzero sign
/// and the forms pairwise distinct (an honest representation).
class PowerSumRep {
 public:
  PowerSumRep(unsigned degree, std::vector<PowerSumTerm> terms) : d_(degree), terms_(std::move(terms)) {
    if (d_ == 0) throw InvalidArgument("representation degree must be positive");
    for (const auto& t : terms_)
      if (t.lambda.sign() == 0) throw InvalidArgument("representation coefficients must be nonzero");
    for (std::size_t i = 0; i < terms_.size(); ++i)
      for (std::size_t j = i + 1; j < terms_.size(); ++j)
        if (terms_[i].form == terms_[j].form)
          throw NotHonest("terms " + std::to_string(i) + " and " + std::to_string(j) + " use proportional forms");
  }

  /// Builds from rational (lambda, alpha, beta) triples, normalizing each form.
  static PowerSumRep from_rational(unsigned degree, const std::vector<std::array<Rational, 3>>& triples) {
    std::vector<PowerSumTerm> terms;
    for (auto [lambda, alpha, beta] : triples) {
      lambda.canonicalize();
      alpha.canonicalize();
      beta.canonicalize();
      auto [form, scale] = ProjLinearForm::normalize(alpha, beta, degree);
      terms.push_back({ExactReal(Rational(lambda * scale)), form});
    }
    return PowerSumRep(degree, std::move(terms));
  }

  unsigned degree() const { return d_; }
  const std::vector<PowerSumTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Badge badge() const {
    Badge b;
    for (const auto& t : terms_) (t.lambda.sign() > 0 ? b.pos : b.neg)++;
    return b;
  }

  bool is_rational() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PowerSumTerm& t) { return t.lambda.is_rational() && t.form.is_rational(); });
  }

 private:
  unsigned d_;
  std::vector<PowerSumTerm> terms_;
};

/// Exact expansion of a representation with rational data.
inline BinaryForm expand_exact(const PowerSumRep& rep) {
  const unsigned d = rep.degree();
  std::vector<Rational> a(d + 1);
  for (const auto& t : rep.terms()) {
    if (!t.lambda.is_rational() || !t.form.is_rational())
      throw NotRational("expand_exact needs rational coefficients and forms");
    const Rational& lambda = t.lambda.rational_value();
    if (t.form.is_y()) {
      a[d] += lambda;
      continue;
    }
    const Rational& b = t.form.slope().lo();
    Rational bp = 1;
    for (unsigned j = 0; j <= d; ++j, bp *= b) a[j] += lambda * bp;
  }
  return BinaryForm(d, std::move(a));
}

/// Binomial-normalized coefficients given as rational enclosures.
struct IntervalForm {
  unsigned degree = 0;
  std::vector<Interval> coeffs;

  bool contains(const BinaryForm& p) const {
    if (p.degree() != degree) return false;
    for (unsigned j = 0; j <= degree; ++j)
      if (!coeffs[j].contains(p.a(j))) return false;
    return true;
  }
  Rational max_width() const {
    Rational w = 0;
    for (const auto& c : coeffs) w = std::max(w, c.width());
    return w;
  }
};

/// Certified expansion: refines every algebraic quantity until each coefficient
/// enclosure is at most `tol` wide. `max_steps` bounds the bisection rounds.
inline IntervalForm expand_certified(const PowerSumRep& rep, const Rational& tol, int max_steps) {
  const unsigned d = rep.degree();
  std::vector<PowerSumTerm> terms = rep.terms();
  for (int step = 0;; ++step) {
    IntervalForm out{d, std::vector<Interval>(d + 1, Interval(Rational(0)))};
    bool ok = true;
    for (const auto& t : terms) {
      Interval lam;
      try {
        lam = t.lambda.enclosure();
      } catch (const PrecisionExhausted&) {
        ok = false;
        break;
      }
      if (t.form.is_y()) {
        out.coeffs[d] = out.coeffs[d] + lam;
        continue;
      }
      Interval b = t.form.slope().interval();
      Interval bp(Rational(1));
      for (unsigned j = 0; j <= d; ++j, bp = bp * b) out.coeffs[j] = out.coeffs[j] + lam * bp;
    }
    if (ok && out.max_width() <= tol) return out;
    if (step >= max_steps)
      throw PrecisionExhausted("certified expansion did not reach the requested width within " +
                               std::to_string(max_steps) + " bisection steps");
    for (auto& t : terms) {
      t.lambda = t.lambda.refined();
      t.form = t.form.refined();
    }
  }
}

/// Maps a representation of p to one of -p(x, -y): lambdas and slopes negated.
/// For p with p(x, -y) = -p(x, y) this turns badge (a, b) into (b, a).
inline PowerSumRep mirror_badge(const PowerSumRep& rep) {
  if (rep.degree() % 2 != 0) throw OddDegree("mirror_badge needs an even degree");
  std::vector<PowerSumTerm> terms;
  for (const auto& t : rep.terms()) {
    ProjLinearForm f = t.form;
    if (!f.is_y()) {
      const RealAlgebraic& s = f.slope();
      if (s.is_rational())
        f = ProjLinearForm::with_slope(RealAlgebraic(Rational(-s.lo())));
      else
        f = ProjLinearForm::with_slope(RealAlgebraic::from_isolating(
            realroots::compose(s.defining(), realroots::UniPoly{0, -1}), -s.hi(), -s.lo()));
    }
    terms.push_back({-t.lambda, f});
  }
  return PowerSumRep(rep.degree(), std::move(terms));
}

}  // namespace binwaring::polyform
