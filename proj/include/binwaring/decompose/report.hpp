#pragma once

#include <binwaring/decompose/search.hpp>
#include <binwaring/decompose/sylvester.hpp>
#include <binwaring/polyform/power_sum.hpp>
#include <binwaring/quadsig/inertia.hpp>
#include <binwaring/realroots/factor_count.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace binwaring::decompose {

using polyform::comparable;
using polyform::componentwise_max;
using polyform::minimal_elements;
using polyform::precedes;
using quadsig::ConeMembership;
using quadsig::Inertia;

/// Badges that can occur as signatures of a form of degree 2s:
/// {(s+1,0), (0,s+1)} together with [0,s]^2.
inline bool is_possible_signature(const Badge& b, unsigned s) {
  if ((b.pos == s + 1 && b.neg == 0) || (b.pos == 0 && b.neg == s + 1)) return true;
  return b.pos <= s && b.neg <= s;
}

inline std::vector<Badge> possible_signatures(unsigned s) {
  std::vector<Badge> out{{0, s + 1}, {s + 1, 0}};
  for (unsigned a = 0; a <= s; ++a)
    for (unsigned b = 0; b <= s; ++b)
      if (a + b > 0) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_in_power_cone(const BinaryForm& p) { return quadsig::width(p).cone == ConeMembership::InCone; }

/// Componentwise max of the catalecticant inertia and, for a product of real
/// linear factors other than +-l^2s, of (s, s).
inline Badge signature_lower_bound(const BinaryForm& p) {
  if (p.degree() % 2 != 0) throw OddDegree("signature bounds need an even degree");
  if (p.is_zero()) throw ZeroForm("signature bounds of the zero form");
  const unsigned s = p.degree() / 2;
  Inertia in = quadsig::inertia(quadsig::catalecticant(p));
  Badge b{in.pos, in.neg};
  if (realroots::splits(p) && !realroots::is_power_of_linear(p)) b = componentwise_max(b, {s, s});
  return b;
}

struct SignChangeCertificate {
  unsigned tau = 0;
  unsigned sigma = 0;
  bool ok = false;
  std::vector<int> signs;  // lambda signs in angular order
};

/// Sorts terms by the angle of their forms and compares the number of real
/// linear factors of `source` (tau) with the cyclic sign changes (sigma).
inline SignChangeCertificate sign_change_certificate(const PowerSumRep& rep, const BinaryForm& source) {
  if (rep.size() < 2) throw DegenerateRepresentation("sign-change certificate needs at least two terms");
  if (source.is_zero()) throw DegenerateRepresentation("representation sums to zero");
  std::vector<PowerSumTerm> terms = rep.terms();
  std::sort(terms.begin(), terms.end(),
            [](const PowerSumTerm& a, const PowerSumTerm& b) { return angle_less(a.form, b.form); });
  SignChangeCertificate out;
  for (const auto& t : terms) out.signs.push_back(t.lambda.sign());
  const int wrap = (rep.degree() % 2 == 0 ? 1 : -1) * out.signs.front();
  for (std::size_t i = 0; i < out.signs.size(); ++i) {
    int next = i + 1 < out.signs.size() ? out.signs[i + 1] : wrap;
    if (next != out.signs[i]) ++out.sigma;
  }
  out.tau = realroots::real_linear_factor_count(source);
  out.ok = out.tau <= out.sigma;
  return out;
}

inline SignChangeCertificate sign_change_certificate(const PowerSumRep& rep) {
  if (!rep.is_rational()) throw NotRational("pass the source form for representations with algebraic data");
  if (rep.size() < 2) throw DegenerateRepresentation("sign-change certificate needs at least two terms");
  BinaryForm p = polyform::expand_exact(rep);
  return sign_change_certificate(rep, p);
}

/// True iff the incomparable badges (a,b), (c,d) with a > c satisfy
/// a+d >= s+3, b+c >= s+1, max(a+b, c+d) >= s+2, a,b,c,d >= 1, and both lie
/// in the set of possible signatures.
inline bool incomparable_constraints_ok(Badge b1, Badge b2, unsigned s) {
  if (comparable(b1, b2)) throw NotIncomparable(b1.to_string() + " and " + b2.to_string() + " are comparable");
  if (b1.pos < b2.pos) std::swap(b1, b2);
  const unsigned a = b1.pos, b = b1.neg, c = b2.pos, d = b2.neg;
  if (std::min({a, b, c, d}) < 1) return false;
  if (!is_possible_signature(b1, s) || !is_possible_signature(b2, s)) return false;
  return a + d >= s + 3 && b + c >= s + 1 && std::max(a + b, c + d) >= s + 2;
}

/// Closed-form signature sets for q_lambda = 6x^5y + 20 lambda x^3y^3 + 6xy^5.
inline std::vector<Badge> sextic_family_oracle(const Rational& lambda) {
  if (lambda == 1) return {{1, 1}};
  if (lambda > 0) return {{2, 2}};
  if (lambda > Rational(-3, 5)) return {{2, 3}, {3, 2}};
  return {{3, 3}};
}

inline BinaryForm sextic_family(const Rational& lambda) {
  return BinaryForm(6, {0, 1, 0, lambda, 0, 1, 0});
}

enum class Status { Proven, Observed };

inline std::string to_string(Status s) { return s == Status::Proven ? "proven" : "observed"; }

struct SignatureReport {
  unsigned degree = 0;
  Inertia inertia;
  ConeMembership cone = ConeMembership::Neither;
  unsigned tau = 0;
  bool splits = false;
  unsigned length_lower = 0, length_upper = 0;
  bool length_conclusive = false;
  std::vector<Badge> signatures;
  Status status = Status::Observed;
  Badge lower_bound_badge;
  std::vector<std::string> provenance;
  std::vector<Badge> observed_badges;
  std::optional<DecompResult> witness;
  std::vector<DegreeRecord> degrees;

  bool conclusive() const { return status == Status::Proven && length_conclusive; }
};

namespace detail {

inline SignatureReport base_report(const BinaryForm& p) {
  if (p.is_zero()) throw ZeroForm("signature report of the zero form");
  if (p.degree() % 2 != 0) throw OddDegree("signature report needs an even degree, got " + std::to_string(p.degree()));
  SignatureReport rep;
  rep.degree = p.degree();
  rep.inertia = quadsig::inertia(quadsig::catalecticant(p));
  rep.cone = quadsig::width(p).cone;
  rep.tau = realroots::real_linear_factor_count(p);
  rep.splits = rep.tau == p.degree();
  rep.lower_bound_badge = signature_lower_bound(p);
  return rep;
}

inline void prove_unique(SignatureReport& rep, Badge sig, unsigned length) {
  rep.signatures = {sig};
  rep.status = Status::Proven;
  rep.length_lower = rep.length_upper = length;
  rep.length_conclusive = true;
}

// A witness representation of the proven length, for display and cross-checks.
inline void attach_witness(SignatureReport& rep, const BinaryForm& p, const SearchConfig& cfg) {
  LengthResult l = real_length(p, cfg, rep.length_lower);
  rep.degrees = l.degrees;
  if (l.decomposition) {
    rep.witness = l.decomposition;
    rep.observed_badges = {l.decomposition->badge};
  }
}

}  // namespace detail

/// Signature of a binary quartic: +-l^4 gives (1,0) or (0,1); a product of
/// real linear factors gives (2,2); otherwise the catalecticant inertia.
inline SignatureReport quartic_classify(const BinaryForm& p, const SearchConfig& cfg = {}) {
  if (p.degree() != 4) throw InvalidArgument("quartic_classify needs a quartic, got degree " + std::to_string(p.degree()));
  SignatureReport rep = detail::base_report(p);
  rep.provenance = {"thm-4.1", "thm-4.2"};
  if (realroots::is_power_of_linear(p)) {
    bool positive = p.a(0) > 0 || (p.a(0) == 0 && p.a(4) > 0);
    detail::prove_unique(rep, positive ? Badge{1, 0} : Badge{0, 1}, 1);
  } else if (rep.splits) {
    detail::prove_unique(rep, {2, 2}, 4);
  } else {
    detail::prove_unique(rep, {rep.inertia.pos, rep.inertia.neg}, rep.inertia.rank());
  }
  detail::attach_witness(rep, p, cfg);
  return rep;
}

/// Assembles what is known about the signature set of p, tagging each
/// conclusion with the result it rests on.
inline SignatureReport signature_report(const BinaryForm& p, const SearchConfig& cfg = {}) {
  SignatureReport rep = detail::base_report(p);
  const unsigned d = p.degree(), s = d / 2;
  const Badge inertia_badge{rep.inertia.pos, rep.inertia.neg};

  if (d == 2) {
    detail::prove_unique(rep, inertia_badge, rep.inertia.rank());
    rep.provenance = {"thm-2.2"};
    detail::attach_witness(rep, p, cfg);
    return rep;
  }
  if (rep.cone != ConeMembership::Neither) {
    const unsigned w = rep.inertia.rank();
    detail::prove_unique(rep, rep.cone == ConeMembership::InCone ? Badge{w, 0} : Badge{0, w}, w);
    rep.provenance = {"thm-2.9.1", "cor-2.10.2", w <= s ? "thm-2.9.2" : "thm-2.9.3"};
    detail::attach_witness(rep, p, cfg);
    return rep;
  }
  if (rep.splits && !realroots::is_power_of_linear(p)) {
    detail::prove_unique(rep, {s, s}, 2 * s);
    rep.provenance = {"thm-3.1.2"};
    detail::attach_witness(rep, p, cfg);
    return rep;
  }
  if (d == 4) {
    SignatureReport q = quartic_classify(p, cfg);
    return q;
  }

  LengthResult l = real_length(p, cfg, rep.lower_bound_badge.total());
  rep.length_lower = l.lower;
  rep.length_upper = l.upper;
  rep.length_conclusive = l.conclusive;
  rep.degrees = l.degrees;
  rep.witness = l.decomposition;
  if (l.decomposition) rep.observed_badges.push_back(l.decomposition->badge);

  if (l.decomposition && l.upper == rep.inertia.rank()) {
    rep.signatures = {inertia_badge};
    rep.status = Status::Proven;
    rep.provenance = {"cor-2.10.1", "cor-2.10.3"};
    return rep;
  }
  if (l.decomposition && l.decomposition->badge == rep.lower_bound_badge) {
    // Every badge dominates the lower bound, and the bound is attained.
    rep.signatures = {rep.lower_bound_badge};
    rep.status = Status::Proven;
    rep.provenance = {"cor-2.10.1"};
    return rep;
  }

  BadgeSearchResult found;
  if (l.decomposition) {
    found = badge_search(p, l.upper, cfg);
    for (const auto& b : found.badges)
      if (std::find(rep.observed_badges.begin(), rep.observed_badges.end(), b) == rep.observed_badges.end())
        rep.observed_badges.push_back(b);
    std::sort(rep.observed_badges.begin(), rep.observed_badges.end());
  }

  const Badge b23{2, 3}, b32{3, 2};
  bool has_mixed = std::find(rep.observed_badges.begin(), rep.observed_badges.end(), b23) != rep.observed_badges.end() ||
                   std::find(rep.observed_badges.begin(), rep.observed_badges.end(), b32) != rep.observed_badges.end();
  if (d == 6 && l.conclusive && l.upper == 5 && polyform::mirror(p) == -p && has_mixed) {
    // Signatures lie in [0,3]^2 here and have at least 5 terms; (2,3) is
    // attained, and so is its mirror image.
    rep.signatures = {b23, b32};
    rep.status = Status::Proven;
    rep.provenance = {"thm-3.1.1", "lem-4.6", "cor-4.3"};
    return rep;
  }

  rep.signatures = minimal_elements(rep.observed_badges);
  rep.status = Status::Observed;
  rep.provenance = {"observed"};
  return rep;
}

}  // namespace binwaring::decompose
