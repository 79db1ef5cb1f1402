#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/common/rational.hpp>
#include <binwaring/polyform/binary_form.hpp>
#include <binwaring/polyform/power_sum.hpp>
#include <binwaring/quadsig/inertia.hpp>
#include <binwaring/quadsig/matrix.hpp>
#include <binwaring/realroots/exact_real.hpp>
#include <binwaring/realroots/factor_count.hpp>
#include <binwaring/realroots/real_algebraic.hpp>
#include <binwaring/realroots/sturm.hpp>

#include <optional>
#include <string>
#include <vector>

namespace binwaring::decompose {

using polyform::Badge;
using polyform::BinaryForm;
using polyform::PowerSumRep;
using polyform::PowerSumTerm;
using polyform::ProjLinearForm;
using realroots::ExactReal;
using realroots::ProjRootSet;
using realroots::RealAlgebraic;
using realroots::UniPoly;

/// Coefficients c_0..c_r of h = sum_j c_j x^(r-j) y^j.
using FormCoeffs = std::vector<Rational>;

/// Coefficients of the product of two forms.
inline FormCoeffs multiply_forms(const FormCoeffs& f, const FormCoeffs& g) {
  FormCoeffs out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

/// The linear factor vanishing at the root t of h(1, t): y - t*x, or x for the
/// root at infinity.
inline FormCoeffs linear_factor(const std::optional<Rational>& root) {
  if (!root) return {1, 0};
  return {-*root, 1};
}

/// h(1, t) as a polynomial in t.
inline UniPoly dehomogenize(const FormCoeffs& c) { return UniPoly(std::vector<Rational>(c.begin(), c.end())); }

inline std::string form_text(const FormCoeffs& c) {
  std::vector<Rational> m(c.begin(), c.end());
  if (c.size() < 2) return to_text(c.empty() ? Rational(0) : c[0]);
  return BinaryForm::from_monomials(static_cast<unsigned>(c.size() - 1), m).to_text();
}

enum class Rejection { None, NotSquarefree, ComplexRoots, RepeatedInfinity };

inline std::string to_string(Rejection r) {
  switch (r) {
    case Rejection::NotSquarefree: return "NotSquarefree";
    case Rejection::ComplexRoots: return "ComplexRoots";
    case Rejection::RepeatedInfinity: return "RepeatedInfinity";
    default: return "None";
  }
}

/// A degree-r form with r distinct real projective roots.
struct SylvesterForm {
  unsigned r = 0;
  FormCoeffs coeffs;
  ProjRootSet roots;

  std::string to_text() const { return form_text(coeffs); }
};

struct Validation {
  Rejection rejection = Rejection::None;
  std::optional<SylvesterForm> form;
  bool valid() const { return form.has_value(); }
};

/// Accepts h iff it is a product of r pairwise distinct real linear factors.
inline Validation validate_sylvester(const FormCoeffs& c) {
  if (c.size() < 2) throw InvalidArgument("Sylvester forms need degree at least 1");
  const unsigned r = static_cast<unsigned>(c.size() - 1);
  UniPoly g = dehomogenize(c);
  if (g.is_zero()) throw ZeroForm("candidate Sylvester form is zero");
  const unsigned inf = r - static_cast<unsigned>(g.degree());
  if (inf > 1) return {Rejection::RepeatedInfinity, std::nullopt};
  if (!realroots::is_squarefree(g)) return {Rejection::NotSquarefree, std::nullopt};
  if (g.degree() > 0 && realroots::count_real_roots(g) < g.degree()) return {Rejection::ComplexRoots, std::nullopt};
  SylvesterForm h{r, c, {}};
  if (g.degree() > 0) h.roots.finite = realroots::isolate_roots(g);
  h.roots.infinity_multiplicity = inf;
  return {Rejection::None, std::move(h)};
}

/// Kernel basis of hankel(p, r). For r = d + 1 there is no constraint and the
/// standard basis is returned.
inline std::vector<FormCoeffs> sylvester_candidates(const BinaryForm& p, unsigned r) {
  if (r < 1 || r > p.degree() + 1)
    throw RankOutOfRange("Sylvester degree r = " + std::to_string(r) + " outside 1.." + std::to_string(p.degree() + 1));
  if (r == p.degree() + 1) {
    std::vector<FormCoeffs> basis;
    for (unsigned j = 0; j <= r; ++j) {
      FormCoeffs e(r + 1);
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  return quadsig::kernel_basis(quadsig::hankel(p, r));
}

/// True when c lies in the kernel of hankel(p, r), r = len(c) - 1.
inline bool in_kernel(const BinaryForm& p, const FormCoeffs& c) {
  const unsigned r = static_cast<unsigned>(c.size() - 1), d = p.degree();
  if (r > d) return true;
  for (unsigned i = 0; i + r <= d; ++i) {
    Rational acc = 0;
    for (unsigned j = 0; j <= r; ++j) acc += p.a(i + j) * c[j];
    if (acc != 0) return false;
  }
  return true;
}

enum class Certification { Exact, CertifiedIntervals };

inline std::string to_string(Certification c) { return c == Certification::Exact ? "exact" : "certified-intervals"; }

struct DecompResult {
  PowerSumRep rep;
  Badge badge;
  Certification certification = Certification::Exact;
  int precision = 0;  // bisection budget behind interval certification
  SylvesterForm witness;
};

/// Coefficients lambda_k of p = sum_k lambda_k l_k^d where the l_k are the
/// forms attached to the roots of h. With g(t) = h(1, t) of degree n and
/// g(t) / (t - t_k) = sum_j q_j(t_k) t^j, the Vandermonde system gives
///     lambda_k = sum_{j<n} a_j q_j(t_k) / g'(t_k).
/// A root at infinity (c_r = 0) contributes the form y with
///     lambda_inf = sum_{j<r} a_{j+d-r+1} c_j / c_{r-1}.
/// Zero coefficients are decided exactly and dropped.
inline DecompResult solve_coefficients(const BinaryForm& p, const SylvesterForm& h, int precision = 256) {
  const unsigned d = p.degree(), r = h.r;
  if (r > d + 1) throw RankOutOfRange("Sylvester form degree exceeds d + 1");
  if (!in_kernel(p, h.coeffs)) throw InvalidArgument("form is not in the Hankel kernel of p");
  UniPoly g = dehomogenize(h.coeffs);
  const int n = g.degree();

  // q_{n-1} = c_n, q_{j-1} = c_j + t q_j, as polynomials in t.
  std::vector<UniPoly> q(n > 0 ? n : 0);
  if (n > 0) {
    q[n - 1] = UniPoly::constant(g.coeff(n));
    for (int j = n - 1; j >= 1; --j) q[j - 1] = UniPoly::constant(g.coeff(j)) + UniPoly{0, 1} * q[j];
  }
  UniPoly num;
  for (int j = 0; j < n; ++j) num = num + q[j] * p.a(j);
  UniPoly den = g.derivative();

  std::vector<PowerSumTerm> terms;
  for (const auto& t : h.roots.finite) {
    ExactReal lambda = ExactReal::at(t, num, den);
    if (lambda.sign() == 0) continue;
    terms.push_back({lambda, ProjLinearForm::with_slope(t)});
  }
  if (h.roots.infinity_multiplicity == 1) {
    Rational acc = 0;
    for (unsigned j = 0; j < r; ++j) acc += p.a(j + d - r + 1) * h.coeffs[j];
    acc /= h.coeffs[r - 1];
    if (acc != 0) terms.push_back({ExactReal(acc), ProjLinearForm::y()});
  }
  PowerSumRep rep(d, std::move(terms));
  DecompResult out{rep, rep.badge(), Certification::Exact, 0, h};
  if (rep.is_rational()) {
    if (!(polyform::expand_exact(rep) == p)) throw std::logic_error("exact re-expansion does not reproduce the form");
  } else {
    out.certification = Certification::CertifiedIntervals;
    out.precision = precision;
  }
  return out;
}

/// Representation from any d + 1 distinct rational points (every form of
/// degree d is a combination of their d-th powers).
inline FormCoeffs fallback_form(unsigned d) {
  FormCoeffs c{1};
  for (unsigned k = 0; k <= d; ++k) {
    Rational t = (k % 2 == 0) ? Rational(k / 2) : Rational(-static_cast<long>(k / 2 + 1));
    c = multiply_forms(c, linear_factor(t));
  }
  return c;
}

}  // namespace binwaring::decompose
