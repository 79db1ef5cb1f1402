#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/polyform/binary_form.hpp>
#include <binwaring/realroots/real_algebraic.hpp>
#include <binwaring/realroots/sturm.hpp>

#include <vector>

namespace binwaring::realroots {

/// Projective real roots of a binary form h = sum_j c_j x^(r-j) y^j, read
/// through g(t) = h(1, t). A finite root t stands for the point (1 : t); the
/// point (0 : 1) is the root at infinity, of multiplicity r - deg g.
struct ProjRootSet {
  std::vector<RealAlgebraic> finite;
  unsigned infinity_multiplicity = 0;

  std::size_t size() const { return finite.size() + (infinity_multiplicity > 0 ? 1 : 0); }
};

/// Number of real linear factors of p, counted with multiplicity.
inline unsigned real_linear_factor_count(const polyform::BinaryForm& p) {
  if (p.is_zero()) throw ZeroForm("real linear factors of the zero form");
  unsigned y_mult = 0;
  while (p.a(y_mult) == 0) ++y_mult;
  unsigned tau = y_mult;
  // p(t, 1) has degree d - y_mult; its real roots give the remaining factors.
  UniPoly q = p.dehomogenized();
  auto parts = squarefree_decomposition(q);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() > 0) tau += static_cast<unsigned>((i + 1) * count_real_roots(parts[i]));
  return tau;
}

/// True when p is a product of real linear factors.
inline bool splits(const polyform::BinaryForm& p) { return real_linear_factor_count(p) == p.degree(); }

/// True when p = c * l^d for a real linear form l and rational c != 0.
inline bool is_power_of_linear(const polyform::BinaryForm& p) {
  if (p.is_zero()) return false;
  const unsigned d = p.degree();
  // a_j = c * b^j (form (1, b)) or only a_d nonzero (form y).
  if (p.a(0) == 0) {
    for (unsigned j = 0; j < d; ++j)
      if (p.a(j) != 0) return false;
    return true;
  }
  Rational b = p.a(1) / p.a(0);
  Rational bp = 1;
  for (unsigned j = 0; j <= d; ++j, bp *= b)
    if (p.a(j) != p.a(0) * bp) return false;
  return true;
}

}  // namespace binwaring::realroots
