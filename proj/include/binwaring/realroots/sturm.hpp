#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/realroots/unipoly.hpp>

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace binwaring::realroots {

/// f / gcd(f, f'), primitive with positive leading coefficient.
inline UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  if (f.degree() == 0) return UniPoly::constant(1);
  UniPoly g = gcd(f, f.derivative());
  return f.quo(g).normalized();
}

inline bool is_squarefree(const UniPoly& f) {
  if (f.is_zero()) return false;
  return f.degree() <= 0 || gcd(f, f.derivative()).degree() == 0;
}

/// Yun's algorithm: f = c * prod_i factors[i]^(i+1), each factor squarefree and
/// pairwise coprime. Entries may be constant (multiplicity not present).
inline std::vector<UniPoly> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of the zero polynomial");
  std::vector<UniPoly> out;
  if (f.degree() == 0) return out;
  UniPoly fp = f.derivative();
  UniPoly a = gcd(f, fp);
  UniPoly b = f.quo(a);
  UniPoly c = fp.quo(a);
  UniPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    out.push_back(g.normalized());
    b = b.quo(g);
    c = d.quo(g);
    d = c - b.derivative();
  }
  return out;
}

/// Sturm sequence of a polynomial. Each member is rescaled by a positive
/// constant to keep coefficients integral; signs are unaffected.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("Sturm chain of the zero polynomial");
    chain_.push_back(f.primitive());
    UniPoly d = f.derivative();
    if (d.is_zero()) return;
    chain_.push_back(d.primitive());
    while (true) {
      UniPoly r = chain_[chain_.size() - 2].rem(chain_.back());
      if (r.is_zero()) break;
      chain_.push_back((-r).primitive());
    }
  }

  const std::vector<UniPoly>& polys() const { return chain_; }

  int variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count(signs);
  }
  int variations_at_infinity(int dir) const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.sign_at_infinity(dir));
    return count(signs);
  }

  void dump(std::ostream& os) const {
    for (std::size_t i = 0; i < chain_.size(); ++i) os << "  S" << i << " = " << chain_[i].to_string() << "\n";
  }

 private:
  static int count(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }
  std::vector<UniPoly> chain_;
};

/// Range for root counting: the whole real line, or a closed interval.
struct RootRange {
  std::optional<Rational> lo, hi;
  static RootRange whole_line() { return {}; }
  static RootRange closed(Rational l, Rational h) { return {std::move(l), std::move(h)}; }
};

/// Number of distinct real roots of f in the range.
inline int count_real_roots(const UniPoly& f, const RootRange& range = RootRange::whole_line()) {
  if (f.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
  if (f.degree() == 0) return 0;
  UniPoly g = squarefree_part(f);
  SturmChain chain(g);
  int v_lo = range.lo ? chain.variations_at(*range.lo) : chain.variations_at_infinity(-1);
  int v_hi = range.hi ? chain.variations_at(*range.hi) : chain.variations_at_infinity(1);
  int n = v_lo - v_hi;
  if (range.lo && g.sign_at(*range.lo) == 0) ++n;
  return n;
}

/// Number of distinct roots of a squarefree f in the half-open (a, b].
inline int count_half_open(const SturmChain& chain, const Rational& a, const Rational& b) {
  return chain.variations_at(a) - chain.variations_at(b);
}

/// Strict bound on the absolute value of every complex root (Cauchy).
inline Rational root_bound(const UniPoly& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Rational q = abs(f.coeff(i) / f.leading());
    if (q > m) m = q;
  }
  return m + 1;
}

}  // namespace binwaring::realroots
