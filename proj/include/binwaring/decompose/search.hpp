#pragma once

#include <binwaring/decompose/sylvester.hpp>
#include <binwaring/quadsig/inertia.hpp>
#include <binwaring/quadsig/matrix.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace binwaring::decompose {

using quadsig::Matrix;

struct SearchConfig {
  unsigned search_budget = 10000;  // validated candidates per r
  unsigned denom_bound = 12;       // rational grids use denominators up to this
  int precision = 256;             // bisection steps for certified enclosures
  std::uint64_t seed = 0;
  unsigned witness_limit = 32;     // badge_search stops after this many valid forms
};

/// The Hankel constraints on c_0..c_r (no rows when r = d + 1).
inline Matrix constraint_matrix(const BinaryForm& p, unsigned r) {
  if (r == p.degree() + 1) return Matrix(0, r + 1);
  return quadsig::hankel(p, r).matrix();
}

inline bool satisfies(const Matrix& h, const FormCoeffs& c) {
  for (const auto& v : h.apply(c))
    if (v != 0) return false;
  return true;
}

/// Rationals n/q with 1 <= q <= bound and |n/q| <= bound, by increasing q and
/// then increasing |n| (positive first).
inline std::vector<Rational> rational_grid(unsigned bound) {
  std::vector<Rational> out;
  std::set<Rational> seen;
  for (unsigned q = 1; q <= bound; ++q)
    for (long n = 0; n <= static_cast<long>(q * bound); ++n)
      for (long sn : {n, -n}) {
        Rational v(sn, static_cast<long>(q));
        v.canonicalize();
        if (seen.insert(v).second) out.push_back(v);
        if (n == 0) break;
      }
  return out;
}

/// Candidate roots of h(1, t) used by the prescribed-roots strategy; nullopt
/// is the root at infinity.
inline std::vector<std::optional<Rational>> root_pool() {
  std::vector<std::optional<Rational>> pool{Rational(0), std::nullopt};
  for (long k : {1, 2, 3, 4, 5, 6})
    for (long sgn_ : {1, -1}) {
      pool.emplace_back(Rational(sgn_ * k));
      if (k > 1) pool.emplace_back(Rational(sgn_, k));
    }
  for (auto [n, q] : std::vector<std::pair<long, long>>{{3, 2}, {2, 3}, {5, 2}, {2, 5}, {4, 3}, {3, 4}})
    for (long sgn_ : {1, -1}) pool.emplace_back(Rational(sgn_ * n, q));
  return pool;
}

/// Shapes of the structured quadratic-product families.
enum class QuadType { Sym, Even };

inline FormCoeffs quadratic(QuadType t, const Rational& u) {
  if (t == QuadType::Sym) return {1, 2 + u, 1};  // x^2 + (2+u) x y + y^2
  return {1, 0, -u};                             // x^2 - u y^2
}

inline bool quadratic_splits(QuadType t, const Rational& u) {
  if (t == QuadType::Sym) return u > 0 || u < -4;
  return u > 0;
}

struct Family {
  FormCoeffs prefix;
  std::vector<QuadType> quads;  // one or two parametrized quadratics
  std::string name;
};

inline std::vector<Family> families_for(unsigned r) {
  std::vector<Family> out;
  std::vector<std::pair<FormCoeffs, std::string>> prefixes;
  if (r % 2 == 0)
    prefixes = {{{1}, ""}};
  else
    prefixes = {{{1, 1}, "(x+y)"}, {{1, 0}, "x"}, {{0, 1}, "y"}, {{1, -1}, "(x-y)"}};
  const unsigned nq = r / 2;
  if (nq < 1 || nq > 2) return out;
  for (const auto& [pre, pname] : prefixes) {
    if (nq == 1) {
      for (QuadType a : {QuadType::Sym, QuadType::Even})
        out.push_back({pre, {a}, pname + (a == QuadType::Sym ? "Qs(u)" : "Qe(u)")});
    } else {
      for (QuadType a : {QuadType::Sym, QuadType::Even})
        for (QuadType b : {QuadType::Sym, QuadType::Even})
          out.push_back({pre, {a, b},
                         pname + (a == QuadType::Sym ? "Qs(u)" : "Qe(u)") + (b == QuadType::Sym ? "Qs(v)" : "Qe(v)")});
    }
  }
  return out;
}

/// Solves A + v B in ker(H) for v. Returns nullopt when no v works and an
/// empty optional-of-optional (any v) when the whole line lies in the kernel.
inline std::optional<std::optional<Rational>> solve_affine(const Matrix& h, const FormCoeffs& a, const FormCoeffs& b) {
  auto ha = h.apply(a), hb = h.apply(b);
  std::optional<Rational> v;
  for (std::size_t i = 0; i < ha.size(); ++i)
    if (hb[i] != 0) {
      v = -ha[i] / hb[i];
      break;
    }
  if (!v) {
    for (const auto& x : ha)
      if (x != 0) return std::nullopt;
    return std::optional<Rational>{};
  }
  for (std::size_t i = 0; i < ha.size(); ++i)
    if (ha[i] + *v * hb[i] != 0) return std::nullopt;
  return std::optional<Rational>{*v};
}

inline FormCoeffs axpy(const FormCoeffs& a, const Rational& v, const FormCoeffs& b) {
  FormCoeffs out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v * b[i];
  return out;
}

/// Member of a two-quadratic family at a given u, with v solved from the
/// Hankel constraints; nullopt when no v exists. When every v works, the
/// returned form uses v = `fallback_v`.
struct FamilyMember {
  FormCoeffs coeffs;
  Rational u, v;
};

inline std::optional<FamilyMember> solve_family_member(const BinaryForm& p, const Family& fam, const Rational& u,
                                                       const Rational& fallback_v = 1) {
  const unsigned r = static_cast<unsigned>(fam.prefix.size() - 1 + 2 * fam.quads.size());
  Matrix h = constraint_matrix(p, r);
  FormCoeffs base = multiply_forms(fam.prefix, quadratic(fam.quads[0], u));
  if (fam.quads.size() == 1) {
    if (!satisfies(h, base)) return std::nullopt;
    return FamilyMember{base, u, 0};
  }
  FormCoeffs a = multiply_forms(base, quadratic(fam.quads[1], 0));
  FormCoeffs b = axpy(multiply_forms(base, quadratic(fam.quads[1], 1)), -1, a);
  auto sol = solve_affine(h, a, b);
  if (!sol) return std::nullopt;
  Rational v = sol->value_or(fallback_v);
  return FamilyMember{axpy(a, v, b), u, v};
}

/// Outcome of the complete decision for a two-dimensional kernel.
struct PencilDecision {
  std::optional<SylvesterForm> found;
  std::vector<FormCoeffs> samples;  // members tested, one per sign-constant region
};

/// Resultant of the two partial derivatives of h, i.e. (up to a constant)
/// the discriminant of h: zero exactly when h has a repeated projective root.
inline Rational derivative_resultant(const FormCoeffs& c) {
  const std::size_t r = c.size() - 1;
  if (r < 2) return 1;
  const std::size_t m = r - 1;  // degree of both partials
  FormCoeffs fx(m + 1), fy(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    fx[j] = Rational(static_cast<long>(r - j)) * c[j];
    fy[j] = Rational(static_cast<long>(j + 1)) * c[j + 1];
  }
  Matrix s(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= m; ++j) {
      s(i, i + j) = fx[j];
      s(m + i, i + j) = fy[j];
    }
  return quadsig::determinant(s);
}

/// Decides whether the pencil k1 + t k2 (t in R, plus k2 itself) contains a
/// product of r distinct real linear factors. The number of real roots is
/// constant between consecutive real zeros of the discriminant R(t), so one
/// rational sample per region settles the question.
inline PencilDecision decide_pencil(const FormCoeffs& k1, const FormCoeffs& k2) {
  PencilDecision out;
  const std::size_t r = k1.size() - 1;
  auto member = [&](const Rational& t) { return axpy(k1, t, k2); };
  auto test = [&](const FormCoeffs& c) {
    out.samples.push_back(c);
    auto v = validate_sylvester(c);
    if (v.valid()) out.found = v.form;
    return v.valid();
  };
  if (r < 2) {
    test(k1);
    return out;
  }
  const std::size_t deg = 2 * (r - 1);
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= deg; ++i) {
    xs.emplace_back(static_cast<long>(i));
    ys.push_back(derivative_resultant(member(xs.back())));
  }
  UniPoly res = realroots::interpolate(xs, ys);
  if (res.is_zero()) return out;  // every member has a repeated root

  std::vector<Rational> samples;
  auto roots = realroots::isolate_roots(res);
  if (roots.empty()) {
    samples.push_back(0);
  } else {
    samples.emplace_back(Rational(binwaring::floor(roots.front().lo()) - 1));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      RealAlgebraic a = roots[i], b = roots[i + 1];
      while (!(a.hi() < b.lo()) && !(a.hi() == b.lo() && !a.is_rational() && !b.is_rational())) {
        a = a.refined();
        b = b.refined();
      }
      Rational s = simplest_between(a.hi(), b.lo());
      if ((a.is_rational() && s == a.lo()) || (b.is_rational() && s == b.lo())) s = (a.hi() + b.lo()) / 2;
      samples.push_back(s);
    }
    samples.emplace_back(Rational(binwaring::floor(roots.back().hi()) + 2));
  }
  for (const auto& s : samples)
    if (test(member(s))) return out;
  test(k2);
  return out;
}

/// Drives the candidate strategies for one degree r and reports each
/// validated Sylvester form to `visit` (return true to stop).
class CandidateSearch {
 public:
  using Visitor = std::function<bool(const SylvesterForm&)>;

  CandidateSearch(const BinaryForm& p, unsigned r, const SearchConfig& cfg)
      : p_(p), r_(r), cfg_(cfg), h_(constraint_matrix(p, r)), basis_(quadsig::kernel_basis(h_)) {}

  const std::vector<FormCoeffs>& basis() const { return basis_; }
  unsigned used() const { return used_; }
  bool exhausted() const { return used_ >= cfg_.search_budget; }

  /// Runs the strategies in order; returns true if the visitor stopped early.
  /// With `existence_only`, a two-dimensional kernel ends after the complete
  /// pencil decision instead of going on to collect more members.
  bool run(const Visitor& visit, bool existence_only = false) {
    visit_ = &visit;
    seen_.clear();
    if (basis_.empty()) return false;
    if (basis_.size() == 1) return offer(basis_[0]);
    if (basis_.size() == 2) {
      PencilDecision dec = decide_pencil(basis_[0], basis_[1]);
      for (const auto& s : dec.samples)
        if (offer(s)) return true;
      if (existence_only) return false;
    }
    if (r_ == p_.degree() + 1 && offer(fallback_form(p_.degree()))) return true;
    return prescribed_roots() || quadratic_families() || integer_grid() || random_combinations();
  }

 private:
  // Valid candidates are passed on; the budget counts every distinct member tested.
  bool offer(const FormCoeffs& c) {
    if (exhausted() || stopped_) return true;
    bool zero = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
    if (zero) return false;
    FormCoeffs key = normalize(c);
    if (!seen_.insert(key).second) return false;
    ++used_;
    auto v = validate_sylvester(key);
    if (v.valid() && (*visit_)(*v.form)) stopped_ = true;
    return stopped_ || exhausted();
  }

  static FormCoeffs normalize(FormCoeffs c) {
    Rational lead;
    for (const auto& q : c)
      if (q != 0) {
        lead = q;
        break;
      }
    Integer l = 1, g = 0;
    for (auto& q : c) q /= lead;
    for (const auto& q : c) l = lcm(l, q.get_den());
    for (auto& q : c) q *= Rational(l);
    for (const auto& q : c) g = gcd(g, q.get_num());
    for (auto& q : c) q /= Rational(g);
    return c;
  }

  // h = F * G with F a product of k - 1 prescribed linear factors.
  bool prescribed_roots() {
    const std::size_t m = basis_.size() - 1;
    if (m > r_) return false;
    auto pool = root_pool();
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    if (m > pool.size()) return false;
    while (true) {
      FormCoeffs f{1};
      for (auto i : idx) f = multiply_forms(f, linear_factor(pool[i]));
      const std::size_t gdeg = r_ - m;
      // Columns: coefficients of F * e_j for the cofactor basis e_j.
      Matrix conv(r_ + 1, gdeg + 1);
      for (std::size_t j = 0; j <= gdeg; ++j)
        for (std::size_t i = 0; i < f.size(); ++i) conv(i + j, j) = f[i];
      for (const auto& g : quadsig::kernel_basis(h_ * conv))
        if (offer(multiply_forms(f, g))) return true;
      // Next combination in lexicographic order.
      std::size_t k = m;
      while (k > 0 && idx[k - 1] == pool.size() - m + k - 1) --k;
      if (k == 0) return false;
      ++idx[k - 1];
      for (std::size_t i = k; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
  }

  bool quadratic_families() {
    auto grid = rational_grid(cfg_.denom_bound);
    for (const auto& fam : families_for(r_)) {
      for (const auto& u : grid) {
        if (!quadratic_splits(fam.quads[0], u)) continue;
        if (fam.quads.size() == 1) {
          auto m = solve_family_member(p_, fam, u);
          if (m && offer(m->coeffs)) return true;
          continue;
        }
        auto m = solve_family_member(p_, fam, u, 0);
        if (!m) continue;
        FormCoeffs base = multiply_forms(fam.prefix, quadratic(fam.quads[0], u));
        FormCoeffs a = multiply_forms(base, quadratic(fam.quads[1], 0));
        FormCoeffs b = axpy(multiply_forms(base, quadratic(fam.quads[1], 1)), -1, a);
        if (solve_affine(h_, a, b)->has_value()) {
          if (quadratic_splits(fam.quads[1], m->v) && offer(m->coeffs)) return true;
        } else {
          // The whole line lies in the kernel: walk v over the grid too.
          for (const auto& v : grid)
            if (quadratic_splits(fam.quads[1], v) && offer(axpy(a, v, b))) return true;
        }
      }
    }
    return false;
  }

  // Integer combinations of the kernel basis by increasing max-norm.
  bool integer_grid() {
    const std::size_t k = basis_.size();
    for (long n = 1; n <= static_cast<long>(cfg_.denom_bound); ++n) {
      std::vector<long> coef(k, -n);
      while (true) {
        long norm = 0;
        for (long x : coef) norm = std::max(norm, std::labs(x));
        if (norm == n && first_nonzero_positive(coef)) {
          FormCoeffs c(r_ + 1);
          for (std::size_t i = 0; i < k; ++i) c = axpy(c, Rational(coef[i]), basis_[i]);
          if (offer(c)) return true;
        }
        std::size_t i = 0;
        while (i < k && coef[i] == n) coef[i++] = -n;
        if (i == k) break;
        ++coef[i];
      }
    }
    return false;
  }

  static bool first_nonzero_positive(const std::vector<long>& v) {
    for (long x : v)
      if (x != 0) return x > 0;
    return false;
  }

  bool random_combinations() {
    std::mt19937_64 rng(cfg_.seed ^ (0x9e3779b97f4a7c15ULL * (r_ + 1)));
    const long n = static_cast<long>(std::max(1u, cfg_.denom_bound)) * 4;
    std::uniform_int_distribution<long> dist(-n, n);
    while (!exhausted()) {
      FormCoeffs c(r_ + 1);
      for (const auto& b : basis_) c = axpy(c, Rational(dist(rng)), b);
      if (offer(c)) return true;
    }
    return false;
  }

  const BinaryForm& p_;
  unsigned r_;
  SearchConfig cfg_;
  Matrix h_;
  std::vector<FormCoeffs> basis_;
  unsigned used_ = 0;
  bool stopped_ = false;
  const Visitor* visit_ = nullptr;
  std::set<FormCoeffs> seen_;
};

/// What was established at one degree r.
enum class DegreeOutcome { BelowBound, Absent, Found, Inconclusive };

inline std::string to_string(DegreeOutcome o) {
  switch (o) {
    case DegreeOutcome::BelowBound: return "below-bound";
    case DegreeOutcome::Absent: return "absent";
    case DegreeOutcome::Found: return "found";
    default: return "inconclusive";
  }
}

struct DegreeRecord {
  unsigned r = 0;
  unsigned kernel_dim = 0;
  DegreeOutcome outcome = DegreeOutcome::Inconclusive;
  unsigned candidates = 0;
};

struct LengthResult {
  unsigned lower = 0, upper = 0;
  bool conclusive = false;
  std::optional<DecompResult> decomposition;  // witness and its representation
  std::vector<DegreeRecord> degrees;
};

/// Largest rank of a Hankel matrix of p; every representation has at least
/// this many terms.
inline unsigned hankel_rank_bound(const BinaryForm& p) {
  const unsigned d = p.degree();
  return quadsig::rank(quadsig::hankel(p, (d + 1) / 2).matrix());
}

/// Real length by Sylvester's criterion: the length is the least r whose
/// Hankel kernel contains a product of r distinct real linear factors.
/// Existence at r implies existence at r + 1 (multiply by a new factor), so
/// every proven absence at r lifts the lower bound to r + 1. `known_lower` adds
/// any lower bound established elsewhere.
inline LengthResult real_length(const BinaryForm& p, const SearchConfig& cfg = {}, unsigned known_lower = 0) {
  if (p.is_zero()) throw ZeroForm("length of the zero form");
  const unsigned d = p.degree();
  LengthResult out;
  unsigned bound = std::max(hankel_rank_bound(p), known_lower);
  unsigned proven_absent = 0;
  for (unsigned r = 1; r <= d + 1; ++r) {
    DegreeRecord rec{r, 0, DegreeOutcome::BelowBound, 0};
    if (r < bound) {
      out.degrees.push_back(rec);
      continue;
    }
    CandidateSearch search(p, r, cfg);
    rec.kernel_dim = static_cast<unsigned>(search.basis().size());
    std::optional<SylvesterForm> witness;
    search.run(
        [&](const SylvesterForm& h) {
          witness = h;
          return true;
        },
        true);
    rec.candidates = search.used();
    if (witness) {
      rec.outcome = DegreeOutcome::Found;
      out.degrees.push_back(rec);
      out.decomposition = solve_coefficients(p, *witness, cfg.precision);
      out.upper = static_cast<unsigned>(out.decomposition->rep.size());
      break;
    }
    // Kernels of dimension <= 2 are searched completely.
    if (rec.kernel_dim <= 2 && !search.exhausted()) {
      rec.outcome = DegreeOutcome::Absent;
      proven_absent = r;
    } else {
      rec.outcome = DegreeOutcome::Inconclusive;
    }
    out.degrees.push_back(rec);
  }
  out.lower = std::max(bound, proven_absent + 1);
  if (out.upper == 0) out.upper = d + 1;
  out.lower = std::min(out.lower, out.upper);
  out.conclusive = out.lower == out.upper;
  return out;
}

/// Badges of the representations coming from validated Sylvester forms of
/// degree r (at most cfg.witness_limit of them).
struct BadgeSearchResult {
  std::vector<Badge> badges;              // sorted, distinct
  std::vector<DecompResult> witnesses;    // first witness per badge
  unsigned candidates = 0;
  bool exhausted = false;
};

inline BadgeSearchResult badge_search(const BinaryForm& p, unsigned r, const SearchConfig& cfg = {}) {
  if (r < 1 || r > p.degree() + 1) throw RankOutOfRange("badge_search degree outside 1..d+1");
  BadgeSearchResult out;
  CandidateSearch search(p, r, cfg);
  unsigned found = 0;
  search.run([&](const SylvesterForm& h) {
    DecompResult res = solve_coefficients(p, h, cfg.precision);
    if (std::find(out.badges.begin(), out.badges.end(), res.badge) == out.badges.end()) {
      out.badges.push_back(res.badge);
      out.witnesses.push_back(res);
    }
    return ++found >= cfg.witness_limit;
  });
  std::vector<std::size_t> order(out.badges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.badges[a] < out.badges[b]; });
  BadgeSearchResult sorted;
  for (auto i : order) {
    sorted.badges.push_back(out.badges[i]);
    sorted.witnesses.push_back(out.witnesses[i]);
  }
  sorted.candidates = search.used();
  sorted.exhausted = search.exhausted();
  return sorted;
}

}  // namespace binwaring::decompose
