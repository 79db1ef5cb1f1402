#pragma once

#include <binwaring/common/rational.hpp>
#include <binwaring/quadsig/matrix.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace binwaring::quadsig {

struct Inertia {
  unsigned pos = 0, neg = 0, null = 0;
  unsigned rank() const { return pos + neg; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
  std::string to_string() const {
    return "(" + std::to_string(pos) + "," + std::to_string(neg) + "," + std::to_string(null) + ")";
  }
};

/// Inertia by symmetric Gaussian congruence over Q. When every remaining
/// diagonal entry is zero but some off-diagonal a_ij is not, t_i <- t_i + t_j
/// puts 2 a_ij on the diagonal.
inline Inertia inertia(const SymMatrix& sym) {
  const std::size_t n = sym.n();
  std::vector<std::vector<Rational>> m = sym.matrix().to_rows();
  std::vector<bool> done(n, false);
  Inertia out;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && m[i][i] != 0) piv = i;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;  // remaining block is zero
      // Row/column operation: row_i += row_j, col_i += col_j.
      for (std::size_t k = 0; k < n; ++k) m[pi][k] += m[pj][k];
      for (std::size_t k = 0; k < n; ++k) m[k][pi] += m[k][pj];
      piv = pi;
    }
    const Rational p = m[piv][piv];
    (p > 0 ? out.pos : out.neg)++;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][piv] == 0) continue;
      Rational f = m[i][piv] / p;
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[piv][k];
      for (std::size_t k = 0; k < n; ++k)
        if (k != piv) m[k][i] = m[i][k];
      m[piv][i] = m[i][piv] = 0;
    }
  }
  out.null = static_cast<unsigned>(n) - out.rank();
  return out;
}

inline bool is_psd(const SymMatrix& m) { return inertia(m).neg == 0; }

/// Membership of p or -p in the cone of sums of 2s-th powers.
enum class ConeMembership { InCone, NegInCone, Neither };

inline std::string to_string(ConeMembership c) {
  switch (c) {
    case ConeMembership::InCone: return "in-cone";
    case ConeMembership::NegInCone: return "neg-in-cone";
    default: return "neither";
  }
}

struct Width {
  unsigned rank = 0;
  ConeMembership cone = ConeMembership::Neither;
};

/// rank(H_p) together with the cone flag (H_p psd, -H_p psd, or neither).
inline Width width(const BinaryForm& p) {
  Inertia in = inertia(catalecticant(p));
  Width w{in.rank(), ConeMembership::Neither};
  if (in.neg == 0)
    w.cone = ConeMembership::InCone;
  else if (in.pos == 0)
    w.cone = ConeMembership::NegInCone;
  return w;
}

/// Integer row-echelon form by fraction-free (Bareiss) elimination, followed
/// by back substitution for a basis of the right kernel. Each basis vector is
/// scaled to coprime integers with its last free coordinate positive.
inline std::vector<std::vector<Rational>> kernel_basis(const Matrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = lcm(l, a(i, j).get_den());
    for (std::size_t j = 0; j < cols; ++j) {
      Rational v = a(i, j) * Rational(l);
      m[i][j] = v.get_num();
    }
  }
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[row], m[sel]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      std::size_t pc = pivots[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (v[j] != 0) acc += Rational(m[k][j]) * v[j];
      v[pc] = -acc / Rational(m[k][pc]);
    }
    Integer l = 1, g = 0;
    for (const auto& q : v) l = lcm(l, q.get_den());
    for (auto& q : v) q *= Rational(l);
    for (const auto& q : v) g = gcd(g, q.get_num());
    for (auto& q : v) q /= Rational(g);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<std::vector<Rational>> kernel_basis(const SymMatrix& m) { return kernel_basis(m.matrix()); }
inline std::vector<std::vector<Rational>> kernel_basis(const HankelMatrix& h) { return kernel_basis(h.matrix()); }

inline unsigned rank(const Matrix& a) { return static_cast<unsigned>(a.cols() - kernel_basis(a).size()); }

}  // namespace binwaring::quadsig
