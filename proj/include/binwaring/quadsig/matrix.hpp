#pragma once

#include <binwaring/common/errors.hpp>
#include <binwaring/common/rational.hpp>
#include <binwaring/polyform/binary_form.hpp>

#include <string>
#include <utility>
#include <vector>

namespace binwaring::quadsig {

using polyform::BinaryForm;

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  explicit Matrix(const std::vector<std::vector<Rational>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
      e_.insert(e_.end(), r.begin(), r.end());
      for (auto it = e_.end() - static_cast<std::ptrdiff_t>(cols_); it != e_.end(); ++it) it->canonicalize();
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<std::vector<Rational>> to_rows() const {
    std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes do not match");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

/// Square symmetric rational matrix.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("symmetric matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = i + 1; j < m_.cols(); ++j)
        if (m_(i, j) != m_(j, i)) throw InvalidArgument("matrix is not symmetric");
  }
  explicit SymMatrix(const std::vector<std::vector<Rational>>& rows) : SymMatrix(Matrix(rows)) {}

  std::size_t n() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  /// C^T M C.
  SymMatrix congruent(const Matrix& c) const { return SymMatrix(c.transposed() * m_ * c); }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

/// The (d-r+1) x (r+1) matrix with entry (i, j) = a_{i+j} of a source form.
class HankelMatrix {
 public:
  HankelMatrix(const BinaryForm& p, unsigned r) : d_(p.degree()), r_(r), a_(p.coeffs()) {
    if (r < 1 || r > d_) throw RankOutOfRange("Hankel degree r = " + std::to_string(r) + " outside 1.." + std::to_string(d_));
  }

  std::size_t rows() const { return d_ - r_ + 1; }
  std::size_t cols() const { return r_ + 1; }
  unsigned r() const { return r_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i + j]; }

  Matrix matrix() const {
    Matrix m(rows(), cols());
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) m(i, j) = a_[i + j];
    return m;
  }

 private:
  unsigned d_, r_;
  std::vector<Rational> a_;
};

inline SymMatrix catalecticant(const BinaryForm& p) {
  if (p.degree() % 2 != 0) throw OddDegree("catalecticant needs an even degree, got " + std::to_string(p.degree()));
  return SymMatrix(HankelMatrix(p, p.degree() / 2).matrix());
}

inline HankelMatrix hankel(const BinaryForm& p, unsigned r) { return HankelMatrix(p, r); }

/// H_p(t) = sum_{i,j} a_{i+j} t_i t_j.
inline Rational catalecticant_value(const BinaryForm& p, const std::vector<Rational>& t) {
  if (p.degree() % 2 != 0) throw OddDegree("catalecticant needs an even degree");
  const unsigned s = p.degree() / 2;
  if (t.size() != s + 1)
    throw DimensionMismatch("expected " + std::to_string(s + 1) + " entries, got " + std::to_string(t.size()));
  Rational acc = 0;
  for (unsigned i = 0; i <= s; ++i)
    for (unsigned j = 0; j <= s; ++j) acc += p.a(i + j) * t[i] * t[j];
  return acc;
}

/// Determinant by Gaussian elimination over Q.
inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

}  // namespace binwaring::quadsig
