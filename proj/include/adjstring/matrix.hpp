#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "adjstring/rational.hpp"

namespace adjstring {

/// Dense matrix over exact rationals. Sizes here are small (degreewise pieces
/// of graded modules), so the implementation favours clarity and exactness:
/// plain Gaussian elimination with first-nonzero pivoting, no thresholds.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static QMat identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  QMat operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMat: shape mismatch in product");
    QMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rat& b = o(k, j);
          if (b != 0) r(i, j) += a * b;
        }
      }
    return r;
  }

  QMat operator+(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("QMat: shape mismatch in sum");
    QMat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  QMat operator-(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("QMat: shape mismatch in difference");
    QMat r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  QMat scaled(const Rat& c) const {
    QMat r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  QMat transposed() const {
    QMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMat: vector length mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
  }

  void set_row(std::size_t i, const std::vector<Rat>& v) {
    assert(v.size() == cols_);
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  std::vector<Rat> row(std::size_t i) const {
    std::vector<Rat> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  std::vector<Rat> col(std::size_t j) const {
    std::vector<Rat> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_col(std::size_t j, const std::vector<Rat>& v) {
    assert(v.size() == rows_);
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == 0) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Rat inv = Rat(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        Rat f = (*this)(i, c);
        if (f == 0) continue;
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    QMat m = *this;
    return m.rref().size();
  }

  /// Basis of the null space {x : Ax = 0}, one column per basis vector.
  QMat kernel_basis() const {
    QMat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    QMat ker(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      std::size_t fc = free_cols[k];
      ker(fc, k) = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) ker(pivots[r], k) = -m(r, fc);
    }
    return ker;
  }

  /// Solves Ax = b exactly; nullopt when inconsistent.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("QMat::solve: length mismatch");
    QMat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rat> x(cols_, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
  }

  /// Columnwise solve AX = B; nullopt when any column is inconsistent.
  std::optional<QMat> solve_matrix(const QMat& B) const {
    if (B.rows() != rows_) throw std::invalid_argument("QMat::solve_matrix: shape mismatch");
    QMat aug(rows_, cols_ + B.cols());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < B.cols(); ++j) aug(i, cols_ + j) = B(i, j);
    }
    QMat red = aug;
    auto pivots = red.rref();
    for (auto p : pivots)
      if (p >= cols_) return std::nullopt;
    QMat X(cols_, B.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t j = 0; j < B.cols(); ++j) X(pivots[r], j) = red(r, cols_ + j);
    return X;
  }

  Rat determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("QMat::determinant: not square");
    QMat m = *this;
    Rat det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c) == 0) ++p;
      if (p == rows_) return Rat(0);
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      Rat inv = Rat(1) / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        Rat f = m(i, c) * inv;
        if (f == 0) continue;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  std::optional<QMat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    auto X = solve_matrix(identity(rows_));
    if (!X) return std::nullopt;
    if (!((*this) * (*X)).is_identity()) return std::nullopt;
    return X;
  }

  /// Horizontal concatenation [A | B].
  static QMat hcat(const QMat& A, const QMat& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("QMat::hcat: row mismatch");
    QMat r(A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
      for (std::size_t j = 0; j < A.cols(); ++j) r(i, j) = A(i, j);
      for (std::size_t j = 0; j < B.cols(); ++j) r(i, A.cols() + j) = B(i, j);
    }
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// Row-accumulating homogeneous linear system; unknowns are indexed 0..n-1.
/// Used for intertwiner and module-map solves throughout the library.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }

  void add_row(const std::vector<Rat>& coeffs) {
    assert(coeffs.size() == unknowns_);
    rows_.push_back(coeffs);
  }

  /// Basis of the solution space, one column per basis vector.
  QMat solution_basis() const {
    if (rows_.empty()) return QMat::identity(unknowns_);
    QMat A(rows_.size(), unknowns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) A.set_row(i, rows_[i]);
    return A.kernel_basis();
  }

 private:
  std::size_t unknowns_;
  std::vector<std::vector<Rat>> rows_;
};

/// Projection/section pair for a quotient V -> V/U presented on a chosen
/// basis. `proj` maps ambient coordinates to quotient coordinates, `sect`
/// picks representatives; proj * sect = id on the quotient.
struct QuotientSpace {
  QMat proj;
  QMat sect;
  std::size_t dim() const { return proj.rows(); }
};

/// Quotient of Q^n by the span of the given vectors (one per column).
inline QuotientSpace quotient_by_span(std::size_t n, const QMat& span_cols) {
  QMat m = span_cols.transposed();  // rows = relation vectors in Q^n
  auto pivots = m.rref();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) kept.push_back(c);
  QuotientSpace q;
  q.proj = QMat(kept.size(), n);
  q.sect = QMat(n, kept.size());
  // Representative of e_k for kept k is e_k itself; a pivot column p reduces,
  // via the RREF rows, to minus its tail in the kept coordinates.
  for (std::size_t k = 0; k < kept.size(); ++k) {
    q.proj(k, kept[k]) = 1;
    q.sect(kept[k], k) = 1;
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::size_t p = pivots[r];
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (kept[k] > p) q.proj(k, p) = -m(r, kept[k]);
    }
  }
  return q;
}

}  // namespace adjstring
