#pragma once

#include "logder/ratfunc.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace logder {

/// Dense row-major matrix over a commutative ring (Poly or RatFunc here).
/// Determinants are supported up to 3x3 by cofactor expansion, which is all
/// the construction ever needs.
template <typename Ring>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Ring()) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: empty dimension");
  }

  Matrix(std::initializer_list<std::initializer_list<Ring>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw std::invalid_argument("Matrix: empty dimension");
    cols_ = rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (const auto& v : r) entries_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Ring(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Ring& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Ring& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      if (!(a.entries_[i] == b.entries_[i])) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Ring& aik = a.at(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: dimension mismatch in sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
  }

  Matrix scaled(const Ring& c) const {
    Matrix out = *this;
    for (auto& v : out.entries_) v = v * c;
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  template <typename F>
  auto map(F&& f) const {
    using Out = decltype(f(std::declval<const Ring&>()));
    Matrix<Out> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = f(at(i, j));
    return out;
  }

  /// Cofactor-expansion determinant, sizes 1..3.
  Ring det() const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix::det: non-square matrix");
    switch (rows_) {
      case 1:
        return at(0, 0);
      case 2:
        return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
      case 3:
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
      default:
        throw std::invalid_argument("Matrix::det: only sizes up to 3x3 are supported");
    }
  }

 private:
  template <typename>
  friend class Matrix;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Ring> entries_;
};

using PolyMatrix = Matrix<Poly>;
using RatMatrix = Matrix<RatFunc>;

inline RatMatrix to_rat(const PolyMatrix& m) {
  return m.map([](const Poly& p) { return RatFunc(p); });
}

/// Entrywise polynomial values; nullopt if any entry is not polynomial.
inline std::optional<PolyMatrix> to_poly(const RatMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto p = m.at(i, j).to_poly();
      if (!p) return std::nullopt;
      out.at(i, j) = std::move(*p);
    }
  return out;
}

/// Adjugate-over-determinant inverse of a 2x2 matrix.
inline RatMatrix inverse2(const RatMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("inverse2: matrix must be 2x2");
  const RatFunc d = m.det();
  if (d.is_zero()) throw std::invalid_argument("inverse2: singular matrix");
  RatMatrix out(2, 2);
  out.at(0, 0) = m.at(1, 1) / d;
  out.at(0, 1) = -m.at(0, 1) / d;
  out.at(1, 0) = -m.at(1, 0) / d;
  out.at(1, 1) = m.at(0, 0) / d;
  return out;
}

inline RatMatrix inverse2(const PolyMatrix& m) { return inverse2(to_rat(m)); }

/// Entrywise substitution of the coordinates.
inline PolyMatrix substitute(const PolyMatrix& m, const std::array<Poly, kNumVars>& images) {
  return m.map([&](const Poly& p) { return substitute(p, images); });
}

inline PolyMatrix at_z0(const PolyMatrix& m) {
  return m.map([](const Poly& p) { return at_z0(p); });
}

}  // namespace logder
