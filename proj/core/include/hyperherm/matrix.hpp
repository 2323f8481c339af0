#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hyperherm/errors.hpp"
#include "hyperherm/scalar.hpp"

namespace hyperherm {

/// Dense square matrix. Used for endomorphisms (column j holds the image of
/// basis vector j) and for Gram matrices of bilinear forms.
template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(Rational(1));
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) throw DimensionError("Matrix::from_rows: matrix is not square");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = S(Rational(v));
      ++i;
    }
    return m;
  }

  [[nodiscard]] std::size_t size() const { return n_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] std::vector<S> column(std::size_t j) const {
    std::vector<S> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  [[nodiscard]] std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != n_) throw DimensionError("Matrix::apply: vector length mismatch");
    std::vector<S> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  [[nodiscard]] bool is_symmetric() const { return *this == transpose(); }
  [[nodiscard]] bool is_skew() const { return *this == -transpose(); }

  Matrix& operator+=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    check_same(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x = x * s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    Matrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_same(const Matrix& other) const {
    if (other.n_ != n_) throw DimensionError("Matrix: size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<S> data_;
};

template <Scalar T, Scalar S>
Matrix<T> lift_matrix(const Matrix<S>& m) {
  Matrix<T> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = T(m(i, j));
  return out;
}

/// Exact inverse by Gauss-Jordan elimination. Throws PreconditionError if singular.
Matrix<Rational> inverse(const Matrix<Rational>& m);

}  // namespace hyperherm
