#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "solvspin/exact/scalar.hpp"

namespace solvspin::exact {

template <class S>
using Vector = std::vector<S>;

/// Dense row-major matrix over a field scalar. Products skip zero entries,
/// which keeps the monomial gamma matrices and sparse ad-maps cheap.
template <FieldScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix diagonal(std::span<const S> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector<S> column(std::size_t j) const {
    Vector<S> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vector<S> row(std::size_t i) const {
    return Vector<S>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  S trace() const {
    require_square("trace");
    S t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!exact::is_zero(x)) return false;
    return true;
  }

  Vector<S> apply(std::span<const S> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector<S> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      S acc{};
      for (std::size_t j = 0; j < cols_; ++j) {
        const S& a = (*this)(i, j);
        if (exact::is_zero(a) || exact::is_zero(v[j])) continue;
        acc += a * v[j];
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  /// this += coeff * other, touching only nonzero entries of `other`.
  Matrix& add_scaled(const S& coeff, const Matrix& other) {
    require_same_shape(other);
    if (exact::is_zero(coeff)) return *this;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!exact::is_zero(other.data_[k])) data_[k] += coeff * other.data_[k];
    }
    return *this;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!exact::is_zero(o.data_[k])) data_[k] += o.data_[k];
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!exact::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    }
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) {
      if (!exact::is_zero(x)) x *= s;
    }
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (exact::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (exact::is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_square(const char* what) const {
    if (!is_square()) throw std::invalid_argument(std::string(what) + " of a non-square matrix");
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <FieldScalar S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

/// Entrywise embedding, e.g. Rational -> TowerScalar.
template <FieldScalar To, FieldScalar From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = To(m(i, j));
  return r;
}

template <FieldScalar To, FieldScalar From>
Vector<To> convert(const Vector<From>& v) {
  Vector<To> r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(To(x));
  return r;
}

template <FieldScalar S>
bool is_zero_vector(std::span<const S> v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace solvspin::exact
