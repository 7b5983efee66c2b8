#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "solvspin/exact/linear_solve.hpp"

namespace solvspin::liealg {

using exact::FieldScalar;
using exact::Matrix;
using exact::Vector;

/// Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
/// Antisymmetry holds by construction: set_bracket writes both halves.
template <FieldScalar S>
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim) : n_(dim), c_(dim * dim * dim) {
    if (dim == 0) throw std::invalid_argument("Lie algebra dimension must be positive");
  }

  std::size_t dim() const { return n_; }
  const S& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const S& value) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) {
      if (!exact::is_zero(value)) throw std::invalid_argument("[e_i, e_i] must vanish");
      return;
    }
    at(i, j, k) = value;
    at(j, i, k) = -value;
  }

  Vector<S> bracket(std::size_t i, std::size_t j) const {
    Vector<S> v(n_);
    for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
    return v;
  }

  Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const {
    Vector<S> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (exact::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || exact::is_zero(y[j])) continue;
        S xy = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) {
          const S& ck = c(i, j, k);
          if (!exact::is_zero(ck)) out[k] += xy * ck;
        }
      }
    }
    return out;
  }

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  Matrix<S> ad(std::size_t i) const {
    Matrix<S> m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
    return m;
  }

  Matrix<S> ad(const Vector<S>& v) const {
    Matrix<S> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!exact::is_zero(v[i])) m.add_scaled(v[i], ad(i));
    return m;
  }

  bool is_abelian() const {
    for (const auto& x : c_)
      if (!exact::is_zero(x)) return false;
    return true;
  }

  /// Every structure constant multiplied by `factor` (frame rescaled by `factor`).
  LieAlgebra scaled(const S& factor) const {
    LieAlgebra r(n_);
    for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] = c_[t] * factor;
    return r;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  S& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
  void check_index(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("frame index " + std::to_string(i) + " out of range");
  }

  std::size_t n_;
  std::vector<S> c_;
};

/// Lie algebra with the diagonal metric sum_i eps_i e^i (x) e^i.
template <FieldScalar S>
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra<S> algebra, std::vector<int> signs) : algebra_(std::move(algebra)), signs_(std::move(signs)) {
    if (signs_.size() != algebra_.dim()) throw std::invalid_argument("signature length does not match dimension");
    for (int e : signs_)
      if (e != 1 && e != -1) throw std::invalid_argument("metric signs must be +1 or -1");
  }

  const LieAlgebra<S>& algebra() const { return algebra_; }
  const std::vector<int>& signs() const { return signs_; }
  std::size_t dim() const { return algebra_.dim(); }
  int sign(std::size_t i) const { return signs_[i]; }

  S inner(const Vector<S>& v, const Vector<S>& w) const {
    S acc{};
    for (std::size_t i = 0; i < dim(); ++i) {
      if (exact::is_zero(v[i]) || exact::is_zero(w[i])) continue;
      S t = v[i] * w[i];
      acc += signs_[i] > 0 ? t : -t;
    }
    return acc;
  }

  /// The metric as a diagonal matrix.
  Matrix<S> gram() const {
    Matrix<S> g(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) g(i, i) = S(signs_[i]);
    return g;
  }

  friend bool operator==(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
    return a.algebra_ == b.algebra_ && a.signs_ == b.signs_;
  }

 private:
  LieAlgebra<S> algebra_;
  std::vector<int> signs_;
};

template <FieldScalar S>
struct JacobiViolation {
  std::size_t i, j, k;
  Vector<S> residual;  ///< [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

/// Triples i < j < k where the Jacobi identity fails; empty iff valid.
template <FieldScalar S>
std::vector<JacobiViolation<S>> jacobi_check(const LieAlgebra<S>& algebra);

struct LowerCentralSeries {
  std::vector<std::size_t> dims;  ///< dim g, dim [g,g], dim [g,[g,g]], ... until 0 or stable
  bool nilpotent = false;
};

template <FieldScalar S>
LowerCentralSeries lower_central_series(const LieAlgebra<S>& algebra);

/// f* with g(f* v, w) = g(v, f w): entries (f*)_{ij} = eps_i eps_j f_{ji}.
template <FieldScalar S>
Matrix<S> metric_transpose(const std::vector<int>& signs, const Matrix<S>& f);

/// (f + f*) / 2
template <FieldScalar S>
Matrix<S> symmetric_part(const std::vector<int>& signs, const Matrix<S>& f);

template <FieldScalar S>
bool is_metric_symmetric(const std::vector<int>& signs, const Matrix<S>& f) {
  return metric_transpose(signs, f) == f;
}

template <FieldScalar S>
bool is_metric_skew(const std::vector<int>& signs, const Matrix<S>& f) {
  return metric_transpose(signs, f) == -f;
}

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
template <FieldScalar S>
bool is_derivation(const LieAlgebra<S>& algebra, const Matrix<S>& d);

/// Subalgebra spanned by the given frame vectors, with their signs. Throws if
/// the span is not closed under the bracket.
template <FieldScalar S>
MetricLieAlgebra<S> subalgebra(const MetricLieAlgebra<S>& m, const std::vector<std::size_t>& indices);

/// Orthonormalizes a Lie algebra given in an arbitrary basis with a symmetric
/// Gram matrix. Gram-Schmidt runs in basis order with no pivoting; it throws on
/// an isotropic pivot and when a norm is not a rational square.
MetricLieAlgebra<exact::Rational> orthonormalize(const LieAlgebra<exact::Rational>& algebra,
                                                 const Matrix<exact::Rational>& gram);

}  // namespace solvspin::liealg
