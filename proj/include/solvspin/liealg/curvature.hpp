#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvspin/liealg/lie_algebra.hpp"

namespace solvspin::liealg {

/// Levi-Civita coefficients: nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
template <FieldScalar S>
class ConnectionTable {
 public:
  explicit ConnectionTable(std::size_t dim) : n_(dim), g_(dim * dim * dim) {}

  std::size_t dim() const { return n_; }
  const S& operator()(std::size_t i, std::size_t j, std::size_t k) const { return g_[(i * n_ + j) * n_ + k]; }
  S& operator()(std::size_t i, std::size_t j, std::size_t k) { return g_[(i * n_ + j) * n_ + k]; }

  /// The endomorphism nabla_{e_i}; column j is nabla_{e_i} e_j.
  Matrix<S> nabla(std::size_t i) const {
    Matrix<S> m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) m(k, j) = (*this)(i, j, k);
    return m;
  }

  Matrix<S> nabla(const Vector<S>& x) const {
    Matrix<S> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!exact::is_zero(x[i])) m.add_scaled(x[i], nabla(i));
    return m;
  }

 private:
  std::size_t n_;
  std::vector<S> g_;
};

/// R(e_i, e_j) as endomorphisms: column k is R(e_i, e_j) e_k, with
/// R(x,y) = [nabla_x, nabla_y] - nabla_[x,y].
template <FieldScalar S>
class CurvatureTensor {
 public:
  explicit CurvatureTensor(std::size_t dim) : n_(dim), r_(dim * dim, Matrix<S>(dim, dim)) {}

  std::size_t dim() const { return n_; }
  const Matrix<S>& operator()(std::size_t i, std::size_t j) const { return r_[i * n_ + j]; }
  Matrix<S>& operator()(std::size_t i, std::size_t j) { return r_[i * n_ + j]; }

  /// R(x, y) for arbitrary vectors.
  Matrix<S> endomorphism(const Vector<S>& x, const Vector<S>& y) const {
    Matrix<S> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (exact::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!exact::is_zero(y[j])) m.add_scaled(x[i] * y[j], (*this)(i, j));
    }
    return m;
  }

 private:
  std::size_t n_;
  std::vector<Matrix<S>> r_;
};

template <FieldScalar S>
struct RicciData {
  Matrix<S> ric;       ///< ric(e_i, e_j)
  Matrix<S> ricci_op;  ///< Ric, with g(Ric v, w) = ric(v, w)
  S scalar;            ///< sum_i eps_i ric(e_i, e_i)
};

/// nabla_w v = -ad(v)^s w - 1/2 ad(w)^* v on left-invariant fields.
template <FieldScalar S>
ConnectionTable<S> levi_civita(const MetricLieAlgebra<S>& m);

/// Human-readable failures of metric compatibility or torsion-freeness.
template <FieldScalar S>
std::vector<std::string> connection_defects(const MetricLieAlgebra<S>& m, const ConnectionTable<S>& gamma);

template <FieldScalar S>
CurvatureTensor<S> curvature(const MetricLieAlgebra<S>& m, const ConnectionTable<S>& gamma);

/// ric(y, z) = Tr(x -> R(x, y) z).
template <FieldScalar S>
RicciData<S> ricci(const MetricLieAlgebra<S>& m, const CurvatureTensor<S>& r);

/// Full pipeline: Levi-Civita, curvature, trace.
template <FieldScalar S>
RicciData<S> ricci(const MetricLieAlgebra<S>& m) {
  return ricci(m, curvature(m, levi_civita(m)));
}

/// lambda with ric = lambda g, if any.
template <FieldScalar S>
std::optional<S> einstein_check(const MetricLieAlgebra<S>& m, const RicciData<S>& ric);

template <FieldScalar S>
std::optional<S> einstein_check(const MetricLieAlgebra<S>& m) {
  return einstein_check(m, ricci(m));
}

}  // namespace solvspin::liealg
