#include "solvspin/liealg/curvature.hpp"

namespace solvspin::liealg {

using exact::FloatScalar;
using exact::Rational;

template <FieldScalar S>
ConnectionTable<S> levi_civita(const MetricLieAlgebra<S>& m) {
  const std::size_t n = m.dim();
  const auto& l = m.algebra();
  std::vector<Matrix<S>> ad_sym;
  std::vector<Matrix<S>> ad_star;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix<S> a = l.ad(i);
    ad_sym.push_back(symmetric_part(m.signs(), a));
    ad_star.push_back(metric_transpose(m.signs(), a));
  }
  const S half = S(Rational(1, 2));
  ConnectionTable<S> gamma(n);
  // nabla_{e_i} e_j = -ad(e_j)^s e_i - 1/2 ad(e_i)^* e_j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) gamma(i, j, k) = -ad_sym[j](k, i) - half * ad_star[i](k, j);
  return gamma;
}

template <FieldScalar S>
std::vector<std::string> connection_defects(const MetricLieAlgebra<S>& m, const ConnectionTable<S>& gamma) {
  const std::size_t n = m.dim();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        S compat = gamma(i, j, k) * S(m.sign(k)) + gamma(i, k, j) * S(m.sign(j));
        if (!exact::is_zero(compat)) {
          out.push_back("metric compatibility fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        "," + std::to_string(k + 1) + ")");
        }
        S torsion = gamma(i, j, k) - gamma(j, i, k) - m.algebra().c(i, j, k);
        if (!exact::is_zero(torsion)) {
          out.push_back("torsion does not vanish at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                        std::to_string(k + 1) + ")");
        }
      }
    }
  }
  return out;
}

template <FieldScalar S>
CurvatureTensor<S> curvature(const MetricLieAlgebra<S>& m, const ConnectionTable<S>& gamma) {
  const std::size_t n = m.dim();
  std::vector<Matrix<S>> nab;
  for (std::size_t i = 0; i < n; ++i) nab.push_back(gamma.nabla(i));
  CurvatureTensor<S> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix<S> rij = commutator(nab[i], nab[j]);
      for (std::size_t l = 0; l < n; ++l) {
        const S& c = m.algebra().c(i, j, l);
        if (!exact::is_zero(c)) rij.add_scaled(-c, nab[l]);
      }
      r(j, i) = -rij;
      r(i, j) = std::move(rij);
    }
  }
  return r;
}

template <FieldScalar S>
RicciData<S> ricci(const MetricLieAlgebra<S>& m, const CurvatureTensor<S>& r) {
  const std::size_t n = m.dim();
  RicciData<S> out{Matrix<S>(n, n), Matrix<S>(n, n), S{}};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      S acc{};
      for (std::size_t i = 0; i < n; ++i) acc += r(i, j)(i, k);
      out.ric(j, k) = std::move(acc);
    }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) out.ricci_op(j, k) = m.sign(j) > 0 ? out.ric(j, k) : -out.ric(j, k);
    out.scalar += out.ricci_op(j, j);
  }
  return out;
}

template <FieldScalar S>
std::optional<S> einstein_check(const MetricLieAlgebra<S>& m, const RicciData<S>& ric) {
  S lambda = m.sign(0) > 0 ? ric.ric(0, 0) : -ric.ric(0, 0);
  if (ric.ric == m.gram() * lambda) return lambda;
  return std::nullopt;
}

#define SOLVSPIN_INSTANTIATE(S)                                                                           \
  template ConnectionTable<S> levi_civita(const MetricLieAlgebra<S>&);                                     \
  template std::vector<std::string> connection_defects(const MetricLieAlgebra<S>&, const ConnectionTable<S>&); \
  template CurvatureTensor<S> curvature(const MetricLieAlgebra<S>&, const ConnectionTable<S>&);            \
  template RicciData<S> ricci(const MetricLieAlgebra<S>&, const CurvatureTensor<S>&);                      \
  template std::optional<S> einstein_check(const MetricLieAlgebra<S>&, const RicciData<S>&);

SOLVSPIN_INSTANTIATE(Rational)
SOLVSPIN_INSTANTIATE(FloatScalar)
SOLVSPIN_INSTANTIATE(exact::TowerScalar)

}  // namespace solvspin::liealg
