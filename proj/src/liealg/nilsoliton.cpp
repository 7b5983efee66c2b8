#include "solvspin/liealg/nilsoliton.hpp"

namespace solvspin::liealg {

using exact::FloatScalar;
using exact::Rational;

template <FieldScalar S>
std::optional<Nilsoliton<S>> nilsoliton_solve(const MetricLieAlgebra<S>& m) {
  const auto& l = m.algebra();
  const std::size_t n = m.dim();
  if (!lower_central_series(l).nilpotent) throw std::invalid_argument("nilsoliton requires a nilpotent algebra");
  if (l.is_abelian()) return Nilsoliton<S>{S{}, Matrix<S>(n, n)};

  const Matrix<S> ric = ricci(m).ricci_op;
  // residual of Ric - lambda I as a derivation: r0(i,j) + lambda c(i,j)
  std::vector<std::pair<S, S>> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<S> cij = l.bracket(i, j);
      Vector<S> lhs = ric.apply(cij);
      Vector<S> a = l.bracket(ric.column(i), [&] {
        Vector<S> e(n);
        e[j] = S(1);
        return e;
      }());
      Vector<S> b = l.bracket(
          [&] {
            Vector<S> e(n);
            e[i] = S(1);
            return e;
          }(),
          ric.column(j));
      for (std::size_t k = 0; k < n; ++k) eqs.emplace_back(lhs[k] - a[k] - b[k], cij[k]);
    }
  }
  std::optional<S> lambda;
  for (const auto& [r0, coef] : eqs) {
    if (!exact::is_zero(coef)) {
      lambda = -r0 / coef;
      break;
    }
  }
  if (!lambda) return std::nullopt;
  for (const auto& [r0, coef] : eqs)
    if (!exact::is_zero(r0 + *lambda * coef)) return std::nullopt;
  Matrix<S> d = ric - Matrix<S>::identity(n) * *lambda;
  return Nilsoliton<S>{*lambda, std::move(d)};
}

template <FieldScalar S>
std::pair<MetricLieAlgebra<S>, StandardDecomposition<S>> extend_by_derivation(const MetricLieAlgebra<S>& m,
                                                                               const Matrix<S>& d, int eps0) {
  const std::size_t n = m.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("derivation has the wrong size");
  if (eps0 != 1 && eps0 != -1) throw std::invalid_argument("metric signs must be +1 or -1");
  if (!is_derivation(m.algebra(), d)) throw std::invalid_argument("D is not a derivation");
  if (!is_metric_symmetric(m.signs(), d)) throw std::invalid_argument("D is not symmetric");
  LieAlgebra<S> ext(n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const S& v = m.algebra().c(i, j, k);
        if (!exact::is_zero(v)) ext.set_bracket(i + 1, j + 1, k + 1, v);
      }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!exact::is_zero(d(k, j))) ext.set_bracket(0, j + 1, k + 1, -d(k, j));
  std::vector<int> signs{eps0};
  signs.insert(signs.end(), m.signs().begin(), m.signs().end());
  MetricLieAlgebra<S> out(std::move(ext), std::move(signs));
  auto dec = make_decomposition(out, {0});
  return {std::move(out), std::move(dec)};
}

EinsteinExtension einstein_extension(const MetricLieAlgebra<Rational>& m, std::optional<int> eps0) {
  auto sol = nilsoliton_solve(m);
  if (!sol) throw std::invalid_argument("no nilsoliton derivation exists");
  const Rational tr = sol->derivation.trace();
  if (tr.is_zero()) throw std::invalid_argument("nilsoliton derivation is traceless");
  const int e0 = eps0.value_or(tr.sign());
  if (e0 != 1 && e0 != -1) throw std::invalid_argument("eps0 must be +1 or -1");
  if (e0 != tr.sign()) throw std::invalid_argument("eps0 must have the sign of Tr D");
  const Rational c2 = Rational(e0) / tr;
  if (!exact::is_rational_square(c2)) {
    throw std::invalid_argument("scale sqrt(" + c2.to_string() + ") is not rational");
  }
  const Rational c = exact::rational_sqrt(c2);
  auto [alg, dec] = extend_by_derivation(m, sol->derivation * c, e0);
  auto lam = einstein_check(alg);
  return EinsteinExtension{std::move(alg), std::move(dec), std::move(*sol), c, e0, lam};
}

#define SOLVSPIN_INSTANTIATE(S)                                                                   \
  template std::optional<Nilsoliton<S>> nilsoliton_solve(const MetricLieAlgebra<S>&);             \
  template std::pair<MetricLieAlgebra<S>, StandardDecomposition<S>> extend_by_derivation(          \
      const MetricLieAlgebra<S>&, const Matrix<S>&, int);

SOLVSPIN_INSTANTIATE(Rational)
SOLVSPIN_INSTANTIATE(FloatScalar)

}  // namespace solvspin::liealg
