#include "solvspin/liealg/decomposition.hpp"

#include <algorithm>

namespace solvspin::liealg {

using exact::FloatScalar;
using exact::Rational;

namespace {

std::string frame(std::size_t i) { return "e" + std::to_string(i + 1); }

}  // namespace

template <FieldScalar S>
StandardDecomposition<S> make_decomposition(const MetricLieAlgebra<S>& m, std::vector<std::size_t> abelian) {
  const std::size_t n = m.dim();
  std::sort(abelian.begin(), abelian.end());
  if (std::adjacent_find(abelian.begin(), abelian.end()) != abelian.end()) {
    throw std::invalid_argument("abelian indices must be distinct");
  }
  std::vector<bool> in_a(n, false);
  for (auto a : abelian) in_a.at(a) = true;
  StandardDecomposition<S> d;
  d.abelian = std::move(abelian);
  for (std::size_t i = 0; i < n; ++i)
    if (!in_a[i]) d.nil.push_back(i);
  for (auto alpha : d.abelian) {
    Matrix<S> phi(d.nil.size(), d.nil.size());
    for (std::size_t b = 0; b < d.nil.size(); ++b)
      for (std::size_t a = 0; a < d.nil.size(); ++a) phi(a, b) = -m.algebra().c(alpha, d.nil[b], d.nil[a]);
    d.phi.push_back(std::move(phi));
  }
  return d;
}

template <FieldScalar S>
StandardReport check_standard(const MetricLieAlgebra<S>& m, const StandardDecomposition<S>& d) {
  const std::size_t n = m.dim();
  const auto& l = m.algebra();
  StandardReport rep;
  std::vector<int> owner(n, 0);
  for (auto i : d.nil) {
    if (i >= n) rep.failures.push_back("nil index out of range");
    else owner[i] += 1;
  }
  for (auto a : d.abelian) {
    if (a >= n) rep.failures.push_back("abelian index out of range");
    else owner[a] += 2;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (owner[i] != 1 && owner[i] != 2) rep.failures.push_back("index sets must partition the frame at " + frame(i));
  if (d.phi.size() != d.abelian.size()) rep.failures.push_back("one phi map is required per abelian index");
  if (!rep.failures.empty()) return rep;

  bool ideal = true;
  for (auto i : d.nil)
    for (std::size_t j = 0; j < n; ++j)
      for (auto k : d.abelian)
        if (!exact::is_zero(l.c(i, j, k))) {
          ideal = false;
          rep.failures.push_back("g is not an ideal: [" + frame(i) + "," + frame(j) + "] has a component along " +
                                 frame(k));
        }
  for (std::size_t x = 0; x < d.abelian.size(); ++x)
    for (std::size_t y = x + 1; y < d.abelian.size(); ++y)
      if (!exact::is_zero_vector<S>(l.bracket(d.abelian[x], d.abelian[y]))) {
        rep.failures.push_back("a is not abelian: [" + frame(d.abelian[x]) + "," + frame(d.abelian[y]) + "] != 0");
      }
  if (ideal && !d.nil.empty()) {
    auto g = subalgebra(m, d.nil);
    if (!lower_central_series(g.algebra()).nilpotent) rep.failures.push_back("g is not nilpotent");
  }
  rep.is_standard = rep.failures.empty();
  if (!rep.is_standard) return rep;

  const auto signs = d.nil_signs(m);
  rep.is_pseudo_iwasawa = true;
  for (std::size_t x = 0; x < d.abelian.size(); ++x) {
    if (!is_metric_symmetric(signs, d.phi[x])) {
      rep.is_pseudo_iwasawa = false;
      rep.failures.push_back("ad " + frame(d.abelian[x]) + " is not symmetric");
    }
  }
  return rep;
}

template <FieldScalar S>
RicciData<S> ricci_standard(const MetricLieAlgebra<S>& m, const StandardDecomposition<S>& d) {
  StandardReport rep = check_standard(m, d);
  if (!rep.is_standard) {
    std::string why = rep.failures.empty() ? "unknown" : rep.failures.front();
    throw NotStandardDecomposition(why);
  }
  const std::size_t n = m.dim();
  const std::size_t ng = d.nil.size();
  const auto gsigns = d.nil_signs(m);
  const S half = S(Rational(1, 2));

  auto g = subalgebra(m, d.nil);
  RicciData<S> base = ricci(g);

  std::vector<Matrix<S>> phi_star;
  std::vector<Matrix<S>> phi_sym;
  std::vector<S> tr;
  for (const auto& phi : d.phi) {
    phi_star.push_back(metric_transpose(gsigns, phi));
    phi_sym.push_back(symmetric_part(gsigns, phi));
    tr.push_back(phi.trace());
  }

  Matrix<S> ric(n, n);
  // g(A e_a, e_b) = eps_b A_{ba}
  for (std::size_t a = 0; a < ng; ++a) {
    for (std::size_t b = 0; b < ng; ++b) {
      S v = base.ric(a, b);
      for (std::size_t x = 0; x < d.abelian.size(); ++x) {
        const S ea = S(m.sign(d.abelian[x]));
        const S eb = S(gsigns[b]);
        Matrix<S> comm = commutator(d.phi[x], phi_star[x]);
        v += half * ea * eb * comm(b, a);
        v -= ea * eb * phi_sym[x](b, a) * tr[x];
      }
      ric(d.nil[a], d.nil[b]) = std::move(v);
    }
  }
  for (std::size_t a = 0; a < ng; ++a) {
    Matrix<S> ad_v = g.algebra().ad(a);
    for (std::size_t x = 0; x < d.abelian.size(); ++x) {
      S v = half * (ad_v * phi_star[x]).trace();
      ric(d.nil[a], d.abelian[x]) = v;
      ric(d.abelian[x], d.nil[a]) = v;
    }
  }
  for (std::size_t x = 0; x < d.abelian.size(); ++x)
    for (std::size_t y = 0; y < d.abelian.size(); ++y)
      ric(d.abelian[x], d.abelian[y]) = -(phi_sym[x] * d.phi[y]).trace();

  RicciData<S> out{ric, Matrix<S>(n, n), S{}};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) out.ricci_op(j, k) = m.sign(j) > 0 ? ric(j, k) : -ric(j, k);
    out.scalar += out.ricci_op(j, j);
  }
  return out;
}

#define SOLVSPIN_INSTANTIATE(S)                                                                           \
  template StandardDecomposition<S> make_decomposition(const MetricLieAlgebra<S>&, std::vector<std::size_t>); \
  template StandardReport check_standard(const MetricLieAlgebra<S>&, const StandardDecomposition<S>&);      \
  template RicciData<S> ricci_standard(const MetricLieAlgebra<S>&, const StandardDecomposition<S>&);

SOLVSPIN_INSTANTIATE(Rational)
SOLVSPIN_INSTANTIATE(FloatScalar)

}  // namespace solvspin::liealg
