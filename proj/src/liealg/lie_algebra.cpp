#include "solvspin/liealg/lie_algebra.hpp"

#include <algorithm>

namespace solvspin::liealg {

using exact::FloatScalar;
using exact::Rational;

template <FieldScalar S>
std::vector<JacobiViolation<S>> jacobi_check(const LieAlgebra<S>& l) {
  const std::size_t n = l.dim();
  std::vector<JacobiViolation<S>> bad;
  auto e = [n](std::size_t i) {
    Vector<S> v(n);
    v[i] = S(1);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector<S> r = l.bracket(l.bracket(i, j), e(k));
        Vector<S> r2 = l.bracket(l.bracket(j, k), e(i));
        Vector<S> r3 = l.bracket(l.bracket(k, i), e(j));
        for (std::size_t t = 0; t < n; ++t) r[t] += r2[t] + r3[t];
        if (!exact::is_zero_vector<S>(r)) bad.push_back({i, j, k, std::move(r)});
      }
    }
  }
  return bad;
}

template <FieldScalar S>
LowerCentralSeries lower_central_series(const LieAlgebra<S>& l) {
  const std::size_t n = l.dim();
  LowerCentralSeries out;
  std::vector<Vector<S>> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vector<S> v(n);
    v[i] = S(1);
    basis.push_back(std::move(v));
  }
  out.dims.push_back(n);
  while (true) {
    exact::EchelonForm<S> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vector<S> ei(n);
      ei[i] = S(1);
      for (const auto& b : basis) next.add_row(l.bracket(ei, b));
    }
    std::size_t d = next.rank();
    if (d == out.dims.back()) break;
    out.dims.push_back(d);
    if (d == 0) {
      out.nilpotent = true;
      break;
    }
    basis.clear();
    for (const auto& row : next.rows()) {
      Vector<S> v(n);
      for (const auto& [c, x] : row) v[c] = x;
      basis.push_back(std::move(v));
    }
  }
  return out;
}

template <FieldScalar S>
Matrix<S> metric_transpose(const std::vector<int>& signs, const Matrix<S>& f) {
  const std::size_t n = signs.size();
  if (f.rows() != n || f.cols() != n) throw std::invalid_argument("metric_transpose: shape mismatch");
  Matrix<S> t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = signs[i] * signs[j] > 0 ? f(j, i) : -f(j, i);
  return t;
}

template <FieldScalar S>
Matrix<S> symmetric_part(const std::vector<int>& signs, const Matrix<S>& f) {
  return (f + metric_transpose(signs, f)) * S(Rational(1, 2));
}

template <FieldScalar S>
bool is_derivation(const LieAlgebra<S>& l, const Matrix<S>& d) {
  const std::size_t n = l.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Vector<S> di = d.column(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector<S> dj = d.column(j);
      Vector<S> lhs = d.apply(l.bracket(i, j));
      Vector<S> ei(n);
      ei[i] = S(1);
      Vector<S> ej(n);
      ej[j] = S(1);
      Vector<S> a = l.bracket(di, ej);
      Vector<S> b = l.bracket(ei, dj);
      for (std::size_t k = 0; k < n; ++k)
        if (!(lhs[k] == a[k] + b[k])) return false;
    }
  }
  return true;
}

template <FieldScalar S>
MetricLieAlgebra<S> subalgebra(const MetricLieAlgebra<S>& m, const std::vector<std::size_t>& idx) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> pos(n, static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < idx.size(); ++a) pos.at(idx[a]) = a;
  LieAlgebra<S> sub(idx.size());
  std::vector<int> signs;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    signs.push_back(m.sign(idx[a]));
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        const S& c = m.algebra().c(idx[a], idx[b], k);
        if (exact::is_zero(c)) continue;
        if (pos[k] == static_cast<std::size_t>(-1)) {
          throw std::invalid_argument("span of the selected frame vectors is not a subalgebra");
        }
        sub.set_bracket(a, b, pos[k], c);
      }
    }
  }
  return MetricLieAlgebra<S>(std::move(sub), std::move(signs));
}

MetricLieAlgebra<Rational> orthonormalize(const LieAlgebra<Rational>& l, const Matrix<Rational>& gram) {
  const std::size_t n = l.dim();
  if (gram.rows() != n || gram.cols() != n || !(gram.transpose() == gram)) {
    throw std::invalid_argument("orthonormalize: Gram matrix must be symmetric of matching size");
  }
  auto inner = [&](const Vector<Rational>& v, const Vector<Rational>& w) {
    Vector<Rational> gw = gram.apply(w);
    Rational acc;
    for (std::size_t i = 0; i < n; ++i) acc += v[i] * gw[i];
    return acc;
  };
  // Columns of p are the new frame in old coordinates.
  Matrix<Rational> p(n, n);
  std::vector<int> signs;
  std::vector<Vector<Rational>> done;
  for (std::size_t a = 0; a < n; ++a) {
    Vector<Rational> v(n);
    v[a] = 1;
    for (std::size_t b = 0; b < done.size(); ++b) {
      Rational coeff = inner(v, done[b]) * Rational(signs[b]);
      for (std::size_t i = 0; i < n; ++i) v[i] -= coeff * done[b][i];
    }
    Rational norm = inner(v, v);
    if (norm.is_zero()) {
      throw std::invalid_argument("orthonormalize: isotropic pivot at basis vector " + std::to_string(a + 1));
    }
    Rational mag = norm.abs();
    if (!exact::is_rational_square(mag)) {
      throw std::invalid_argument("orthonormalize: |g(v,v)| = " + mag.to_string() +
                                  " is not a rational square at basis vector " + std::to_string(a + 1));
    }
    Rational s = exact::rational_sqrt(mag);
    for (auto& x : v) x /= s;
    signs.push_back(norm.sign());
    for (std::size_t i = 0; i < n; ++i) p(i, a) = v[i];
    done.push_back(std::move(v));
  }
  // New coordinates of an old vector x: solve p y = x.
  LieAlgebra<Rational> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector<Rational> br = l.bracket(p.column(a), p.column(b));
      auto y = exact::solve(p, std::span<const Rational>(br));
      for (std::size_t k = 0; k < n; ++k) out.set_bracket(a, b, k, (*y)[k]);
    }
  }
  return MetricLieAlgebra<Rational>(std::move(out), std::move(signs));
}

#define SOLVSPIN_INSTANTIATE(S)                                                                  \
  template std::vector<JacobiViolation<S>> jacobi_check(const LieAlgebra<S>&);                   \
  template LowerCentralSeries lower_central_series(const LieAlgebra<S>&);                        \
  template Matrix<S> metric_transpose(const std::vector<int>&, const Matrix<S>&);                \
  template Matrix<S> symmetric_part(const std::vector<int>&, const Matrix<S>&);                  \
  template bool is_derivation(const LieAlgebra<S>&, const Matrix<S>&);                           \
  template MetricLieAlgebra<S> subalgebra(const MetricLieAlgebra<S>&, const std::vector<std::size_t>&);

SOLVSPIN_INSTANTIATE(Rational)
SOLVSPIN_INSTANTIATE(FloatScalar)
SOLVSPIN_INSTANTIATE(exact::TowerScalar)

}  // namespace solvspin::liealg
