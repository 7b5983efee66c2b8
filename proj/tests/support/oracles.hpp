#pragma once

#include <optional>
#include <span>

#include "solvspin/exact/linear_solve.hpp"
#include "solvspin/liealg/curvature.hpp"
#include "solvspin/liealg/lie_algebra.hpp"

namespace solvspin::testing {

using exact::Rational;

/// Gamma(i,j,k) from g(nabla_i e_j, e_k) = 1/2 (g([ei,ej],ek) - g([ej,ek],ei) + g([ek,ei],ej)).
inline std::vector<Rational> koszul_oracle(const liealg::MetricLieAlgebra<Rational>& m) {
  const std::size_t n = m.dim();
  const auto& l = m.algebra();
  std::vector<Rational> g(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational lower = (l.c(i, j, k) * m.sign(k) - l.c(j, k, i) * m.sign(i) + l.c(k, i, j) * m.sign(j)) / 2;
        g[(i * n + j) * n + k] = lower * m.sign(k);
      }
  return g;
}

/// R[((i*n + j)*n + k)*n + l] = component l of R(e_i,e_j)e_k, from Gamma by explicit sums.
inline std::vector<Rational> curvature_oracle(const liealg::MetricLieAlgebra<Rational>& m,
                                              const std::vector<Rational>& gamma) {
  const std::size_t n = m.dim();
  const auto& l = m.algebra();
  auto G = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return gamma[(i * n + j) * n + k]; };
  std::vector<Rational> r(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t q = 0; q < n; ++q) {
          Rational acc;
          for (std::size_t p = 0; p < n; ++p) {
            acc += G(j, k, p) * G(i, p, q);
            acc -= G(i, k, p) * G(j, p, q);
            acc -= l.c(i, j, p) * G(p, k, q);
          }
          r[((i * n + j) * n + k) * n + q] = acc;
        }
  return r;
}

/// ric(j,k) = trace of x -> R(x, e_j) e_k.
inline std::vector<Rational> ricci_oracle(const liealg::MetricLieAlgebra<Rational>& m, const std::vector<Rational>& r) {
  const std::size_t n = m.dim();
  std::vector<Rational> ric(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) ric[j * n + k] += r[((i * n + j) * n + k) * n + i];
  return ric;
}

/// Independent linear solve over (D entries, lambda): D is a derivation and D + lambda I = Ric.
inline std::optional<std::pair<Rational, exact::Matrix<Rational>>> nilsoliton_oracle(
    const liealg::MetricLieAlgebra<Rational>& m) {
  const std::size_t n = m.dim();
  const auto& l = m.algebra();
  const auto ric = liealg::ricci(m).ricci_op;
  const std::size_t vars = n * n + 1;
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(vars);
        for (std::size_t p = 0; p < n; ++p) {
          row[var(k, p)] += l.c(i, j, p);
          row[var(p, i)] -= l.c(p, j, k);
          row[var(p, j)] -= l.c(i, p, k);
        }
        rows.push_back(row);
        rhs.emplace_back(0);
      }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Rational> row(vars);
      row[var(r, c)] = 1;
      if (r == c) row[n * n] = 1;
      rows.push_back(row);
      rhs.push_back(ric(r, c));
    }
  exact::Matrix<Rational> a(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < vars; ++c) a(r, c) = rows[r][c];
  auto x = exact::solve(a, std::span<const Rational>(rhs));
  if (!x) return std::nullopt;
  exact::Matrix<Rational> d(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) d(r, c) = (*x)[var(r, c)];
  return std::make_pair((*x)[n * n], d);
}

}  // namespace solvspin::testing
