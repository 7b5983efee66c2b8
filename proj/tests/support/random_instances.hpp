#pragma once

#include <algorithm>
#include <numeric>

#include "solvspin/exact/linear_solve.hpp"
#include "solvspin/liealg/decomposition.hpp"
#include "support/random_scalars.hpp"

namespace solvspin::testing {

using exact::Rational;
using liealg::LieAlgebra;
using liealg::MetricLieAlgebra;
using liealg::StandardDecomposition;
using Mat = exact::Matrix<Rational>;

struct PseudoIwasawaInstance {
  MetricLieAlgebra<Rational> algebra;
  StandardDecomposition<Rational> decomposition;
};

inline int random_sign(Rng& rng) { return uniform_int(rng, 0, 1) ? 1 : -1; }

/// Strictly upper triangular brackets in {-2..2}: nilpotent by construction.
/// Non-Jacobi draws are rejected.
inline LieAlgebra<Rational> random_nilpotent(Rng& rng, std::size_t n) {
  for (;;) {
    LieAlgebra<Rational> l(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (uniform_int(rng, 0, 2) == 0) l.set_bracket(i, j, k, Rational(uniform_int(rng, -2, 2)));
    if (liealg::jacobi_check(l).empty()) return l;
  }
}

/// Metric-symmetric derivations of (l, signs) commuting with every matrix in
/// `commute_with`, as a kernel basis.
inline std::vector<Mat> symmetric_derivations(const LieAlgebra<Rational>& l, const std::vector<int>& signs,
                                              const std::vector<Mat>& commute_with) {
  const std::size_t n = l.dim();
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  exact::EchelonForm<Rational> e(n * n);
  // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j], component k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n);
        for (std::size_t m = 0; m < n; ++m) {
          row[var(k, m)] += l.c(i, j, m);
          row[var(m, i)] -= l.c(m, j, k);
          row[var(m, j)] -= l.c(i, m, k);
        }
        e.add_row(row);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(n * n);
      row[var(i, j)] += Rational(1);
      row[var(j, i)] -= Rational(signs[i] * signs[j]);
      e.add_row(row);
    }
  for (const auto& p : commute_with)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<Rational> row(n * n);
        for (std::size_t m = 0; m < n; ++m) {
          row[var(m, b)] += p(a, m);
          row[var(a, m)] -= p(m, b);
        }
        e.add_row(row);
      }
  std::vector<Mat> out;
  for (const auto& v : e.kernel_basis()) {
    Mat d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v[var(r, c)];
    out.push_back(std::move(d));
  }
  return out;
}

inline Mat random_combination(Rng& rng, const std::vector<Mat>& basis, std::size_t n) {
  Mat d(n, n);
  for (const auto& b : basis) d.add_scaled(Rational(uniform_int(rng, -2, 2)), b);
  return d;
}

/// g of dimension 1..5 and a of dimension 1..2 placed at random frame
/// positions, with random signs and nonzero commuting symmetric derivations
/// when any exist.
inline PseudoIwasawaInstance random_pseudo_iwasawa(Rng& rng, std::size_t max_nil = 5, std::size_t max_abelian = 2) {
  const std::size_t ng = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_nil)));
  const std::size_t k = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_abelian)));
  const std::size_t n = ng + k;
  LieAlgebra<Rational> g(ng);
  std::vector<int> gsigns;
  std::vector<Mat> phis;
  for (int attempt = 0;; ++attempt) {
    g = random_nilpotent(rng, ng);
    gsigns.clear();
    for (std::size_t i = 0; i < ng; ++i) gsigns.push_back(random_sign(rng));
    phis.clear();
    for (std::size_t a = 0; a < k; ++a) {
      auto basis = symmetric_derivations(g, gsigns, phis);
      phis.push_back(random_combination(rng, basis, ng));
    }
    bool nontrivial = std::any_of(phis.begin(), phis.end(), [](const Mat& p) { return !p.is_zero(); });
    if (nontrivial || attempt > 20) break;
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> nil_pos(perm.begin(), perm.begin() + static_cast<long>(ng));
  std::vector<std::size_t> ab_pos(perm.begin() + static_cast<long>(ng), perm.end());
  std::sort(nil_pos.begin(), nil_pos.end());
  std::sort(ab_pos.begin(), ab_pos.end());

  LieAlgebra<Rational> l(n);
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < ng; ++i) signs[nil_pos[i]] = gsigns[i];
  for (auto a : ab_pos) signs[a] = random_sign(rng);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = i + 1; j < ng; ++j)
      for (std::size_t m = 0; m < ng; ++m)
        if (!g.c(i, j, m).is_zero()) l.set_bracket(nil_pos[i], nil_pos[j], nil_pos[m], g.c(i, j, m));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t j = 0; j < ng; ++j)
      for (std::size_t m = 0; m < ng; ++m)
        if (!phis[a](m, j).is_zero()) l.set_bracket(ab_pos[a], nil_pos[j], nil_pos[m], -phis[a](m, j));
  MetricLieAlgebra<Rational> ml(std::move(l), std::move(signs));
  auto dec = liealg::make_decomposition(ml, ab_pos);
  return {std::move(ml), std::move(dec)};
}

}  // namespace solvspin::testing
