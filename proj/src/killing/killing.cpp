#include "solvspin/killing/killing.hpp"

#include "solvspin/liealg/curvature.hpp"

namespace solvspin::killing {

using exact::Matrix;
using exact::Vector;

namespace {

void require_signature(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep) {
  if (m.signs() != rep.signs()) throw std::invalid_argument("representation signature does not match the metric");
}

std::vector<Spinor> joint_kernel(const std::vector<SpinMatrix>& ops, std::size_t spinor_dim) {
  exact::EchelonForm<TowerScalar> e(spinor_dim);
  for (const auto& op : ops)
    for (std::size_t r = 0; r < op.rows(); ++r) {
      e.add_row(op.row(r));
      if (e.rank() == spinor_dim) return {};
    }
  return e.kernel_basis();
}

std::string ratio(const Rational& a) { return a.to_string(); }

}  // namespace

std::vector<LambdaCandidate> lambda_candidates(const Rational& s, std::size_t dim) {
  if (dim < 2 || s.is_zero()) return {};
  const long long n = static_cast<long long>(dim);
  Rational sq = s / Rational(4 * n * (n - 1));
  exact::ScalarTower tower;
  TowerScalar root = tower.sqrt(sq);
  return {LambdaCandidate{root, sq, 1}, LambdaCandidate{-root, sq, -1}};
}

std::vector<LambdaCandidate> lambda_candidates(const MetricLieAlgebra<Rational>& m) {
  return lambda_candidates(liealg::ricci(m).scalar, m.dim());
}

std::vector<SpinMatrix> invariant_spin_connection(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep) {
  require_signature(m, rep);
  auto gamma = liealg::levi_civita(m);
  std::vector<SpinMatrix> out;
  for (std::size_t i = 0; i < m.dim(); ++i) out.push_back(clifford::spin_lift(rep, gamma.nabla(i)));
  return out;
}

std::vector<Spinor> invariant_killing_kernel(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep,
                                             const TowerScalar& lambda) {
  auto conn = invariant_spin_connection(m, rep);
  for (std::size_t i = 0; i < conn.size(); ++i) conn[i].add_scaled(-lambda, rep.gamma(i));
  return joint_kernel(conn, rep.spinor_dim());
}

std::size_t ricci_filter(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep, const TowerScalar& lambda) {
  require_signature(m, rep);
  const auto ric = liealg::ricci(m).ricci_op;
  const TowerScalar c = TowerScalar(Rational(4 * (static_cast<long long>(m.dim()) - 1))) * lambda * lambda;
  std::vector<SpinMatrix> ops;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    SpinMatrix op = rep.clifford_matrix(ric.column(i));
    op.add_scaled(-c, rep.gamma(i));
    ops.push_back(std::move(op));
  }
  return joint_kernel(ops, rep.spinor_dim()).size();
}

KillingReport solve_invariant_killing(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep) {
  require_signature(m, rep);
  KillingReport rep_out;
  rep_out.scalar_curvature = liealg::ricci(m).scalar;
  for (auto& cand : lambda_candidates(rep_out.scalar_curvature, m.dim())) {
    InvariantSolutions sol{cand, invariant_killing_kernel(m, rep, cand.lambda), ricci_filter(m, rep, cand.lambda)};
    rep_out.candidates.push_back(std::move(sol));
  }
  return rep_out;
}

std::vector<bool> phi_square_check(const MetricLieAlgebra<Rational>& m, const StandardDecomposition<Rational>& d,
                                   const Rational& lambda_squared) {
  std::vector<bool> out;
  for (std::size_t x = 0; x < d.abelian.size(); ++x) {
    const auto& phi = d.phi[x];
    Rational c = Rational(-4 * m.sign(d.abelian[x])) * lambda_squared;
    out.push_back(phi * phi == Matrix<Rational>::identity(phi.rows()) * c);
  }
  return out;
}

bool dimension_equation_has_solution(long long n, long long k) { return (n + k) * (n + k - 1) == n * k; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::HyperbolicHalfSpace:
      return "HyperbolicHalfSpace";
    case Verdict::NoKillingSpinor:
      return "NoKillingSpinor";
    default:
      return "NotApplicable";
  }
}

ObstructionReport classify_pseudo_iwasawa(const MetricLieAlgebra<Rational>& m,
                                          const StandardDecomposition<Rational>& d) {
  ObstructionReport out;
  auto standard = liealg::check_standard(m, d);
  if (!standard.is_pseudo_iwasawa) {
    out.verdict = Verdict::NotApplicable;
    out.reason = standard.failures.empty() ? "not pseudo-Iwasawa" : standard.failures.front();
    out.checks.push_back({"pseudo_iwasawa", false, out.reason});
    return out;
  }
  out.checks.push_back({"pseudo_iwasawa", true, ""});
  out.nil_signs = d.nil_signs(m);

  const long long n = static_cast<long long>(d.nil.size());
  const long long k = static_cast<long long>(d.abelian.size());
  auto fail = [&](std::string name, std::string reason, std::string detail = "") {
    out.checks.push_back({std::move(name), false, std::move(detail)});
    out.verdict = Verdict::NoKillingSpinor;
    out.reason = std::move(reason);
    return out;
  };

  const Rational s = liealg::ricci(m).scalar;
  out.scalar_curvature = s;
  out.candidates = lambda_candidates(s, m.dim());
  if (!out.candidates.empty()) out.lambda_squared = out.candidates.front().lambda_squared;

  bool g_abelian = d.nil.empty() || liealg::subalgebra(m, d.nil).algebra().is_abelian();
  if (!g_abelian) return fail("g_abelian", "g non-abelian");
  out.checks.push_back({"g_abelian", true, ""});

  if (out.candidates.empty()) return fail("lambda_candidates", "no Killing constant", "scalar curvature is zero");
  const Rational l2 = *out.lambda_squared;
  out.checks.push_back({"lambda_candidates", true, "lambda^2 = " + ratio(l2)});

  if (k == 0) return fail("dim_a_positive", "dim a = 0");

  if (k > 1) {
    auto sq = phi_square_check(m, d, l2);
    for (std::size_t x = 0; x < sq.size(); ++x)
      if (!sq[x]) return fail("phi_square", "phi_alpha^2 != -4 eps_alpha lambda^2 id", "alpha = e" + std::to_string(d.abelian[x] + 1));
    out.checks.push_back({"phi_square", true, ""});
    return fail("dimension_equation", "(n+k)(n+k-1)=nk has no solutions",
                "n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }

  const std::size_t alpha = d.abelian.front();
  const int eps0 = m.sign(alpha);
  out.eps0 = eps0;
  const auto& phi = d.phi.front();
  const Rational tr = phi.trace();
  const Rational target = Rational(-4 * eps0) * l2 * Rational(n * n);
  if (tr * tr != target) {
    return fail("trace_identity", "trace identity fails",
                "(Tr phi_0)^2 = " + ratio(tr * tr) + ", -4 eps_0 lambda^2 n^2 = " + ratio(target));
  }
  out.checks.push_back({"trace_identity", true, "Tr phi_0 = " + ratio(tr)});

  if (!phi_square_check(m, d, l2).front()) return fail("phi_square", "phi_0^2 != -4 eps_0 lambda^2 id");
  out.checks.push_back({"phi_square", true, ""});

  out.e0_reversed = tr.sign() < 0;
  exact::ScalarTower tower;
  const TowerScalar abs_lambda = tower.sqrt(l2.abs());
  const TowerScalar inv_r = TowerScalar(2) * abs_lambda;
  bool scalar = true;
  for (std::size_t a = 0; a < phi.rows() && scalar; ++a)
    for (std::size_t b = 0; b < phi.cols() && scalar; ++b) {
      TowerScalar entry(out.e0_reversed ? -phi(a, b) : phi(a, b));
      scalar = entry == (a == b ? inv_r : TowerScalar());
    }
  if (!scalar) return fail("phi0_scalar", "phi_0 != (1/r) id");
  out.checks.push_back({"phi0_scalar", true, out.e0_reversed ? "e_0 reversed" : ""});
  out.radius = inv_r.inverse();
  out.verdict = Verdict::HyperbolicHalfSpace;
  return out;
}

}  // namespace solvspin::killing
