#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvspin/clifford/clifford.hpp"
#include "solvspin/liealg/decomposition.hpp"

namespace solvspin::killing {

using clifford::CliffordRep;
using clifford::SpinMatrix;
using clifford::Spinor;
using exact::Rational;
using exact::TowerScalar;
using liealg::MetricLieAlgebra;
using liealg::StandardDecomposition;

/// lambda = branch * sqrt(lambda_squared), realized in the scalar tower.
struct LambdaCandidate {
  TowerScalar lambda;
  Rational lambda_squared;
  int branch = 1;
};

/// lambda^2 = s / (4 N (N - 1)) for scalar curvature s and dimension N.
/// Empty when s = 0 or N < 2; otherwise the branches +1 and -1 in that order.
std::vector<LambdaCandidate> lambda_candidates(const Rational& scalar_curvature, std::size_t dim);
std::vector<LambdaCandidate> lambda_candidates(const MetricLieAlgebra<Rational>& m);

/// Spinor connection on invariant spinors: entry i is 1/4 sum_j eps_j gamma_j gamma(nabla_{e_i} e_j).
std::vector<SpinMatrix> invariant_spin_connection(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep);

/// Joint kernel of nabla_{e_i} - lambda gamma_i over the frame, for any lambda.
std::vector<Spinor> invariant_killing_kernel(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep,
                                             const TowerScalar& lambda);

/// dim {psi : (Ric(X) - 4 (N-1) lambda^2 X) . psi = 0 for all X}
std::size_t ricci_filter(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep, const TowerScalar& lambda);

struct InvariantSolutions {
  LambdaCandidate candidate;
  std::vector<Spinor> basis;
  std::size_t ricci_filter_dim = 0;
};

/// Invariant spinors only: constant coefficients in a left-invariant trivialization.
struct KillingReport {
  Rational scalar_curvature;
  std::vector<InvariantSolutions> candidates;
};

KillingReport solve_invariant_killing(const MetricLieAlgebra<Rational>& m, const CliffordRep& rep);

/// phi_alpha^2 == -4 eps_alpha lambda^2 id, one entry per abelian index.
std::vector<bool> phi_square_check(const MetricLieAlgebra<Rational>& m, const StandardDecomposition<Rational>& d,
                                   const Rational& lambda_squared);

/// True iff (n + k)(n + k - 1) == n k.
bool dimension_equation_has_solution(long long n, long long k);

enum class Verdict { HyperbolicHalfSpace, NoKillingSpinor, NotApplicable };

std::string to_string(Verdict v);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Necessary conditions for arbitrary (not necessarily invariant) Killing spinors.
struct ObstructionReport {
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;
  std::vector<NamedCheck> checks;
  std::optional<Rational> scalar_curvature;
  std::optional<Rational> lambda_squared;
  std::vector<LambdaCandidate> candidates;
  std::optional<TowerScalar> radius;  ///< r = 1/(2|lambda|)
  int eps0 = 0;
  std::vector<int> nil_signs;
  bool e0_reversed = false;
};

/// Decision chain: g abelian; a Killing constant exists; for dim a = 1 the
/// trace identity (Tr phi_0)^2 = -4 eps_0 lambda^2 n^2, phi_0^2 = -4 eps_0 lambda^2 id
/// and phi_0 = (1/r) id after fixing the sign of e_0; for dim a > 1 the
/// phi_alpha^2 condition and the dimension equation. The first failing check is the reason.
ObstructionReport classify_pseudo_iwasawa(const MetricLieAlgebra<Rational>& m, const StandardDecomposition<Rational>& d);

}  // namespace solvspin::killing
