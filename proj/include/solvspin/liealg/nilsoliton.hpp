#pragma once

#include <optional>

#include "solvspin/liealg/decomposition.hpp"

namespace solvspin::liealg {

template <FieldScalar S>
struct Nilsoliton {
  S lambda;       ///< Ric = lambda I + D
  Matrix<S> derivation;
};

/// Solves Ric = lambda I + D with D a derivation. The derivation condition on
/// Ric - lambda I is affine in lambda, so this is a one-unknown linear system.
/// Abelian input returns lambda = 0, D = 0. Throws std::invalid_argument when
/// the algebra is not nilpotent.
template <FieldScalar S>
std::optional<Nilsoliton<S>> nilsoliton_solve(const MetricLieAlgebra<S>& m);

/// g x|_D R: a new frame vector e_0 at index 0 with sign eps0 and [e_0, v] = -D v,
/// so phi_0 = D. The old frame moves to indices 1..n. Throws std::invalid_argument
/// if D is not a metric-symmetric derivation.
template <FieldScalar S>
std::pair<MetricLieAlgebra<S>, StandardDecomposition<S>> extend_by_derivation(const MetricLieAlgebra<S>& m,
                                                                               const Matrix<S>& d, int eps0);

struct EinsteinExtension {
  MetricLieAlgebra<exact::Rational> algebra;
  StandardDecomposition<exact::Rational> decomposition;
  Nilsoliton<exact::Rational> nilsoliton;
  exact::Rational scale;  ///< D = scale * (nilsoliton derivation)
  int eps0;
  std::optional<exact::Rational> einstein_constant;
};

/// Extends a nilsoliton to an Einstein pseudo-Iwasawa algebra. The derivation
/// is rescaled so that eps0 * scale^2 * Tr(D) = 1; eps0 defaults to the sign of
/// Tr(D). Throws std::invalid_argument when no nilsoliton exists, Tr D = 0, the
/// requested eps0 has the wrong sign, or the scale would be irrational.
EinsteinExtension einstein_extension(const MetricLieAlgebra<exact::Rational>& m, std::optional<int> eps0 = {});

}  // namespace solvspin::liealg
