#pragma once

#include <vector>

#include "solvspin/liealg/nilsoliton.hpp"

namespace solvspin::liealg {

/// R^n with the given signs and zero bracket.
MetricLieAlgebra<exact::Rational> abelian_algebra(std::vector<int> signs);

/// Heisenberg algebra of dimension 2p+1: [e_{2a-1}, e_{2a}] = e_{2p+1}.
MetricLieAlgebra<exact::Rational> heisenberg_algebra(std::vector<int> signs);

/// R^n x|_{id/r} R with e_0 first: [e_0, v] = -v/r, signs (eps0, nil_signs...).
std::pair<MetricLieAlgebra<exact::Rational>, StandardDecomposition<exact::Rational>> hyperbolic_extension(
    std::vector<int> nil_signs, const exact::Rational& r, int eps0);

}  // namespace solvspin::liealg
