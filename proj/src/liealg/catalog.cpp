#include "solvspin/liealg/catalog.hpp"

namespace solvspin::liealg {

using exact::Rational;

MetricLieAlgebra<Rational> abelian_algebra(std::vector<int> signs) {
  LieAlgebra<Rational> l(signs.size());
  return MetricLieAlgebra<Rational>(std::move(l), std::move(signs));
}

MetricLieAlgebra<Rational> heisenberg_algebra(std::vector<int> signs) {
  const std::size_t n = signs.size();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("Heisenberg algebra needs odd dimension >= 3");
  LieAlgebra<Rational> l(n);
  for (std::size_t a = 0; a + 1 < n; a += 2) l.set_bracket(a, a + 1, n - 1, Rational(1));
  return MetricLieAlgebra<Rational>(std::move(l), std::move(signs));
}

std::pair<MetricLieAlgebra<Rational>, StandardDecomposition<Rational>> hyperbolic_extension(std::vector<int> nil_signs,
                                                                                            const Rational& r,
                                                                                            int eps0) {
  if (r.sign() <= 0) throw std::invalid_argument("radius must be positive");
  const std::size_t n = nil_signs.size();
  auto base = abelian_algebra(std::move(nil_signs));
  return extend_by_derivation(base, Matrix<Rational>::identity(n) * r.inverse(), eps0);
}

}  // namespace solvspin::liealg
