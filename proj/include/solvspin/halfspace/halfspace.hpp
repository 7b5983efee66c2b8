#pragma once

#include <map>
#include <string>
#include <vector>

#include "solvspin/clifford/clifford.hpp"
#include "solvspin/liealg/decomposition.hpp"

namespace solvspin::halfspace {

using clifford::CliffordRep;
using exact::Rational;
using exact::TowerScalar;

/// {t > 0} with metric (r^2/t^2)(sum eps_i dx_i^2 + eps_t dt^2), in the
/// left-invariant frame e_0 = (t/r) d/dt, e_i = (t/r) d/dx_i.
/// `signs` follows the file order: x_1 .. x_{n-1}, then t.
class HalfSpaceModel {
 public:
  HalfSpaceModel(std::size_t n, Rational r, std::vector<int> signs);

  /// Parses "halfspace n=<int> r=<p/q> signs=<+1,-1,...>".
  static HalfSpaceModel parse(const std::string& text);
  std::string to_string() const;

  std::size_t dim() const { return n_; }
  const Rational& radius() const { return r_; }
  const std::vector<int>& signs() const { return signs_; }
  int eps_t() const { return signs_.back(); }

  /// Frame signs with e_0 first: (eps_t, eps_1, ..., eps_{n-1}).
  std::vector<int> frame_signs() const;

  /// Lie algebra of the frame: [e_0, e_i] = e_i / r, so phi_0 = -(1/r) id.
  const liealg::MetricLieAlgebra<Rational>& algebra() const { return algebra_; }
  const liealg::StandardDecomposition<Rational>& decomposition() const { return decomposition_; }

 private:
  std::size_t n_;
  Rational r_;
  std::vector<int> signs_;
  liealg::MetricLieAlgebra<Rational> algebra_;
  liealg::StandardDecomposition<Rational> decomposition_;
};

/// t^{k/2} x_1^{m_1} ... x_{n-1}^{m_{n-1}}
struct Monomial {
  int k = 0;
  std::vector<int> m;

  int x_degree() const;
  /// "t^(k/2)" followed by "*x<i>^<m_i>" for each nonzero m_i.
  std::string key() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Finite sum of monomials with scalar coefficients; zero coefficients are never stored.
class CoordFunction {
 public:
  using Terms = std::map<Monomial, TowerScalar>;

  CoordFunction() = default;
  static CoordFunction monomial(Monomial mono, TowerScalar coeff = TowerScalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& mono, const TowerScalar& coeff);
  CoordFunction& operator+=(const CoordFunction& o);
  CoordFunction scaled(const TowerScalar& c) const;
  friend bool operator==(const CoordFunction&, const CoordFunction&) = default;

 private:
  Terms terms_;
};

/// Components in the fixed spinor basis u_h.
using CoordSpinorField = std::vector<CoordFunction>;

/// L_{e_d}: direction 0 is (t/r) d/dt, direction i >= 1 is (t/r) d/dx_i.
CoordFunction frame_derivative(const HalfSpaceModel& model, const CoordFunction& f, std::size_t direction);

/// nabla_{e_d} psi - lambda e_d . psi for every frame direction d.
std::vector<CoordSpinorField> killing_residual(const HalfSpaceModel& model, const CliffordRep& rep,
                                               const CoordSpinorField& psi, const TowerScalar& lambda);

bool is_zero_field(const CoordSpinorField& psi);

struct AnsatzBounds {
  int k_bound = 1;  ///< half-exponents k in [-K, K]
  int m_bound = 1;  ///< total x-degree at most M
};

struct HalfSpaceSolutions {
  TowerScalar lambda;
  AnsatzBounds bounds;
  std::size_t unknowns = 0;
  std::vector<CoordSpinorField> basis;  ///< first nonzero coefficient normalized to 1
};

/// Exact solve of the Killing equation over the ansatz window. Every monomial the
/// residual produces, inside the window or not, must vanish.
HalfSpaceSolutions solve_killing_halfspace(const HalfSpaceModel& model, const CliffordRep& rep,
                                           const TowerScalar& lambda, AnsatzBounds bounds);

/// 2 lambda^2 v . e_0 . psi == lambda (phi_0 v) . psi - L_{phi_0 v} psi for every frame v in g.
bool verify_amended_identity(const HalfSpaceModel& model, const CliffordRep& rep, const CoordSpinorField& psi,
                             const TowerScalar& lambda);

/// The Killing constants +-sqrt(-eps_t / (4 r^2)).
std::vector<TowerScalar> model_lambdas(const HalfSpaceModel& model);

}  // namespace solvspin::halfspace
