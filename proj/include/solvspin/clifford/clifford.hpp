#pragma once

#include <optional>
#include <vector>

#include "solvspin/exact/linear_solve.hpp"
#include "solvspin/exact/matrix.hpp"
#include "solvspin/exact/tower_scalar.hpp"

#include <json.hpp>

namespace solvspin::clifford {

using exact::Matrix;
using exact::Rational;
using exact::TowerScalar;
using exact::Vector;
using SpinMatrix = Matrix<TowerScalar>;
using Spinor = Vector<TowerScalar>;

/// Complex representation of Cl(p,q) with gamma_a gamma_b + gamma_b gamma_a = -2 eps_a delta_ab.
/// Entries lie in Q(i). For odd n the volume element gamma_1...gamma_n acts as
/// i^k with k in {0, 1}; for even n volume_phase() is empty.
class CliffordRep {
 public:
  explicit CliffordRep(std::vector<int> signs);

  std::size_t dim() const { return signs_.size(); }
  std::size_t spinor_dim() const { return gammas_.front().rows(); }
  const std::vector<int>& signs() const { return signs_; }
  int sign(std::size_t a) const { return signs_[a]; }
  const SpinMatrix& gamma(std::size_t a) const { return gammas_[a]; }
  const std::vector<SpinMatrix>& gammas() const { return gammas_; }
  std::optional<int> volume_phase() const { return volume_phase_; }

  /// sum_a v_a gamma_a
  SpinMatrix clifford_matrix(const Vector<TowerScalar>& v) const;
  SpinMatrix clifford_matrix(const Vector<Rational>& v) const;

 private:
  std::vector<int> signs_;
  std::vector<SpinMatrix> gammas_;
  std::optional<int> volume_phase_;
};

CliffordRep build_gammas(std::vector<int> signs);

/// v . psi
Spinor clifford_mul(const CliffordRep& rep, const Vector<TowerScalar>& v, const Spinor& psi);
Spinor clifford_mul(const CliffordRep& rep, const Vector<Rational>& v, const Spinor& psi);

/// 1/4 sum_j eps_j gamma_j gamma(A e_j). Throws std::invalid_argument unless A is metric-skew.
SpinMatrix spin_lift(const CliffordRep& rep, const Matrix<TowerScalar>& a);
SpinMatrix spin_lift(const CliffordRep& rep, const Matrix<Rational>& a);

/// 1/2 sum_{k<j} theta_kj eps_j gamma_j gamma_k with theta_kj = A_kj. Agrees with
/// spin_lift exactly when A is metric-skew; no skewness check.
SpinMatrix spin_lift_pairs(const CliffordRep& rep, const Matrix<TowerScalar>& a);

/// Coefficients a_ij = eps_i f_ji of the tensor f# = sum a_ij e_i (x) e_j attached to f.
template <exact::FieldScalar S>
Matrix<S> sharp(const std::vector<int>& signs, const Matrix<S>& f) {
  Matrix<S> a(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) a(i, j) = signs[i] > 0 ? f(j, i) : -f(j, i);
  return a;
}

/// sum_ij a_ij gamma_i gamma_j
SpinMatrix two_tensor_action(const CliffordRep& rep, const Matrix<TowerScalar>& t);
SpinMatrix two_tensor_action(const CliffordRep& rep, const Matrix<Rational>& t);

/// Real dimension of V_psi = {X : X . psi = 0}.
std::size_t annihilator_dimension(const CliffordRep& rep, const Spinor& psi);

/// Affine set {f metric-symmetric : f(X) . psi = X . psi for all X} = id + span(directions).
struct CommutantKernel {
  Matrix<TowerScalar> particular;  ///< the identity, always a solution
  std::vector<Matrix<TowerScalar>> directions;  ///< homogeneous solutions, metric-symmetric
  std::size_t affine_dimension = 0;
  std::size_t annihilator_dimension = 0;  ///< dim V_psi
  bool identity_only() const { return affine_dimension == 0; }
};

/// Throws std::invalid_argument on psi = 0.
CommutantKernel symmetric_commutant_kernel(const CliffordRep& rep, const Spinor& psi);

/// Gammas as nested arrays of ["re", "im"] rational strings.
nlohmann::json gammas_to_json(const CliffordRep& rep);

}  // namespace solvspin::clifford
