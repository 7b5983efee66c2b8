#include "solvspin/clifford/clifford.hpp"

#include <stdexcept>

#include "solvspin/liealg/lie_algebra.hpp"

namespace solvspin::clifford {

namespace {

const TowerScalar kI = TowerScalar::imaginary_unit();

SpinMatrix kron(const SpinMatrix& a, const SpinMatrix& b) {
  SpinMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

SpinMatrix pauli(char which) {
  SpinMatrix p(2, 2);
  switch (which) {
    case 'x':
      p(0, 1) = TowerScalar(1);
      p(1, 0) = TowerScalar(1);
      break;
    case 'y':
      p(0, 1) = -kI;
      p(1, 0) = kI;
      break;
    default:
      p(0, 0) = TowerScalar(1);
      p(1, 1) = TowerScalar(-1);
  }
  return p;
}

/// Hermitian generators squaring to 1: Z^(k-1) (x) {X,Y} (x) I^(m-k), plus Z^m for odd n.
std::vector<SpinMatrix> brauer_weyl(std::size_t n) {
  const std::size_t m = n / 2;
  std::vector<SpinMatrix> out;
  const SpinMatrix one = SpinMatrix::identity(1);
  const SpinMatrix i2 = SpinMatrix::identity(2);
  const SpinMatrix z = pauli('z');
  for (std::size_t k = 0; k < m; ++k) {
    for (char c : {'x', 'y'}) {
      SpinMatrix g = one;
      for (std::size_t t = 0; t < m; ++t) g = kron(g, t < k ? z : (t == k ? pauli(c) : i2));
      out.push_back(std::move(g));
    }
  }
  if (n % 2 == 1) {
    SpinMatrix g = one;
    for (std::size_t t = 0; t < m; ++t) g = kron(g, z);
    out.push_back(std::move(g));
  }
  return out;
}

Matrix<TowerScalar> lift_matrix(const Matrix<Rational>& a) { return exact::convert<TowerScalar>(a); }

}  // namespace

CliffordRep::CliffordRep(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw std::invalid_argument("Clifford representation needs n >= 1");
  for (int e : signs_)
    if (e != 1 && e != -1) throw std::invalid_argument("metric signs must be +1 or -1");
  gammas_ = brauer_weyl(signs_.size());
  for (std::size_t a = 0; a < signs_.size(); ++a)
    if (signs_[a] > 0) gammas_[a] = gammas_[a] * kI;
  if (signs_.size() % 2 == 1) {
    SpinMatrix vol = SpinMatrix::identity(spinor_dim());
    for (const auto& g : gammas_) vol = vol * g;
    const TowerScalar c = vol(0, 0);
    if (!(vol == SpinMatrix::identity(spinor_dim()) * c)) throw std::logic_error("volume element is not central");
    if (c == TowerScalar(-1) || c == -kI) {
      gammas_.back() = -gammas_.back();
      volume_phase_ = c == TowerScalar(-1) ? 0 : 1;
    } else {
      volume_phase_ = c == TowerScalar(1) ? 0 : 1;
    }
  }
}

SpinMatrix CliffordRep::clifford_matrix(const Vector<TowerScalar>& v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector length does not match Clifford dimension");
  SpinMatrix m(spinor_dim(), spinor_dim());
  for (std::size_t a = 0; a < dim(); ++a)
    if (!v[a].is_zero()) m.add_scaled(v[a], gammas_[a]);
  return m;
}

SpinMatrix CliffordRep::clifford_matrix(const Vector<Rational>& v) const {
  return clifford_matrix(exact::convert<TowerScalar>(v));
}

CliffordRep build_gammas(std::vector<int> signs) { return CliffordRep(std::move(signs)); }

Spinor clifford_mul(const CliffordRep& rep, const Vector<TowerScalar>& v, const Spinor& psi) {
  if (psi.size() != rep.spinor_dim()) throw std::invalid_argument("spinor length does not match representation");
  return rep.clifford_matrix(v).apply(psi);
}

Spinor clifford_mul(const CliffordRep& rep, const Vector<Rational>& v, const Spinor& psi) {
  return clifford_mul(rep, exact::convert<TowerScalar>(v), psi);
}

SpinMatrix spin_lift(const CliffordRep& rep, const Matrix<TowerScalar>& a) {
  const std::size_t n = rep.dim();
  if (a.rows() != n || a.cols() != n) throw std::invalid_argument("endomorphism size does not match Clifford dimension");
  if (!liealg::is_metric_skew(rep.signs(), a)) throw std::invalid_argument("endomorphism is not skew");
  SpinMatrix out(rep.spinor_dim(), rep.spinor_dim());
  const TowerScalar quarter(Rational(1, 4));
  for (std::size_t j = 0; j < n; ++j) {
    Vector<TowerScalar> col = a.column(j);
    if (exact::is_zero_vector<TowerScalar>(col)) continue;
    SpinMatrix term = rep.gamma(j) * rep.clifford_matrix(col);
    out.add_scaled(rep.sign(j) > 0 ? quarter : -quarter, term);
  }
  return out;
}

SpinMatrix spin_lift(const CliffordRep& rep, const Matrix<Rational>& a) { return spin_lift(rep, lift_matrix(a)); }

SpinMatrix spin_lift_pairs(const CliffordRep& rep, const Matrix<TowerScalar>& a) {
  const std::size_t n = rep.dim();
  SpinMatrix out(rep.spinor_dim(), rep.spinor_dim());
  const TowerScalar half(Rational(1, 2));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < j; ++k) {
      if (a(k, j).is_zero()) continue;
      TowerScalar coeff = half * a(k, j);
      if (rep.sign(j) < 0) coeff = -coeff;
      out.add_scaled(coeff, rep.gamma(j) * rep.gamma(k));
    }
  return out;
}

SpinMatrix two_tensor_action(const CliffordRep& rep, const Matrix<TowerScalar>& t) {
  const std::size_t n = rep.dim();
  if (t.rows() != n || t.cols() != n) throw std::invalid_argument("tensor size does not match Clifford dimension");
  SpinMatrix out(rep.spinor_dim(), rep.spinor_dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!t(i, j).is_zero()) out.add_scaled(t(i, j), rep.gamma(i) * rep.gamma(j));
  return out;
}

SpinMatrix two_tensor_action(const CliffordRep& rep, const Matrix<Rational>& t) {
  return two_tensor_action(rep, lift_matrix(t));
}

namespace {

/// Adds the real and imaginary parts of `row` as two equations over the real unknowns.
void add_split(exact::EchelonForm<TowerScalar>& e, const std::vector<TowerScalar>& row) {
  std::vector<TowerScalar> re(row.size());
  std::vector<TowerScalar> im(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) {
    re[c] = row[c].real_part();
    im[c] = row[c].imag_part();
  }
  e.add_row(re);
  e.add_row(im);
}

std::vector<Spinor> gamma_psi(const CliffordRep& rep, const Spinor& psi) {
  if (psi.size() != rep.spinor_dim()) throw std::invalid_argument("spinor length does not match representation");
  if (exact::is_zero_vector<TowerScalar>(psi)) throw std::invalid_argument("spinor must be nonzero");
  std::vector<Spinor> out;
  for (std::size_t k = 0; k < rep.dim(); ++k) out.push_back(rep.gamma(k).apply(psi));
  return out;
}

}  // namespace

std::size_t annihilator_dimension(const CliffordRep& rep, const Spinor& psi) {
  auto gp = gamma_psi(rep, psi);
  exact::EchelonForm<TowerScalar> e(rep.dim());
  for (std::size_t r = 0; r < rep.spinor_dim(); ++r) {
    std::vector<TowerScalar> row(rep.dim());
    for (std::size_t k = 0; k < rep.dim(); ++k) row[k] = gp[k][r];
    add_split(e, row);
  }
  return rep.dim() - e.rank();
}

CommutantKernel symmetric_commutant_kernel(const CliffordRep& rep, const Spinor& psi) {
  const std::size_t n = rep.dim();
  auto gp = gamma_psi(rep, psi);
  // unknowns b_ij = g(e_i, f e_j), i <= j; f_ij = eps_i b_ij
  std::vector<std::size_t> index(n * n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      index[i * n + j] = index[j * n + i] = pairs.size();
      pairs.emplace_back(i, j);
    }
  exact::EchelonForm<TowerScalar> e(pairs.size());
  // f(e_k) . psi = sum_i f_ik gamma_i psi = 0 for the homogeneous part
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < rep.spinor_dim(); ++r) {
      std::vector<TowerScalar> row(pairs.size());
      for (std::size_t i = 0; i < n; ++i) {
        const TowerScalar& v = gp[i][r];
        if (v.is_zero()) continue;
        row[index[i * n + k]] += rep.sign(i) > 0 ? v : -v;
      }
      add_split(e, row);
    }
  CommutantKernel out;
  out.particular = Matrix<TowerScalar>::identity(n);
  for (const auto& b : e.kernel_basis()) {
    Matrix<TowerScalar> f(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const TowerScalar& v = b[index[i * n + j]];
        f(i, j) = rep.sign(i) > 0 ? v : -v;
      }
    out.directions.push_back(std::move(f));
  }
  out.affine_dimension = out.directions.size();
  out.annihilator_dimension = annihilator_dimension(rep, psi);
  return out;
}

nlohmann::json gammas_to_json(const CliffordRep& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : rep.gammas()) {
    nlohmann::json m = nlohmann::json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < g.cols(); ++j)
        row.push_back({g(i, j).a().to_string(), g(i, j).b().to_string()});
      m.push_back(std::move(row));
    }
    arr.push_back(std::move(m));
  }
  return arr;
}

}  // namespace solvspin::clifford
