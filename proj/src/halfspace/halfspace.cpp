#include "solvspin/halfspace/halfspace.hpp"

#include <sstream>
#include <tuple>

#include "solvspin/liealg/curvature.hpp"

namespace solvspin::halfspace {

using clifford::SpinMatrix;
using exact::Matrix;

namespace {

liealg::MetricLieAlgebra<Rational> frame_algebra(std::size_t n, const Rational& r, const std::vector<int>& fsigns) {
  liealg::LieAlgebra<Rational> l(n);
  for (std::size_t i = 1; i < n; ++i) l.set_bracket(0, i, i, r.inverse());
  return {std::move(l), fsigns};
}

std::vector<int> to_frame_signs(const std::vector<int>& file_signs) {
  std::vector<int> out{file_signs.back()};
  out.insert(out.end(), file_signs.begin(), file_signs.end() - 1);
  return out;
}

std::vector<int> checked(std::size_t n, const Rational& r, std::vector<int> signs) {
  if (n < 2) throw std::invalid_argument("half-space dimension must be at least 2");
  if (r.sign() <= 0) throw std::invalid_argument("radius must be positive");
  if (signs.size() != n) throw std::invalid_argument("half-space needs " + std::to_string(n) + " signs");
  for (int e : signs)
    if (e != 1 && e != -1) throw std::invalid_argument("metric signs must be +1 or -1");
  return signs;
}

CoordSpinorField apply_matrix(const SpinMatrix& a, const CoordSpinorField& psi) {
  CoordSpinorField out(a.rows());
  for (std::size_t h = 0; h < a.rows(); ++h)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(h, j).is_zero()) out[h] += psi[j].scaled(a(h, j));
  return out;
}

void add_field(CoordSpinorField& a, const CoordSpinorField& b, const TowerScalar& c) {
  for (std::size_t h = 0; h < a.size(); ++h) a[h] += b[h].scaled(c);
}

std::vector<SpinMatrix> spin_connection(const HalfSpaceModel& model, const CliffordRep& rep) {
  if (rep.signs() != model.frame_signs()) throw std::invalid_argument("representation signature does not match the model");
  auto gamma = liealg::levi_civita(model.algebra());
  std::vector<SpinMatrix> out;
  for (std::size_t i = 0; i < model.dim(); ++i) out.push_back(clifford::spin_lift(rep, gamma.nabla(i)));
  return out;
}

void multi_indices(std::size_t vars, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == vars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur.push_back(e);
    multi_indices(vars, budget - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HalfSpaceModel::HalfSpaceModel(std::size_t n, Rational r, std::vector<int> signs)
    : n_(n),
      r_(std::move(r)),
      signs_(checked(n, r_, std::move(signs))),
      algebra_(frame_algebra(n_, r_, to_frame_signs(signs_))),
      decomposition_(liealg::make_decomposition(algebra_, {0})) {}

HalfSpaceModel HalfSpaceModel::parse(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word) || word != "halfspace") throw std::invalid_argument("half-space model string must start with 'halfspace'");
  std::optional<std::size_t> n;
  std::optional<Rational> r;
  std::optional<std::vector<int>> signs;
  while (in >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + word + "'");
    std::string key = word.substr(0, eq);
    std::string value = word.substr(eq + 1);
    if (key == "n") {
      std::size_t pos = 0;
      long long v = std::stoll(value, &pos);
      if (pos != value.size() || v < 1) throw std::invalid_argument("bad dimension '" + value + "'");
      n = static_cast<std::size_t>(v);
    } else if (key == "r") {
      r = Rational::parse(value);
    } else if (key == "signs") {
      std::vector<int> s;
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) {
        if (item == "+1" || item == "1" || item == "+") s.push_back(1);
        else if (item == "-1" || item == "-") s.push_back(-1);
        else throw std::invalid_argument("bad sign '" + item + "'");
      }
      signs = std::move(s);
    } else {
      throw std::invalid_argument("unknown half-space key '" + key + "'");
    }
  }
  if (!n || !r || !signs) throw std::invalid_argument("half-space model string needs n, r and signs");
  return HalfSpaceModel(*n, *r, *signs);
}

std::string HalfSpaceModel::to_string() const {
  std::string s = "halfspace n=" + std::to_string(n_) + " r=" + r_.to_string() + " signs=";
  for (std::size_t i = 0; i < signs_.size(); ++i) s += (i ? "," : "") + std::string(signs_[i] > 0 ? "+1" : "-1");
  return s;
}

std::vector<int> HalfSpaceModel::frame_signs() const { return to_frame_signs(signs_); }

int Monomial::x_degree() const {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

std::string Monomial::key() const {
  std::string s = "t^(" + std::to_string(k) + "/2)";
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(m[i]);
  return s;
}

CoordFunction CoordFunction::monomial(Monomial mono, TowerScalar coeff) {
  CoordFunction f;
  f.add(mono, coeff);
  return f;
}

void CoordFunction::add(const Monomial& mono, const TowerScalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

CoordFunction& CoordFunction::operator+=(const CoordFunction& o) {
  for (const auto& [mono, c] : o.terms_) add(mono, c);
  return *this;
}

CoordFunction CoordFunction::scaled(const TowerScalar& c) const {
  CoordFunction out;
  if (c.is_zero()) return out;
  for (const auto& [mono, v] : terms_) out.terms_.emplace(mono, v * c);
  return out;
}

CoordFunction frame_derivative(const HalfSpaceModel& model, const CoordFunction& f, std::size_t direction) {
  if (direction >= model.dim()) throw std::out_of_range("frame direction out of range");
  const Rational inv_r = model.radius().inverse();
  CoordFunction out;
  for (const auto& [mono, c] : f.terms()) {
    if (direction == 0) {
      out.add(mono, c * TowerScalar(inv_r * Rational(mono.k, 2)));
      continue;
    }
    const std::size_t x = direction - 1;
    if (x >= mono.m.size() || mono.m[x] == 0) continue;
    Monomial d = mono;
    d.k += 2;
    d.m[x] -= 1;
    out.add(d, c * TowerScalar(inv_r * Rational(mono.m[x])));
  }
  return out;
}

std::vector<CoordSpinorField> killing_residual(const HalfSpaceModel& model, const CliffordRep& rep,
                                               const CoordSpinorField& psi, const TowerScalar& lambda) {
  if (psi.size() != rep.spinor_dim()) throw std::invalid_argument("spinor field has the wrong number of components");
  auto conn = spin_connection(model, rep);
  std::vector<CoordSpinorField> out;
  for (std::size_t d = 0; d < model.dim(); ++d) {
    CoordSpinorField res(psi.size());
    for (std::size_t h = 0; h < psi.size(); ++h) res[h] = frame_derivative(model, psi[h], d);
    SpinMatrix op = conn[d];
    op.add_scaled(-lambda, rep.gamma(d));
    add_field(res, apply_matrix(op, psi), TowerScalar(1));
    out.push_back(std::move(res));
  }
  return out;
}

bool is_zero_field(const CoordSpinorField& psi) {
  for (const auto& f : psi)
    if (!f.is_zero()) return false;
  return true;
}

HalfSpaceSolutions solve_killing_halfspace(const HalfSpaceModel& model, const CliffordRep& rep,
                                           const TowerScalar& lambda, AnsatzBounds bounds) {
  if (bounds.k_bound < 0 || bounds.m_bound < 0) throw std::invalid_argument("ansatz bounds must be non-negative");
  auto conn = spin_connection(model, rep);
  const std::size_t spin = rep.spinor_dim();
  const std::size_t n = model.dim();
  const Rational inv_r = model.radius().inverse();

  std::vector<std::vector<int>> xs;
  std::vector<int> cur;
  multi_indices(n - 1, bounds.m_bound, cur, xs);
  std::vector<Monomial> window;
  for (int k = -bounds.k_bound; k <= bounds.k_bound; ++k)
    for (const auto& m : xs) window.push_back(Monomial{k, m});
  std::sort(window.begin(), window.end());

  std::vector<SpinMatrix> ops;
  for (std::size_t d = 0; d < n; ++d) {
    SpinMatrix op = conn[d];
    op.add_scaled(-lambda, rep.gamma(d));
    ops.push_back(std::move(op));
  }

  // unknown (h, window index) -> column h * |window| + w
  using RowKey = std::tuple<std::size_t, Monomial, std::size_t>;
  std::map<RowKey, std::map<std::size_t, TowerScalar>> rows;
  auto put = [&](RowKey key, std::size_t col, const TowerScalar& c) {
    if (c.is_zero()) return;
    auto& row = rows[std::move(key)];
    row[col] += c;
  };
  for (std::size_t hp = 0; hp < spin; ++hp)
    for (std::size_t w = 0; w < window.size(); ++w) {
      const std::size_t col = hp * window.size() + w;
      const Monomial& mono = window[w];
      put({0, mono, hp}, col, TowerScalar(inv_r * Rational(mono.k, 2)));
      for (std::size_t d = 1; d < n; ++d) {
        if (mono.m[d - 1] == 0) continue;
        Monomial dm = mono;
        dm.k += 2;
        dm.m[d - 1] -= 1;
        put({d, dm, hp}, col, TowerScalar(inv_r * Rational(mono.m[d - 1])));
      }
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t h = 0; h < spin; ++h) put({d, mono, h}, col, ops[d](h, hp));
    }

  const std::size_t unknowns = spin * window.size();
  exact::EchelonForm<TowerScalar> e(unknowns);
  for (auto& [key, row] : rows) {
    exact::SparseRow<TowerScalar> sparse;
    for (auto& [col, c] : row)
      if (!c.is_zero()) sparse.emplace_back(col, c);
    if (!sparse.empty()) e.add_sparse(std::move(sparse));
  }

  HalfSpaceSolutions out{lambda, bounds, unknowns, {}};
  for (auto v : e.kernel_basis()) {
    std::size_t first = 0;
    while (first < v.size() && v[first].is_zero()) ++first;
    const TowerScalar scale = v[first].inverse();
    CoordSpinorField psi(spin);
    for (std::size_t col = first; col < v.size(); ++col)
      if (!v[col].is_zero()) psi[col / window.size()].add(window[col % window.size()], v[col] * scale);
    out.basis.push_back(std::move(psi));
  }
  return out;
}

bool verify_amended_identity(const HalfSpaceModel& model, const CliffordRep& rep, const CoordSpinorField& psi,
                             const TowerScalar& lambda) {
  if (rep.signs() != model.frame_signs()) throw std::invalid_argument("representation signature does not match the model");
  const auto& d = model.decomposition();
  const std::size_t n = model.dim();
  const std::size_t alpha = d.abelian.front();
  const TowerScalar two_l2 = TowerScalar(2) * lambda * lambda;
  for (std::size_t a = 0; a < d.nil.size(); ++a) {
    const std::size_t v = d.nil[a];
    exact::Vector<Rational> w(n);
    for (std::size_t b = 0; b < d.nil.size(); ++b) w[d.nil[b]] = d.phi.front()(b, a);
    CoordSpinorField lhs = apply_matrix(rep.gamma(v) * rep.gamma(alpha) * two_l2, psi);
    CoordSpinorField rhs = apply_matrix(rep.clifford_matrix(w) * lambda, psi);
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j].is_zero()) continue;
      for (std::size_t h = 0; h < psi.size(); ++h) rhs[h] += frame_derivative(model, psi[h], j).scaled(TowerScalar(-w[j]));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<TowerScalar> model_lambdas(const HalfSpaceModel& model) {
  exact::ScalarTower tower;
  const Rational& r = model.radius();
  TowerScalar l = tower.sqrt(Rational(-model.eps_t()) / (r * r * 4));
  return {l, -l};
}

}  // namespace solvspin::halfspace
