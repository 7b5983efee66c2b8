#include "doctest.h"

#include <chrono>

#include "solvspin/liealg/lie_algebra.hpp"
#include "support/clifford_samples.hpp"

using namespace solvspin;
using namespace solvspin::clifford;
using exact::Rational;
using testing::Rng;

namespace {

using RMat = Matrix<Rational>;
using RVec = Vector<Rational>;

TowerScalar g(const std::vector<int>& s, const RVec& v, const RVec& w) {
  Rational acc;
  for (std::size_t i = 0; i < s.size(); ++i) acc += v[i] * w[i] * s[i];
  return TowerScalar(acc);
}

Spinor scale(const Spinor& psi, const TowerScalar& c) {
  Spinor out = psi;
  for (auto& x : out) x *= c;
  return out;
}

Spinor add(const Spinor& a, const Spinor& b) {
  Spinor out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

bool relations_hold(const CliffordRep& rep) {
  const std::size_t n = rep.dim();
  const auto id = SpinMatrix::identity(rep.spinor_dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      SpinMatrix ac = rep.gamma(a) * rep.gamma(b) + rep.gamma(b) * rep.gamma(a);
      SpinMatrix expected = a == b ? id * TowerScalar(-2 * rep.sign(a)) : SpinMatrix(id.rows(), id.cols());
      if (!(ac == expected)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("Clifford relations for every sign pattern up to n = 8") {
  auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& s : testing::all_sign_patterns(n)) {
      auto rep = build_gammas(s);
      CHECK(rep.spinor_dim() == (std::size_t{1} << (n / 2)));
      CHECK(relations_hold(rep));
    }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 10.0);
}

TEST_CASE("small representations") {
  auto r1 = build_gammas({1});
  REQUIRE(r1.spinor_dim() == 1);
  CHECK((r1.gamma(0)(0, 0) == TowerScalar::imaginary_unit() || r1.gamma(0)(0, 0) == -TowerScalar::imaginary_unit()));
  CHECK(r1.volume_phase() == 1);
  auto r1m = build_gammas({-1});
  CHECK(r1m.gamma(0)(0, 0) == TowerScalar(1));
  CHECK(r1m.volume_phase() == 0);
  for (const auto& s : testing::all_sign_patterns(2)) CHECK(build_gammas(s).spinor_dim() == 2);
  CHECK_FALSE(build_gammas({1, -1}).volume_phase().has_value());
  CHECK_THROWS_AS(build_gammas({}), std::invalid_argument);
  CHECK_THROWS_AS(build_gammas({1, 2}), std::invalid_argument);
}

TEST_CASE("volume element acts as i^k for odd n") {
  for (std::size_t n : {1, 3, 5, 7})
    for (const auto& s : testing::all_sign_patterns(n)) {
      auto rep = build_gammas(s);
      REQUIRE(rep.volume_phase().has_value());
      SpinMatrix vol = SpinMatrix::identity(rep.spinor_dim());
      for (const auto& gm : rep.gammas()) vol = vol * gm;
      TowerScalar c = *rep.volume_phase() == 0 ? TowerScalar(1) : TowerScalar::imaginary_unit();
      CHECK(vol == SpinMatrix::identity(rep.spinor_dim()) * c);
    }
}

TEST_CASE("clifford_mul properties") {
  Rng rng(7);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& s : testing::all_sign_patterns(n)) {
      auto rep = build_gammas(s);
      CHECK(clifford_mul(rep, RVec(n), testing::random_spinor(rng, rep.spinor_dim())) == Spinor(rep.spinor_dim()));
      for (int t = 0; t < 5; ++t) {
        RVec v = testing::random_vector(rng, n);
        RVec w = testing::random_vector(rng, n);
        Spinor psi = testing::random_spinor(rng, rep.spinor_dim());
        CHECK(add(clifford_mul(rep, v, clifford_mul(rep, v, psi)), scale(psi, g(s, v, v))) == Spinor(psi.size()));
        Spinor vw = add(clifford_mul(rep, v, clifford_mul(rep, w, psi)), clifford_mul(rep, w, clifford_mul(rep, v, psi)));
        CHECK(add(vw, scale(psi, TowerScalar(2) * g(s, v, w))) == Spinor(psi.size()));
      }
    }
  auto rep = build_gammas({1, -1});
  Spinor psi{TowerScalar(1), TowerScalar(Rational(0), Rational(3))};
  RVec e1{Rational(1), Rational(0)};
  CHECK(clifford_mul(rep, e1, clifford_mul(rep, e1, psi)) == scale(psi, TowerScalar(-1)));
}

TEST_CASE("spin lift equivariance") {
  Rng rng(8);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& s : testing::all_sign_patterns(n)) {
      auto rep = build_gammas(s);
      CHECK(spin_lift(rep, RMat(n, n)).is_zero());
      for (int t = 0; t < 3; ++t) {
        RMat a = testing::random_metric_matrix(rng, s, false);
        REQUIRE(liealg::is_metric_skew(s, a));
        SpinMatrix l = spin_lift(rep, a);
        RVec v = testing::random_vector(rng, n);
        CHECK(exact::commutator(l, rep.clifford_matrix(v)) == rep.clifford_matrix(a.apply(v)));
        CHECK(spin_lift_pairs(rep, exact::convert<TowerScalar>(a)) == l);
      }
    }
  auto rep = build_gammas({1, 1});
  RMat notskew = RMat::identity(2);
  CHECK_THROWS_WITH_AS(spin_lift(rep, notskew), "endomorphism is not skew", std::invalid_argument);
}

TEST_CASE("pair form differs from the quarter form off the skew subspace") {
  auto rep = build_gammas({1, 1});
  RMat a(2, 2);
  a(0, 1) = 1;  // not skew
  SpinMatrix pairs = spin_lift_pairs(rep, exact::convert<TowerScalar>(a));
  // 1/4 eps_1 gamma_1 gamma(A e_1), the only nonzero term of the quarter form
  SpinMatrix quarter = rep.gamma(1) * rep.gamma(0) * TowerScalar(Rational(1, 4));
  CHECK(pairs == quarter * TowerScalar(2));
}

TEST_CASE("lift of the xi generator is half gamma_i gamma_j") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& s : testing::all_sign_patterns(n)) {
      auto rep = build_gammas(s);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          // A v = g(e_i, v) e_j - g(e_j, v) e_i, half of xi_*(e_i e_j)
          RMat a(n, n);
          a(j, i) += s[i];
          a(i, j) -= s[j];
          SpinMatrix l = spin_lift(rep, a);
          CHECK(l == rep.gamma(i) * rep.gamma(j) * TowerScalar(Rational(1, 2)));
          for (std::size_t k = 0; k < n; ++k)
            CHECK(exact::commutator(l, rep.gamma(k)) == rep.clifford_matrix(a.column(k)));
        }
    }
}

TEST_CASE("two-tensor action of symmetric and skew endomorphisms") {
  Rng rng(9);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& s : testing::signatures(n)) {
      auto rep = build_gammas(s);
      const auto id = SpinMatrix::identity(rep.spinor_dim());
      CHECK(two_tensor_action(rep, sharp(s, RMat::identity(n))) == id * TowerScalar(-static_cast<int>(n)));
      for (int t = 0; t < 100; ++t) {
        RMat f = testing::random_metric_matrix(rng, s, true);
        REQUIRE(liealg::is_metric_symmetric(s, f));
        CHECK(two_tensor_action(rep, sharp(s, f)) == id * TowerScalar(-f.trace()));
      }
      for (int t = 0; t < 10; ++t) {
        RMat a = testing::random_metric_matrix(rng, s, false);
        CHECK(two_tensor_action(rep, sharp(s, a)) == spin_lift(rep, a) * TowerScalar(4));
      }
    }
}

TEST_CASE("symmetric commutant kernel is the identity when V_psi = 0") {
  Rng rng(10);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& s : testing::signatures(n)) {
      auto rep = build_gammas(s);
      const bool definite = std::all_of(s.begin(), s.end(), [&](int e) { return e == s[0]; });
      int tested = 0;
      for (int t = 0; t < 100; ++t) {
        Spinor psi = testing::random_spinor(rng, rep.spinor_dim());
        auto k = symmetric_commutant_kernel(rep, psi);
        if (definite) CHECK(k.annihilator_dimension == 0);
        if (k.annihilator_dimension != 0) continue;
        ++tested;
        CHECK(k.identity_only());
        CHECK(k.particular == Matrix<TowerScalar>::identity(n));
      }
      CHECK(tested >= 50);
    }
  CHECK_THROWS_AS(symmetric_commutant_kernel(build_gammas({1, 1}), Spinor(2)), std::invalid_argument);
}

TEST_CASE("isotropic annihilators enlarge the commutant kernel") {
  Rng rng(11);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<int> s(n, 1);
    s[1] = -1;
    auto rep = build_gammas(s);
    RVec v(n);
    v[0] = 1;
    v[1] = 1;  // isotropic
    int enlarged = 0;
    for (int t = 0; t < 20; ++t) {
      Spinor psi = clifford_mul(rep, v, testing::random_spinor(rng, rep.spinor_dim()));
      if (exact::is_zero_vector<TowerScalar>(psi)) continue;
      CHECK(clifford_mul(rep, v, psi) == Spinor(psi.size()));
      auto k = symmetric_commutant_kernel(rep, psi);
      CHECK(k.annihilator_dimension >= 1);
      CHECK(k.affine_dimension >= 1);
      enlarged += k.affine_dimension >= 1 ? 1 : 0;
      for (const auto& f : k.directions) {
        CHECK(liealg::is_metric_symmetric(s, f));
        for (std::size_t c = 0; c < n; ++c) CHECK(rep.clifford_matrix(f.column(c)).apply(psi) == Spinor(psi.size()));
      }
      // id + direction is again a solution
      Matrix<TowerScalar> f = k.particular + k.directions.front();
      for (std::size_t c = 0; c < n; ++c) {
        RVec e(n);
        e[c] = 1;
        CHECK(rep.clifford_matrix(f.column(c)).apply(psi) == clifford_mul(rep, e, psi));
      }
    }
    CHECK(enlarged > 0);
  }
}

TEST_CASE("gamma JSON export") {
  auto j = gammas_to_json(build_gammas({1, -1}));
  REQUIRE(j.size() == 2);
  CHECK(j[0].size() == 2);
  CHECK(j[0][0][1] == nlohmann::json::array({"0", "1"}));
}
