#include "solvspin/exact/tower_scalar.hpp"

#include <cmath>
#include <sstream>

namespace solvspin::exact {
namespace {

struct Gaussian {
  Rational re, im;
};

Gaussian gmul(const Rational& p, const Rational& q, const Rational& r, const Rational& s) {
  if (q.is_zero() && s.is_zero()) return {p * r, Rational()};
  return {p * r - q * s, p * s + q * r};
}

Rational merge_radicand(const Rational& x, const Rational& y) {
  if (x.is_zero()) return y;
  if (y.is_zero() || x == y) return x;
  throw IncompatibleExtension("w^2 = " + x.to_string() + " vs " + y.to_string());
}

}  // namespace

TowerScalar::TowerScalar(Rational a, Rational b, Rational c, Rational d, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), m_(std::move(radicand)) {
  if (!is_gaussian()) {
    if (m_.sign() <= 0 || is_rational_square(m_)) {
      throw std::invalid_argument("tower radicand must be a positive non-square, got " + m_.to_string());
    }
  }
  normalize();
}

void TowerScalar::normalize() {
  if (is_gaussian()) m_ = Rational();
}

TowerScalar TowerScalar::real_part() const {
  TowerScalar r = *this;
  r.b_ = Rational();
  r.d_ = Rational();
  r.normalize();
  return r;
}

TowerScalar TowerScalar::imag_part() const {
  TowerScalar r;
  r.a_ = b_;
  r.c_ = d_;
  r.m_ = m_;
  r.normalize();
  return r;
}

TowerScalar TowerScalar::conj() const {
  TowerScalar r = *this;
  r.b_ = -b_;
  r.d_ = -d_;
  return r;
}

const Rational& TowerScalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + to_string());
  return a_;
}

double TowerScalar::real_approx() const {
  return a_.to_double() + (c_.is_zero() ? 0.0 : c_.to_double() * std::sqrt(m_.to_double()));
}

double TowerScalar::imag_approx() const {
  return b_.to_double() + (d_.is_zero() ? 0.0 : d_.to_double() * std::sqrt(m_.to_double()));
}

std::string TowerScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& coeff, const char* unit) {
    if (coeff.is_zero()) return;
    if (!first) os << (coeff.sign() < 0 ? " - " : " + ");
    else if (coeff.sign() < 0) os << "-";
    first = false;
    Rational mag = coeff.abs();
    if (*unit == '\0') {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << unit;
    }
  };
  term(a_, "");
  term(b_, "i");
  term(c_, "w");
  term(d_, "i*w");
  if (!is_gaussian()) os << " [w^2=" << m_ << "]";
  return os.str();
}

TowerScalar TowerScalar::operator-() const {
  TowerScalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.c_ = -c_;
  r.d_ = -d_;
  r.m_ = m_;
  return r;
}

TowerScalar operator+(const TowerScalar& x, const TowerScalar& y) {
  if (y.is_zero()) return x;
  if (x.is_zero()) return y;
  TowerScalar r;
  r.a_ = x.a_ + y.a_;
  r.b_ = x.b_ + y.b_;
  if (!x.is_gaussian() || !y.is_gaussian()) {
    r.m_ = merge_radicand(x.m_, y.m_);
    r.c_ = x.c_ + y.c_;
    r.d_ = x.d_ + y.d_;
    r.normalize();
  }
  return r;
}

TowerScalar operator-(const TowerScalar& x, const TowerScalar& y) { return x + (-y); }

TowerScalar operator*(const TowerScalar& x, const TowerScalar& y) {
  if (x.is_zero() || y.is_zero()) return {};
  Gaussian xx = gmul(x.a_, x.b_, y.a_, y.b_);
  TowerScalar r;
  if (x.is_gaussian() && y.is_gaussian()) {
    r.a_ = std::move(xx.re);
    r.b_ = std::move(xx.im);
    return r;
  }
  // (x1 + y1 w)(x2 + y2 w) = (x1 x2 + m y1 y2) + (x1 y2 + y1 x2) w
  Rational m = merge_radicand(x.m_, y.m_);
  Gaussian yy = gmul(x.c_, x.d_, y.c_, y.d_);
  Gaussian xy = gmul(x.a_, x.b_, y.c_, y.d_);
  Gaussian yx = gmul(x.c_, x.d_, y.a_, y.b_);
  r.a_ = xx.re + m * yy.re;
  r.b_ = xx.im + m * yy.im;
  r.c_ = xy.re + yx.re;
  r.d_ = xy.im + yx.im;
  r.m_ = m;
  r.normalize();
  return r;
}

TowerScalar TowerScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_gaussian()) {
    Rational norm = a_ * a_ + b_ * b_;
    return {a_ / norm, -b_ / norm};
  }
  // (x + y w)^-1 = (x - y w) / (x^2 - m y^2), the denominator lying in Q(i).
  Gaussian x2 = gmul(a_, b_, a_, b_);
  Gaussian y2 = gmul(c_, d_, c_, d_);
  TowerScalar denom(x2.re - m_ * y2.re, x2.im - m_ * y2.im);
  TowerScalar numer;
  numer.a_ = a_;
  numer.b_ = b_;
  numer.c_ = -c_;
  numer.d_ = -d_;
  numer.m_ = m_;
  return numer * denom.inverse();
}

bool operator==(const TowerScalar& x, const TowerScalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (x.is_gaussian() && y.is_gaussian()) return true;
  if (x.m_ != y.m_ && !x.is_gaussian() && !y.is_gaussian()) {
    throw IncompatibleExtension("comparing w^2 = " + x.m_.to_string() + " with w^2 = " + y.m_.to_string());
  }
  return x.c_ == y.c_ && x.d_ == y.d_;
}

std::pair<Rational, Rational> split_square_factor(const Rational& m) {
  if (m.is_zero()) throw std::domain_error("split_square_factor of zero");
  // |p/q| = p q / q^2
  mpz_class n = m.numerator() * m.denominator();
  if (n < 0) n = -n;
  mpz_class outside = 1;
  mpz_class den = m.denominator();
  for (unsigned long p = 2; p <= 100000; ++p) {
    mpz_class pp = p * p;
    if (pp > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t()) != 0) {
      n /= pp;
      outside *= p;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    outside *= root;
    n = 1;
  }
  return {Rational(mpq_class(outside, den)), Rational(mpq_class(n))};
}

TowerScalar ScalarTower::sqrt(const Rational& m) {
  if (m.is_zero()) return {};
  auto [scale, k] = split_square_factor(m);
  bool negative = m.sign() < 0;
  if (k.is_one()) {
    return negative ? TowerScalar(Rational(), scale) : TowerScalar(scale);
  }
  if (radicand_ && *radicand_ != k) {
    throw IncompatibleExtension("tower bound to w^2 = " + radicand_->to_string() + ", requested " +
                                k.to_string());
  }
  radicand_ = k;
  if (negative) return {Rational(), Rational(), Rational(), scale, k};
  return {Rational(), Rational(), scale, Rational(), k};
}

}  // namespace solvspin::exact
