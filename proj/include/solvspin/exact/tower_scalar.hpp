#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "solvspin/exact/rational.hpp"

namespace solvspin::exact {

/// Raised when two scalars bound to different radicands meet in one operation,
/// or when a tower that already holds a radicand is asked for another one.
class IncompatibleExtension : public std::runtime_error {
 public:
  explicit IncompatibleExtension(const std::string& detail)
      : std::runtime_error("incompatible extension: " + detail) {}
};

/// Element a + b*i + c*w + d*i*w of Q(i)(w), with i^2 = -1 and w^2 = m.
///
/// The radicand m travels with the value. It is zero ("unbound") whenever the
/// w-components vanish, so plain Gaussian rationals mix with any tower.
class TowerScalar {
 public:
  TowerScalar() = default;
  TowerScalar(Rational re) : a_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  TowerScalar(T value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  TowerScalar(Rational re, Rational im) : a_(std::move(re)), b_(std::move(im)) {}
  /// Requires `radicand` positive and not a rational square when c or d is nonzero.
  TowerScalar(Rational a, Rational b, Rational c, Rational d, Rational radicand);

  static TowerScalar imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  const Rational& radicand() const { return m_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_gaussian() const { return c_.is_zero() && d_.is_zero(); }
  bool is_real() const { return b_.is_zero() && d_.is_zero(); }
  bool is_rational() const { return is_gaussian() && b_.is_zero(); }
  bool is_purely_imaginary() const { return a_.is_zero() && c_.is_zero(); }

  TowerScalar real_part() const;
  TowerScalar imag_part() const;
  /// Complex conjugation (i -> -i); w is real.
  TowerScalar conj() const;
  TowerScalar inverse() const;

  /// Throws std::domain_error unless the value is rational.
  const Rational& as_rational() const;

  double real_approx() const;
  double imag_approx() const;

  std::string to_string() const;

  TowerScalar operator-() const;
  TowerScalar& operator+=(const TowerScalar& o) { return *this = *this + o; }
  TowerScalar& operator-=(const TowerScalar& o) { return *this = *this - o; }
  TowerScalar& operator*=(const TowerScalar& o) { return *this = *this * o; }
  TowerScalar& operator/=(const TowerScalar& o) { return *this = *this / o; }

  friend TowerScalar operator+(const TowerScalar& x, const TowerScalar& y);
  friend TowerScalar operator-(const TowerScalar& x, const TowerScalar& y);
  friend TowerScalar operator*(const TowerScalar& x, const TowerScalar& y);
  friend TowerScalar operator/(const TowerScalar& x, const TowerScalar& y) { return x * y.inverse(); }
  friend bool operator==(const TowerScalar& x, const TowerScalar& y);

 private:
  void normalize();

  Rational a_, b_, c_, d_;
  Rational m_;
};

inline bool is_zero(const TowerScalar& s) { return s.is_zero(); }

/// Holds the single radicand a computation may adjoin.
class ScalarTower {
 public:
  ScalarTower() = default;

  /// Square-free normalized radicand, if one has been bound.
  const std::optional<Rational>& radicand() const { return radicand_; }

  /// Returns a scalar whose square is `m`. Perfect squares (up to sign) stay in
  /// Q(i) and do not bind; anything else binds the square-free part of |m|.
  /// Throws IncompatibleExtension if a different radicand is already bound.
  TowerScalar sqrt(const Rational& m);

 private:
  std::optional<Rational> radicand_;
};

/// Writes |m| = s^2 * k with k a positive integer free of small square factors.
/// Returns {s, k}. Requires m != 0.
std::pair<Rational, Rational> split_square_factor(const Rational& m);

}  // namespace solvspin::exact
