#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>

#include "solvspin/exact/rational.hpp"

namespace solvspin::exact {

/// Binary floating-point value that compares with a relative tolerance.
/// Used only by the float backend; exact results never pass through it.
class FloatScalar {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  FloatScalar() = default;
  explicit FloatScalar(double value, double tolerance = kDefaultTolerance)
      : value_(value), tol_(tolerance) {}
  template <std::integral T>
  FloatScalar(T value) : value_(static_cast<double>(value)) {}  // NOLINT(google-explicit-constructor)
  FloatScalar(const Rational& q) : value_(q.to_double()) {}  // NOLINT(google-explicit-constructor)

  double value() const { return value_; }
  double tolerance() const { return tol_; }
  bool is_zero() const { return std::abs(value_) <= tol_; }
  std::string to_string() const;

  FloatScalar operator-() const { return FloatScalar(-value_, tol_); }
  FloatScalar& operator+=(const FloatScalar& o) { return *this = *this + o; }
  FloatScalar& operator-=(const FloatScalar& o) { return *this = *this - o; }
  FloatScalar& operator*=(const FloatScalar& o) { return *this = *this * o; }
  FloatScalar& operator/=(const FloatScalar& o) { return *this = *this / o; }

  friend FloatScalar operator+(const FloatScalar& x, const FloatScalar& y) {
    return FloatScalar(x.value_ + y.value_, std::max(x.tol_, y.tol_));
  }
  friend FloatScalar operator-(const FloatScalar& x, const FloatScalar& y) {
    return FloatScalar(x.value_ - y.value_, std::max(x.tol_, y.tol_));
  }
  friend FloatScalar operator*(const FloatScalar& x, const FloatScalar& y) {
    return FloatScalar(x.value_ * y.value_, std::max(x.tol_, y.tol_));
  }
  friend FloatScalar operator/(const FloatScalar& x, const FloatScalar& y) {
    if (y.value_ == 0.0) throw DivisionByZero();
    return FloatScalar(x.value_ / y.value_, std::max(x.tol_, y.tol_));
  }
  /// |a - b| <= tol * max(1, |a|, |b|)
  friend bool operator==(const FloatScalar& x, const FloatScalar& y) {
    double tol = std::max(x.tol_, y.tol_);
    double scale = std::max({1.0, std::abs(x.value_), std::abs(y.value_)});
    return std::abs(x.value_ - y.value_) <= tol * scale;
  }

 private:
  double value_ = 0.0;
  double tol_ = kDefaultTolerance;
};

inline bool is_zero(const FloatScalar& s) { return s.is_zero(); }

}  // namespace solvspin::exact
