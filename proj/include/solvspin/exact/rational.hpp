#pragma once

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace solvspin::exact {

/// Thrown on division by zero in any exact scalar type.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits live inline; anything
/// larger is promoted to an immutable, shared GMP rational. The switch is
/// invisible to callers: equality and ordering compare values, not storage.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (static_cast<long long>(value) == INT64_MIN) {
        promote(mpq_class(mpz_class(std::to_string(value))));
      } else {
        num_ = static_cast<std::int64_t>(value);
      }
    } else {
      if (static_cast<unsigned long long>(value) > static_cast<unsigned long long>(INT64_MAX)) {
        promote(mpq_class(mpz_class(std::to_string(value))));
      } else {
        num_ = static_cast<std::int64_t>(value);
      }
    }
  }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
  /// and DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  double to_double() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_mpq(mpq_class value);
  void promote(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// Exact square root when `q` is the square of a rational; throws otherwise.
Rational rational_sqrt(const Rational& q);

/// True iff `q` is the square of a rational number.
bool is_rational_square(const Rational& q);

}  // namespace solvspin::exact
