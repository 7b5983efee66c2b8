#pragma once

#include <cmath>
#include <concepts>

#include "solvspin/exact/float_scalar.hpp"
#include "solvspin/exact/rational.hpp"
#include "solvspin/exact/tower_scalar.hpp"

namespace solvspin::exact {

/// What the generic linear algebra needs from a scalar: field operations,
/// exact-or-tolerant equality, a zero test and an embedding of the rationals.
template <class S>
concept FieldScalar = std::regular<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  S(Rational{});
  S(1);
};

template <class S>
struct ScalarTraits {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  /// Pivot preference; exact backends take the leftmost nonzero entry.
  static double magnitude(const S&) { return 0.0; }
};

template <>
struct ScalarTraits<FloatScalar> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static double magnitude(const FloatScalar& s) { return std::abs(s.value()); }
};

inline std::string to_string(const Rational& q) { return q.to_string(); }
inline std::string to_string(const TowerScalar& s) { return s.to_string(); }
inline std::string to_string(const FloatScalar& s) { return s.to_string(); }

}  // namespace solvspin::exact
