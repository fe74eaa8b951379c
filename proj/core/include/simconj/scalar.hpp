#pragma once

// Field kinds supported by the library: exact rationals (GMP), IEEE double and
// complex double. Algorithms are templates over the scalar type; FieldValue is
// the runtime-tagged form used at the file and command-line boundary.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "simconj/error.hpp"

namespace simconj {

using Rational = mpq_class;
using Real = double;
using Complex = std::complex<double>;

enum class Kind { Rational, Real64, Complex128 };

/// The involution X -> X*. Only meaningful for complex scalars; real kinds
/// always use the plain transpose.
enum class StarMode { Transpose, ConjugateTranspose };

struct FieldKind {
  Kind kind = Kind::Rational;
  StarMode star = StarMode::Transpose;

  /// Validates the kind/star combination: Rational and Real64 force Transpose.
  static FieldKind make(Kind kind, StarMode star);
  static FieldKind make(Kind kind);  // default star for the kind

  friend bool operator==(const FieldKind&, const FieldKind&) = default;
};

std::string_view to_string(Kind kind);
std::string_view to_string(StarMode mode);

template <class T>
concept Field = std::same_as<T, Rational> || std::same_as<T, Real> || std::same_as<T, Complex>;

template <class T>
concept FloatField = std::same_as<T, Real> || std::same_as<T, Complex>;

template <Field T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr Kind kind = Kind::Rational;
  static constexpr bool exact = true;
  static constexpr StarMode default_star = StarMode::Transpose;
  static Rational conj(const Rational& x) { return x; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static bool is_zero(const Rational& x, double /*threshold*/) { return sgn(x) == 0; }
};

template <>
struct FieldTraits<Real> {
  static constexpr Kind kind = Kind::Real64;
  static constexpr bool exact = false;
  static constexpr StarMode default_star = StarMode::Transpose;
  static Real conj(Real x) { return x; }
  static double magnitude(Real x) { return std::abs(x); }
  static bool is_zero(Real x, double threshold) { return std::abs(x) <= threshold; }
};

template <>
struct FieldTraits<Complex> {
  static constexpr Kind kind = Kind::Complex128;
  static constexpr bool exact = false;
  static constexpr StarMode default_star = StarMode::ConjugateTranspose;
  static Complex conj(const Complex& x) { return std::conj(x); }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static bool is_zero(const Complex& x, double threshold) { return std::abs(x) <= threshold; }
};

template <Field T>
inline constexpr bool is_exact_v = FieldTraits<T>::exact;

template <Field T>
double magnitude(const T& x) {
  return FieldTraits<T>::magnitude(x);
}

/// Applies the star involution to a scalar: conjugation in ConjugateTranspose
/// mode, identity otherwise.
template <Field T>
T star_scalar(const T& x, StarMode mode) {
  if constexpr (std::same_as<T, Complex>) {
    return mode == StarMode::ConjugateTranspose ? std::conj(x) : x;
  } else {
    return x;
  }
}

/// Division that refuses an exactly-zero divisor in every kind.
template <Field T>
T checked_div(const T& a, const T& b) {
  if constexpr (std::same_as<T, Rational>) {
    if (sgn(b) == 0) throw DivisionByZero();
    return a / b;
  } else {
    if (b == T(0)) throw DivisionByZero();
    return a / b;
  }
}

/// Parses "p", "-p" or "p/q" (q > 0) into a normalized rational.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& x);

/// Shortest round-trip decimal form of a double.
std::string format_real(double x);

/// Value text used by line-oriented output: rational "p/q", real decimal,
/// complex "[re, im]".
std::string format_value(const Rational& x);
std::string format_value(Real x);
std::string format_value(const Complex& x);

/// Runtime-tagged scalar. Arithmetic never mixes kinds.
class FieldValue {
 public:
  using Storage = std::variant<Rational, Real, Complex>;

  FieldValue() : value_(Rational(0)) {}
  FieldValue(Rational x) : value_(std::move(x)) { std::get<Rational>(value_).canonicalize(); }
  FieldValue(Real x) : value_(x) {}
  FieldValue(Complex x) : value_(x) {}

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  const Storage& storage() const { return value_; }

  template <Field T>
  const T& get() const {
    if (!std::holds_alternative<T>(value_)) throw KindMismatch("field value has a different kind");
    return std::get<T>(value_);
  }

  bool is_zero() const;
  FieldValue conj() const;
  std::string to_string() const;

  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
  friend bool operator==(const FieldValue& a, const FieldValue& b);

 private:
  Storage value_;
};

}  // namespace simconj
