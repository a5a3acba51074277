#pragma once

/**
 * @file semifield.hpp
 * @brief Idempotent semifields and their scalars.
 *
 * A semifield policy fixes the meaning of the tropical operations on finite
 * carrier values:
 *
 *   MaxPlus   x (+) y = max(x, y),  x (*) y = x + y,  1 = 0,  0 = -inf
 *   MaxTimes  x (+) y = max(x, y),  x (*) y = x * y,  1 = 1,  0 = 0
 *
 * The tropical zero is never stored in-band. Scalar<S> keeps it as an explicit
 * flag so that no -inf + inf pattern can reach the arithmetic.
 */

#include <cmath>
#include <compare>
#include <concepts>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "tropfit/error.hpp"
#include "tropfit/rational.hpp"

namespace tropfit {

enum class SemifieldId { MaxPlus, MaxTimes };

constexpr std::string_view to_string(SemifieldId id) {
  return id == SemifieldId::MaxPlus ? "max-plus" : "max-times";
}

inline std::optional<SemifieldId> parse_semifield(std::string_view name) {
  if (name == "max-plus") return SemifieldId::MaxPlus;
  if (name == "max-times") return SemifieldId::MaxTimes;
  return std::nullopt;
}

struct MaxPlus {
  static constexpr SemifieldId id = SemifieldId::MaxPlus;
  static constexpr double unit = 0.0;

  static constexpr bool is_carrier(double v) noexcept { return std::isfinite(v); }
  static constexpr double mul(double a, double b) noexcept { return a + b; }
  static constexpr double inv(double a) noexcept { return -a; }
  static double pow(double a, double r) noexcept { return r * a; }
  /// Conventional value of the tropical zero.
  static constexpr double zero_as_real() noexcept { return -std::numeric_limits<double>::infinity(); }
  static bool is_zero_real(double v) noexcept { return v == zero_as_real(); }
  static bool approx_equal(double a, double b, double tol) noexcept { return std::fabs(a - b) <= tol; }
};

struct MaxTimes {
  static constexpr SemifieldId id = SemifieldId::MaxTimes;
  static constexpr double unit = 1.0;

  static constexpr bool is_carrier(double v) noexcept { return std::isfinite(v) && v > 0.0; }
  static constexpr double mul(double a, double b) noexcept { return a * b; }
  static constexpr double inv(double a) noexcept { return 1.0 / a; }
  static double pow(double a, double r) noexcept { return std::pow(a, r); }
  static constexpr double zero_as_real() noexcept { return 0.0; }
  static bool is_zero_real(double v) noexcept { return v == 0.0; }
  // Relative comparison: the carrier is multiplicative.
  static bool approx_equal(double a, double b, double tol) noexcept {
    return std::fabs(a - b) <= tol * std::fmax(std::fabs(a), std::fabs(b));
  }
};

template <class S>
concept Semifield = requires(double a, double b) {
  { S::id } -> std::convertible_to<SemifieldId>;
  { S::unit } -> std::convertible_to<double>;
  { S::is_carrier(a) } -> std::same_as<bool>;
  { S::mul(a, b) } -> std::convertible_to<double>;
  { S::inv(a) } -> std::convertible_to<double>;
  { S::pow(a, b) } -> std::convertible_to<double>;
  { S::zero_as_real() } -> std::convertible_to<double>;
  { S::approx_equal(a, b, b) } -> std::same_as<bool>;
};

/// One element of the semifield S: either a finite carrier value or the zero.
template <Semifield S>
class Scalar {
 public:
  using semifield = S;

  /// Defaults to the tropical zero.
  constexpr Scalar() = default;

  /// Finite carrier value; throws InvalidValue for anything outside the carrier.
  explicit Scalar(double value) : zero_(false), value_(value) {
    if (!S::is_carrier(value))
      throw Error(ErrorCode::InvalidValue,
                  "value " + std::to_string(value) + " is not a finite element of " +
                      std::string(to_string(S::id)));
  }

  static constexpr Scalar zero() noexcept { return Scalar(); }
  static Scalar one() { return Scalar(S::unit); }

  /// Maps the conventional image of the zero (-inf or 0) to Zero.
  static Scalar from_real(double value) {
    if (S::is_zero_real(value)) return zero();
    return Scalar(value);
  }

  constexpr bool is_zero() const noexcept { return zero_; }

  /// Carrier value; the conventional image of Zero when is_zero().
  constexpr double value() const noexcept { return zero_ ? S::zero_as_real() : value_; }

  friend Scalar operator+(Scalar a, Scalar b) noexcept {
    if (a.zero_) return b;
    if (b.zero_) return a;
    return a.value_ >= b.value_ ? a : b;
  }

  friend Scalar operator*(Scalar a, Scalar b) noexcept {
    if (a.zero_ || b.zero_) return zero();
    return raw(S::mul(a.value_, b.value_));
  }

  Scalar& operator+=(Scalar other) noexcept { return *this = *this + other; }
  Scalar& operator*=(Scalar other) noexcept { return *this = *this * other; }

  friend constexpr bool operator==(const Scalar& a, const Scalar& b) noexcept {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.value_ == b.value_;
  }

  friend constexpr std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) noexcept {
    if (a.zero_ || b.zero_) return static_cast<int>(!a.zero_) <=> static_cast<int>(!b.zero_);
    return a.value_ <=> b.value_;
  }

 private:
  // Skips validation; only for results of closed operations on carrier values.
  static Scalar raw(double v) noexcept {
    Scalar s;
    s.zero_ = false;
    s.value_ = v;
    return s;
  }

  template <Semifield T>
  friend Scalar<T> inv(Scalar<T> a);
  template <Semifield T>
  friend Scalar<T> pow(Scalar<T> a, double exponent);

  bool zero_ = true;
  double value_ = 0.0;
};

template <Semifield S>
Scalar<S> add(Scalar<S> a, Scalar<S> b) noexcept {
  return a + b;
}

template <Semifield S>
Scalar<S> mul(Scalar<S> a, Scalar<S> b) noexcept {
  return a * b;
}

template <Semifield S>
Scalar<S> inv(Scalar<S> a) {
  if (a.is_zero()) throw Error(ErrorCode::InversionOfZero, "inverse of the tropical zero");
  return Scalar<S>::raw(S::inv(a.value_));
}

/// Real-exponent power. Zero to a positive power is Zero.
template <Semifield S>
Scalar<S> pow(Scalar<S> a, double exponent) {
  if (a.is_zero()) {
    if (exponent > 0.0) return Scalar<S>::zero();
    throw Error(ErrorCode::ZeroToNonpositivePower, "zero raised to a non-positive power");
  }
  return Scalar<S>::raw(S::pow(a.value_, exponent));
}

template <Semifield S>
Scalar<S> pow(Scalar<S> a, const Rational& exponent) {
  return pow(a, exponent.to_double());
}

template <Semifield S>
Scalar<S> sqrt(Scalar<S> a) {
  return pow(a, 0.5);
}

/// Order induced by idempotent addition: a <= b iff a (+) b = b.
template <Semifield S>
constexpr bool leq(Scalar<S> a, Scalar<S> b) noexcept {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return a.value() <= b.value();
}

template <Semifield S>
bool approx_equal(Scalar<S> a, Scalar<S> b, double tol) noexcept {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return S::approx_equal(a.value(), b.value(), tol);
}

template <Semifield S>
bool is_unit(Scalar<S> a, double tol) noexcept {
  return !a.is_zero() && S::approx_equal(a.value(), S::unit, tol);
}

}  // namespace tropfit
