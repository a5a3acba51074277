#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "tropfit/error.hpp"

namespace tropfit {

/**
 * Exact rational exponent num/den with den > 0, always stored reduced.
 *
 * Real-valued exponents are accepted through from_real(), which encodes the
 * value on the fixed denominator kRealDenominator (rounded to nearest). Two
 * reals that agree to within 1/(2 * kRealDenominator) therefore map to the
 * same Rational.
 */
class Rational {
 public:
  static constexpr std::int64_t kRealDenominator = 1'000'000;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw Error(ErrorCode::InvalidDegrees, "zero denominator");
    normalize();
  }

  static Rational from_real(double value) {
    if (!std::isfinite(value)) throw Error(ErrorCode::InvalidDegrees, "non-finite exponent");
    const double scaled = std::round(value * static_cast<double>(kRealDenominator));
    if (std::fabs(scaled) > 9.0e15) throw Error(ErrorCode::InvalidDegrees, "exponent out of range");
    return Rational(static_cast<std::int64_t>(scaled), kRealDenominator);
  }

  /// Accepts "p" or "p/q" with optional sign on p; no whitespace.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
      std::int64_t out = 0;
      if (!part.empty() && part.front() == '+') part.remove_prefix(1);
      const auto* end = part.data() + part.size();
      auto [ptr, ec] = std::from_chars(part.data(), end, out);
      if (part.empty() || ec != std::errc() || ptr != end)
        throw Error(ErrorCode::InvalidDegrees, "bad exponent '" + std::string(text) + "'");
      return out;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace tropfit
