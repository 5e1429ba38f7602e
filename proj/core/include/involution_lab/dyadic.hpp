#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "involution_lab/exact_int.hpp"

namespace involution_lab {

/// Rational number numerator / 2^exponent, kept canonical: the exponent is
/// zero or the numerator is odd.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(ExactInt integer) : numerator_(std::move(integer)) {}  // NOLINT
  Dyadic(std::int64_t integer) : numerator_(integer) {}         // NOLINT

  /// numerator / 2^exponent for any signed exponent.
  static Dyadic from_parts(ExactInt numerator, std::int64_t exponent);
  static Dyadic half() { return from_parts(ExactInt(1), 1); }

  const ExactInt& numerator() const { return numerator_; }
  std::uint64_t exponent() const { return exponent_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_integer() const { return exponent_ == 0; }
  std::optional<ExactInt> as_integer() const;
  /// Throws InvariantViolation when the value is not an integer.
  ExactInt to_integer(const char* context = "dyadic value") const;

  /// Multiplies by 2^shift (shift may be negative).
  Dyadic scaled_by_power_of_two(std::int64_t shift) const;

  /// "p" for integers, "p/2^e" rendered as "p/q" otherwise.
  std::string to_string() const;

  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }
  friend Dyadic operator-(const Dyadic& x) { return from_parts(-x.numerator_, static_cast<std::int64_t>(x.exponent_)); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

 private:
  void normalize();

  ExactInt numerator_;
  std::uint64_t exponent_ = 0;
};

/// a / b when the quotient is again dyadic; nullopt when b is zero or the
/// odd part of b does not divide the numerator of a.
std::optional<Dyadic> divide_exact(const Dyadic& a, const Dyadic& b);

}  // namespace involution_lab
