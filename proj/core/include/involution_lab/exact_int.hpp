#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace involution_lab {

/// Arbitrary-precision signed integer with value semantics.
///
/// Zero is canonical (sign 0, no magnitude limbs). Every arithmetic
/// operation is exact; there is no overflow mode.
class ExactInt {
 public:
  ExactInt() = default;
  ExactInt(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit ExactInt(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optionally signed decimal string. Throws ArgumentError.
  static ExactInt from_string(std::string_view decimal);
  /// 2^exponent.
  static ExactInt power_of_two(std::uint64_t exponent);

  std::string to_string() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool fits_int64() const;
  /// Throws ArgumentError when the value does not fit.
  std::int64_t to_int64() const;

  ExactInt abs() const { return ExactInt(mpz_class(::abs(value_))); }

  /// Number of trailing zero bits of |x|; requires x != 0.
  std::uint64_t trailing_zero_bits() const;
  /// Bit i of the two's-complement representation.
  bool bit(std::uint64_t index) const;

  ExactInt shifted_left(std::uint64_t bits) const;
  /// Exact division by 2^bits; requires divisibility.
  ExactInt shifted_right_exact(std::uint64_t bits) const;

  /// Least non-negative residue modulo m (m > 0).
  std::uint64_t mod(std::uint64_t m) const;
  /// Least non-negative residue modulo 2^bits.
  ExactInt mod_pow2(std::uint64_t bits) const;

  bool divisible_by(const ExactInt& divisor) const;
  /// Quotient when divisor divides *this exactly, nullopt otherwise.
  std::optional<ExactInt> exact_quotient(const ExactInt& divisor) const;

  ExactInt& operator+=(const ExactInt& rhs);
  ExactInt& operator-=(const ExactInt& rhs);
  ExactInt& operator*=(const ExactInt& rhs);

  friend ExactInt operator+(ExactInt lhs, const ExactInt& rhs) { return lhs += rhs; }
  friend ExactInt operator-(ExactInt lhs, const ExactInt& rhs) { return lhs -= rhs; }
  friend ExactInt operator*(ExactInt lhs, const ExactInt& rhs) { return lhs *= rhs; }
  friend ExactInt operator-(const ExactInt& x) { return ExactInt(mpz_class(-x.value_)); }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& backend() const { return value_; }

 private:
  mpz_class value_;
};

}  // namespace involution_lab
