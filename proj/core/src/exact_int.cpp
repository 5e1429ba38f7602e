#include "involution_lab/exact_int.hpp"

#include <limits>

#include "involution_lab/errors.hpp"

namespace involution_lab {

ExactInt::ExactInt(std::int64_t value) {
  static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");
  value_ = static_cast<long>(value);
}

ExactInt ExactInt::from_string(std::string_view decimal) {
  std::string_view digits = decimal;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ArgumentError("empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ArgumentError("invalid integer literal: " + std::string(decimal));
  }
  std::string text(decimal);
  if (text.front() == '+') text.erase(0, 1);
  mpz_class value;
  if (value.set_str(text, 10) != 0) throw ArgumentError("invalid integer literal: " + text);
  return ExactInt(std::move(value));
}

ExactInt ExactInt::power_of_two(std::uint64_t exponent) {
  mpz_class value;
  mpz_setbit(value.get_mpz_t(), exponent);
  return ExactInt(std::move(value));
}

std::string ExactInt::to_string() const { return value_.get_str(10); }

bool ExactInt::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t ExactInt::to_int64() const {
  if (!fits_int64()) throw ArgumentError("integer does not fit in 64 bits: " + to_string());
  return value_.get_si();
}

std::uint64_t ExactInt::trailing_zero_bits() const {
  if (is_zero()) throw ArgumentError("trailing_zero_bits of zero");
  return mpz_scan1(value_.get_mpz_t(), 0);
}

bool ExactInt::bit(std::uint64_t index) const { return mpz_tstbit(value_.get_mpz_t(), index) != 0; }

ExactInt ExactInt::shifted_left(std::uint64_t bits) const {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), value_.get_mpz_t(), bits);
  return ExactInt(std::move(out));
}

ExactInt ExactInt::shifted_right_exact(std::uint64_t bits) const {
  if (!is_zero() && trailing_zero_bits() < bits) {
    throw InvariantViolation("inexact shift of " + to_string() + " by " + std::to_string(bits));
  }
  mpz_class out;
  mpz_tdiv_q_2exp(out.get_mpz_t(), value_.get_mpz_t(), bits);
  return ExactInt(std::move(out));
}

std::uint64_t ExactInt::mod(std::uint64_t m) const {
  if (m == 0) throw ArgumentError("modulus must be positive");
  return mpz_fdiv_ui(value_.get_mpz_t(), m);
}

ExactInt ExactInt::mod_pow2(std::uint64_t bits) const {
  mpz_class out;
  mpz_fdiv_r_2exp(out.get_mpz_t(), value_.get_mpz_t(), bits);
  return ExactInt(std::move(out));
}

bool ExactInt::divisible_by(const ExactInt& divisor) const {
  return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

std::optional<ExactInt> ExactInt::exact_quotient(const ExactInt& divisor) const {
  if (divisor.is_zero() || !divisible_by(divisor)) return std::nullopt;
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return ExactInt(std::move(out));
}

ExactInt& ExactInt::operator+=(const ExactInt& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactInt& ExactInt::operator-=(const ExactInt& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactInt& ExactInt::operator*=(const ExactInt& rhs) {
  value_ *= rhs.value_;
  return *this;
}

}  // namespace involution_lab
