#include "involution_lab/dyadic.hpp"

#include <algorithm>

#include "involution_lab/errors.hpp"

namespace involution_lab {

Dyadic Dyadic::from_parts(ExactInt numerator, std::int64_t exponent) {
  Dyadic d;
  if (exponent < 0) {
    d.numerator_ = numerator.shifted_left(static_cast<std::uint64_t>(-exponent));
  } else {
    d.numerator_ = std::move(numerator);
    d.exponent_ = static_cast<std::uint64_t>(exponent);
  }
  d.normalize();
  return d;
}

void Dyadic::normalize() {
  if (numerator_.is_zero()) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) return;
  const std::uint64_t shift = std::min(exponent_, numerator_.trailing_zero_bits());
  if (shift > 0) {
    numerator_ = numerator_.shifted_right_exact(shift);
    exponent_ -= shift;
  }
}

std::optional<ExactInt> Dyadic::as_integer() const {
  if (!is_integer()) return std::nullopt;
  return numerator_;
}

ExactInt Dyadic::to_integer(const char* context) const {
  if (!is_integer()) throw InvariantViolation(std::string(context) + " is not an integer: " + to_string());
  return numerator_;
}

Dyadic Dyadic::scaled_by_power_of_two(std::int64_t shift) const {
  return from_parts(numerator_, static_cast<std::int64_t>(exponent_) - shift);
}

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return numerator_.to_string();
  return numerator_.to_string() + "/" + ExactInt::power_of_two(exponent_).to_string();
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (exponent_ >= rhs.exponent_) {
    numerator_ += rhs.numerator_.shifted_left(exponent_ - rhs.exponent_);
  } else {
    numerator_ = numerator_.shifted_left(rhs.exponent_ - exponent_) + rhs.numerator_;
    exponent_ = rhs.exponent_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  numerator_ *= rhs.numerator_;
  exponent_ += rhs.exponent_;
  normalize();
  return *this;
}

std::optional<Dyadic> divide_exact(const Dyadic& a, const Dyadic& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Dyadic();
  // a / b = (na / nb_odd) * 2^(eb - ea - v2(nb))
  const std::uint64_t twos = b.numerator().trailing_zero_bits();
  const ExactInt odd = b.numerator().shifted_right_exact(twos);
  auto quotient = a.numerator().exact_quotient(odd);
  if (!quotient) return std::nullopt;
  const auto exponent = static_cast<std::int64_t>(a.exponent()) + static_cast<std::int64_t>(twos) -
                        static_cast<std::int64_t>(b.exponent());
  return Dyadic::from_parts(std::move(*quotient), exponent);
}

}  // namespace involution_lab
