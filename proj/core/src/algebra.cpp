#include "involution_lab/algebra.hpp"

#include <string>

namespace involution_lab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Valuation val_p(const ExactInt& x, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("val_p: " + std::to_string(p) + " is not prime");
  if (x.is_zero()) return Valuation::infinity();
  if (p == 2) return Valuation(x.trailing_zero_bits());
  mpz_class rest;
  const mpz_class prime(static_cast<unsigned long>(p));
  const auto count = mpz_remove(rest.get_mpz_t(), x.backend().get_mpz_t(), prime.get_mpz_t());
  return Valuation(count);
}

ExactInt odd_part(const ExactInt& x) {
  if (x.is_zero()) throw ArgumentError("odd_part: zero has no odd part");
  return x.shifted_right_exact(x.trailing_zero_bits());
}

ExactInt odd_product(std::uint64_t n) { return odd_product_range(0, n); }

ExactInt odd_product_range(std::uint64_t from, std::uint64_t to) {
  mpz_class product = 1;
  for (std::uint64_t j = from; j < to; ++j) product *= static_cast<unsigned long>(2 * j + 1);
  return ExactInt(std::move(product));
}

ExactInt general_product(std::int64_t a, std::int64_t b, std::uint64_t n) {
  ExactInt product(1);
  ExactInt factor(a);
  const ExactInt step(b);
  for (std::uint64_t i = 0; i < n; ++i) {
    product *= factor;
    factor += step;
  }
  return product;
}

ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return ExactInt(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return ExactInt(std::move(out));
}

ExactInt factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return ExactInt(std::move(out));
}

}  // namespace involution_lab
