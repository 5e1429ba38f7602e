#pragma once

// Number-theoretic primitives shared by every module.

#include <cstdint>

#include "involution_lab/bivariate_poly.hpp"
#include "involution_lab/dyadic.hpp"
#include "involution_lab/errors.hpp"
#include "involution_lab/exact_int.hpp"
#include "involution_lab/valuation.hpp"

namespace involution_lab {

/// Trial-division primality test.
bool is_prime(std::uint64_t p);

/// Largest k with p^k | x; infinity for x == 0. Throws ArgumentError when p
/// is not prime.
Valuation val_p(const ExactInt& x, std::uint64_t p);

/// x / 2^val_2(x), sign preserved. Throws ArgumentError for x == 0.
ExactInt odd_part(const ExactInt& x);

/// 1 * 3 * 5 * ... * (2n - 1); empty product for n == 0.
ExactInt odd_product(std::uint64_t n);

/// prod_{j=from}^{to-1} (1 + 2j), i.e. odd_product(to) / odd_product(from)
/// without forming either factorial. Empty product when to <= from.
ExactInt odd_product_range(std::uint64_t from, std::uint64_t to);

/// a (a + b) (a + 2b) ... (a + (n-1) b).
ExactInt general_product(std::int64_t a, std::int64_t b, std::uint64_t n);

/// C(n, k); zero when k > n.
ExactInt binomial(std::uint64_t n, std::uint64_t k);

ExactInt factorial(std::uint64_t n);

/// Indicator of k being odd / even.
constexpr std::uint64_t chi_odd(std::uint64_t k) { return k & 1U; }
constexpr std::uint64_t chi_even(std::uint64_t k) { return 1U - (k & 1U); }

}  // namespace involution_lab
