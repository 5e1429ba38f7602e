#pragma once

// Exact engines for the involution counts and their relatives, each with a
// recurrence and, where available, an independent closed form.

#include <cstddef>
#include <cstdint>

#include "involution_lab/bivariate_poly.hpp"
#include "involution_lab/exact_int.hpp"

namespace involution_lab {

/// Number of involutions of S_n by t_n = t_{n-1} + (n-1) t_{n-2}.
ExactInt t_rec(std::size_t n);

/// sum over 2i + j = n of n! / (2^i i! j!).
ExactInt t_direct(std::size_t n);

/// Number of pi in S_n with pi^p = 1, by removing the cycle through n:
/// tau(n) = tau(n-1) + (n-1)(n-2)...(n-p+1) tau(n-p). Throws ArgumentError
/// for non-prime p.
ExactInt tau_p(std::size_t n, std::uint32_t p);

/// Generating polynomial of involutions by fixed points (x) and
/// transpositions (y): t_n = x t_{n-1} + (n-1) y t_{n-2}.
BivariatePoly t_poly(std::size_t n);

/// Signed count t_n(1, -1) from its scalar recurrence.
ExactInt t_signed(std::size_t n);

/// Weight sum over the constrained graphs without doubled edges; zero for
/// negative n. Odd sizes add the extra vertex, even sizes split on the
/// neighbourhood of the last vertex.
BivariatePoly g_poly(std::int64_t n);

/// g_poly(n) at (1, 1) and (1, -1). Evaluated through the scalar
/// specialization of the same recurrence; integrality is enforced.
ExactInt g_int(std::int64_t n);
ExactInt g_alt(std::int64_t n);

/// t_n as the sum over the number of doubled edges:
/// 2^(k+h) sum_i 2^i C(k,i) [(1;2)_{k+h} / (1;2)_{i+h}] g_{4i+r},
/// n = 4k + r, h = floor(r/2).
ExactInt t_by_two_cycle_expansion(std::size_t n);

/// Polynomial version of the same expansion with the y^(2k-2i) factor.
BivariatePoly t_poly_by_two_cycle_expansion(std::size_t n);

/// Odd part of t_n.
ExactInt beta(std::size_t n);

/// Odd part of t_n from the expansion, with the extra factor 1/2 when
/// n = 3 mod 4; computed over dyadics and checked to be integral.
ExactInt beta_closed(std::size_t n);

/// beta_{n+1} from beta_{n-1} and beta_n via
/// beta_{n+1} = 2^{h(n)-h(n+1)} beta_n + 2^{h(n-1)-h(n+1)} n beta_{n-1},
/// h = ord_2(t). Throws ArgumentError if n == 0 or the result is not an
/// integer.
ExactInt beta_step(std::size_t n, const ExactInt& beta_prev, const ExactInt& beta_curr);

/// Recompute-and-compare guard over every sequence cache; true when all
/// cached prefixes (up to `count` entries each) reproduce bit-exactly.
bool sequence_caches_self_test(std::size_t count);

}  // namespace involution_lab
