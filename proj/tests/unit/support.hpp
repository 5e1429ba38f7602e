#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library's closed forms; everything is a direct count or a naive
// loop.

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "involution_lab/dyadic.hpp"
#include "involution_lab/exact_int.hpp"
#include "involution_lab/valuation.hpp"

// Readable gtest failure messages for the value types.
namespace involution_lab {
inline void PrintTo(const ExactInt& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const Dyadic& x, std::ostream* os) { *os << x.to_string(); }
inline void PrintTo(const Valuation& x, std::ostream* os) { *os << x.to_string(); }
}  // namespace involution_lab

namespace oracle {

using involution_lab::ExactInt;

/// Repeated exact division by p. Returns -1 for zero.
std::int64_t naive_ord(const ExactInt& x, std::uint64_t p);

/// Carries when adding k and n - k in base p (Kummer), i.e. ord_p C(n, k).
std::uint64_t kummer_carries(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// All permutations of 1..n (one-indexed images) with pi^order = id, by
/// walking every permutation.
std::vector<std::vector<std::uint32_t>> filtered_roots(std::uint32_t n, std::uint32_t order);

/// Involutions of S_n split by sign: {even, odd}.
std::pair<std::uint64_t, std::uint64_t> involutions_by_sign(std::uint32_t n);

/// Smallest (preperiod, period) of a finite window by trying every pair;
/// a candidate counts once it holds on at least `confirm` trailing terms.
std::pair<std::uint64_t, std::uint64_t> naive_eventual_period(const std::vector<std::uint64_t>& values,
                                                              std::uint64_t confirm);

/// g_n(1,1) and g_n(1,-1) for 0 <= n <= 21 as computed by direct graph
/// counting in an independent prototype.
extern const std::vector<std::int64_t> verified_g_plus;
extern const std::vector<std::int64_t> verified_g_minus;

/// Fixed-seed engine so failures reproduce.
std::mt19937_64 engine(std::uint64_t salt = 0);

}  // namespace oracle
