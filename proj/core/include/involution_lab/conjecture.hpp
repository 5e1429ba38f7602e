#pragma once

// Scan of ord_2 for the even-involution counts at n = 4k + 1 and the fit of
// the binary digits of a 2-adic constant rho with
//   ord_2(t^e_{4k+1}) = k + chi_o(k) (ord_2(k + rho) + 1).
// The scan reports consistency; it never claims the relation holds.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "involution_lab/valuation.hpp"

namespace involution_lab {

/// For odd k: v = ord_2(t^e_{4k+1}) - k - 1, which pins rho mod 2^(v+1).
struct RhoConstraint {
  std::uint64_t k = 0;
  std::uint64_t v = 0;

  friend bool operator==(const RhoConstraint&, const RhoConstraint&) = default;
};

struct RhoViolation {
  std::uint64_t k = 0;
  std::optional<std::uint64_t> bit;  // conflicting digit, when the failure is a digit clash
  std::string message;

  friend bool operator==(const RhoViolation&, const RhoViolation&) = default;
};

struct TwoAdicPrefix {
  std::vector<std::uint8_t> digits;  // rho_0 .. rho_{undetermined_from - 1}
  std::uint64_t confirmed_up_to_k = 0;
  std::uint64_t undetermined_from = 0;
  std::uint64_t k_max = 0;
  std::vector<RhoViolation> violations;  // sorted by (k, bit)
};

/// ord_2(t^e_{4k+1}), exact.
Valuation ord2_even_count_4k1(std::uint64_t k);

/// Constraints for odd k <= k_max, plus violations for rows that cannot be
/// expressed as a constraint: even k with ord_2 != k, and odd k whose
/// valuation is below k + 1 or infinite.
struct RhoScan {
  std::vector<RhoConstraint> constraints;
  std::vector<RhoViolation> violations;
};
RhoScan rho_constraints(std::uint64_t k_max);

/// Folds constraints into digits 0 .. bit_budget - 1. The result depends
/// only on the set of constraints, not their order. A digit claimed with
/// both values yields a violation at the larger of the two smallest
/// claiming k; the digit keeps the value of the smallest claiming k.
/// Throws ArgumentError for a budget above 64.
TwoAdicPrefix merge_rho_constraints(std::span<const RhoConstraint> constraints, std::uint64_t bit_budget,
                                    std::uint64_t k_max);

/// rho_constraints followed by merge_rho_constraints.
TwoAdicPrefix fit_rho(std::uint64_t k_max, std::uint64_t bit_budget);

}  // namespace involution_lab
