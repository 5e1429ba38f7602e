#include "involution_lab/conjecture.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>

#include "involution_lab/algebra.hpp"
#include "involution_lab/valuations.hpp"

namespace involution_lab {

namespace {

constexpr std::uint64_t no_claim = std::numeric_limits<std::uint64_t>::max();

// Bit b (b <= v, b < 64) of (2^v - k) mod 2^(v+1). Wrapping uint64
// arithmetic agrees with it on every bit below 64.
std::uint8_t pinned_bit(const RhoConstraint& c, std::uint64_t b) {
  const std::uint64_t power = c.v < 64 ? std::uint64_t{1} << c.v : 0;
  return static_cast<std::uint8_t>(((power - c.k) >> b) & 1U);
}

void sort_and_confirm(TwoAdicPrefix& prefix) {
  std::sort(prefix.violations.begin(), prefix.violations.end(),
            [](const RhoViolation& a, const RhoViolation& b) { return std::tie(a.k, a.bit) < std::tie(b.k, b.bit); });
  prefix.confirmed_up_to_k = prefix.k_max;
  if (!prefix.violations.empty()) {
    const std::uint64_t first = prefix.violations.front().k;
    prefix.confirmed_up_to_k = first == 0 ? 0 : first - 1;
  }
}

}  // namespace

Valuation ord2_even_count_4k1(std::uint64_t k) { return val_p(t_even(4 * k + 1), 2); }

RhoScan rho_constraints(std::uint64_t k_max) {
  RhoScan scan;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const Valuation ord = ord2_even_count_4k1(k);
    if (k % 2 == 0) {
      if (ord != Valuation(k)) {
        scan.violations.push_back(
            {k, std::nullopt, "even k: ord_2 is " + ord.to_string() + ", expected " + std::to_string(k)});
      }
      continue;
    }
    if (ord.is_infinite() || ord.value() < k + 1) {
      scan.violations.push_back(
          {k, std::nullopt, "odd k: ord_2 is " + ord.to_string() + ", below the minimum " + std::to_string(k + 1)});
      continue;
    }
    scan.constraints.push_back({k, ord.value() - k - 1});
  }
  return scan;
}

TwoAdicPrefix merge_rho_constraints(std::span<const RhoConstraint> constraints, std::uint64_t bit_budget,
                                    std::uint64_t k_max) {
  if (bit_budget > 64) throw ArgumentError("bit budget must be at most 64");
  // claims[b][d]: smallest k whose constraint forces digit b to d.
  std::vector<std::array<std::uint64_t, 2>> claims(bit_budget, {no_claim, no_claim});
  for (const auto& c : constraints) {
    const std::uint64_t top = std::min(c.v + 1, bit_budget);
    for (std::uint64_t b = 0; b < top; ++b) {
      auto& slot = claims[b][pinned_bit(c, b)];
      slot = std::min(slot, c.k);
    }
  }

  TwoAdicPrefix prefix;
  prefix.k_max = k_max;
  prefix.undetermined_from = bit_budget;
  for (std::uint64_t b = 0; b < bit_budget; ++b) {
    const auto [zero, one] = claims[b];
    if (zero == no_claim && one == no_claim) {
      prefix.undetermined_from = b;
      break;
    }
    prefix.digits.push_back(one < zero ? 1 : 0);
    if (zero != no_claim && one != no_claim) {
      prefix.violations.push_back({std::max(zero, one), b,
                                   "digit " + std::to_string(b) + " forced to both 0 (k = " + std::to_string(zero) +
                                       ") and 1 (k = " + std::to_string(one) + ")"});
    }
  }
  // Claims past an undetermined digit cannot occur: every constraint pins a
  // prefix of the digits.

  sort_and_confirm(prefix);
  return prefix;
}

TwoAdicPrefix fit_rho(std::uint64_t k_max, std::uint64_t bit_budget) {
  const RhoScan scan = rho_constraints(k_max);
  TwoAdicPrefix prefix = merge_rho_constraints(scan.constraints, bit_budget, k_max);
  prefix.violations.insert(prefix.violations.end(), scan.violations.begin(), scan.violations.end());
  sort_and_confirm(prefix);
  return prefix;
}

}  // namespace involution_lab
