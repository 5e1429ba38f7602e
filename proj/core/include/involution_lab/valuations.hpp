#pragma once

// Closed-form 2-adic (and p-adic lower-bound) predictions for the involution
// counts, next to the valuations actually computed from exact values.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "involution_lab/exact_int.hpp"
#include "involution_lab/valuation.hpp"

namespace involution_lab {

enum class SequenceKind { T, TSigned, TEven, TOdd, Tau };

std::string_view to_string(SequenceKind kind);

/// One computed-versus-predicted cell. `predicted` is empty where no closed
/// form is known; such a cell never matches.
struct ValuationReport {
  std::uint64_t n = 0;
  SequenceKind kind = SequenceKind::T;
  std::uint32_t prime = 2;
  Valuation computed;
  std::optional<Valuation> predicted;
  bool matches = false;

  static ValuationReport make(std::uint64_t n, SequenceKind kind, Valuation computed,
                              std::optional<Valuation> predicted, std::uint32_t prime = 2);
};

/// floor(n/p) - floor(n/p^2), a lower bound for ord_p(tau_p(n)).
std::uint64_t pth_root_valuation_bound(std::uint64_t n, std::uint64_t p);

/// ord_2(t_n) = floor(n/2) - 2 floor(n/4) + floor((n+1)/4).
std::uint64_t ord2_t_closed(std::uint64_t n);

/// ord_2(2^i C(k,i)) >= ord_2(k) + i - ord_2(i), together with the weaker
/// forms ">= ord_2(k) + 1" and, for i >= 5, ">= ord_2(k) + 3".
/// Throws ArgumentError unless k, i >= 1.
bool binomial_power_bound_holds(std::uint64_t k, std::uint64_t i);

/// Predicted ord_2(t_n(1,-1)): k + floor(r/2), or k + 3 + ord_2(k) when
/// r = 2 (infinite at n = 2).
Valuation ord2_signed_closed(std::uint64_t n);

/// Counts of even / odd involutions, (t_n(1,1) +- t_n(1,-1)) / 2.
ExactInt t_even(std::uint64_t n);
ExactInt t_odd(std::uint64_t n);

/// Predicted ord_2 of the even / odd counts where a closed form is proven;
/// empty for ord_2(t_{4k}^o) and ord_2(t_{4k+1}^e).
std::optional<Valuation> ord2_even_closed(std::uint64_t n);
std::optional<Valuation> ord2_odd_closed(std::uint64_t n);

/// Four reports (T, TSigned, TEven, TOdd) for every n < 4 (k_max + 1).
std::vector<ValuationReport> table3(std::uint64_t k_max);

}  // namespace involution_lab
