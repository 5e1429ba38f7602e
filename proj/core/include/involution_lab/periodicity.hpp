#pragma once

// Eventual-period analysis of residue sequences: t_n mod m through a
// finite-state recurrence, and the odd factors beta_n mod 2^s through exact
// big-integer values.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace involution_lab {

/// Evidence backing a PeriodReport's minimality claims.
struct PeriodWitness {
  enum class Kind {
    RejectedDivisor,  // shift is a proper divisor of the period that fails at index
    Preperiod,        // shift is the period; it fails at index = preperiod - 1
  };
  Kind kind = Kind::RejectedDivisor;
  std::uint64_t shift = 0;
  std::uint64_t index = 0;
  std::uint64_t value_at_index = 0;
  std::uint64_t value_at_shifted = 0;

  friend bool operator==(const PeriodWitness&, const PeriodWitness&) = default;
};

struct PeriodReport {
  std::uint64_t modulus = 1;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  std::uint64_t window_checked = 0;
  std::vector<PeriodWitness> witnesses;
};

using RecurrenceState = std::array<std::uint64_t, 3>;

/// Residue sequence driven by a deterministic map on a finite state space,
/// so it is eventually periodic by construction.
struct ResidueRecurrence {
  std::uint64_t modulus = 1;
  RecurrenceState initial{};
  std::function<RecurrenceState(const RecurrenceState&)> advance;
  std::function<std::uint64_t(const RecurrenceState&)> residue;
};

/// t_n mod m with state (n mod m, t_{n-1} mod m, t_n mod m).
/// Throws ArgumentError unless 1 <= m <= 2^32.
ResidueRecurrence involution_residues(std::uint64_t m);

/// min(m^3 + 4m, 10^7).
std::uint64_t default_window(std::uint64_t m);

/// Exact minimal preperiod and period of a finite-state residue sequence.
/// Throws InconclusiveError when no state repeats within `window` steps.
PeriodReport detect_period(const ResidueRecurrence& seq, std::uint64_t window);

/// Minimal preperiod/period of a finite window of residues. Candidates are
/// tried in ascending order; a candidate d is accepted once it holds on a
/// stretch of at least `confirm_length` terms reaching the end of the
/// window. Every candidate must divide a period known to hold on the tail.
/// Throws InconclusiveError when no candidate is accepted.
PeriodReport analyze_window(std::span<const std::uint64_t> values, std::uint64_t modulus,
                            std::span<const std::uint64_t> candidates, std::uint64_t confirm_length);

/// Re-checks every witness against values recomputed by `fresh_value`.
bool verify_witnesses(const PeriodReport& report, const std::function<std::uint64_t(std::uint64_t)>& fresh_value);

/// Period report checked against the expected closed form.
struct PeriodCheck {
  PeriodReport report;
  std::uint64_t expected_preperiod = 0;
  std::uint64_t expected_period = 1;
  bool matches = false;
};

/// True iff t_n mod m (m odd) is purely periodic with smallest period m.
/// Throws ArgumentError for even or zero m.
bool verify_odd_modulus(std::uint64_t m, std::uint64_t window);

/// For m = 2^k l (k >= 1, l odd): expected preperiod 4k - 2, period l.
/// Throws ArgumentError for odd m.
PeriodCheck verify_even_modulus(std::uint64_t m, std::uint64_t window);

/// Expected-form check for any modulus (odd: preperiod 0, period m).
PeriodCheck check_involution_modulus(std::uint64_t m, std::uint64_t window);

/// (1;2)_{2^(s-1)} == 1 mod 2^s. Throws ArgumentError for s < 3.
bool odd_product_congruence(std::uint32_t s);

/// beta_0 .. beta_{count-1} reduced mod 2^s, from exact t_n computed by
/// streaming the recurrence (no cache). Requires 1 <= s <= 63.
std::vector<std::uint64_t> beta_residues(std::uint32_t s, std::size_t count);

/// beta_{n + 2^(s+1)} == beta_n mod 2^s for all n <= n_max.
/// Throws ArgumentError for s < 3.
bool beta_shift_congruence(std::uint32_t s, std::uint64_t n_max);

/// Smallest preperiod and period of beta_n mod 2^s over a window of
/// 3 * 2^(s+1) terms, trying only the divisors of 2^(s+1), which is known
/// to be a period. Throws ArgumentError unless 3 <= s <= 20.
PeriodReport beta_period(std::uint32_t s);

/// beta_{2^s + 2} != beta_2 mod 2^s, so 2^s is not a period of beta_n mod
/// 2^s. Throws ArgumentError for s < 3.
bool beta_half_period_witness(std::uint32_t s);

/// beta_{2^s + 2} == (1 + 2^(s-1)) beta_{2^s} mod 2^s, the two-step form of
/// the odd-part recurrence behind that witness. Throws ArgumentError for s < 3.
bool beta_two_step_identity(std::uint32_t s);

}  // namespace involution_lab
