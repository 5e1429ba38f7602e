#include "involution_lab/periodicity.hpp"

#include <algorithm>
#include <string>

#include "involution_lab/algebra.hpp"
#include "involution_lab/errors.hpp"

namespace involution_lab {

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Smallest N with values[n + d] == values[n] for every N <= n < size - d.
std::uint64_t first_index_holding(std::span<const std::uint64_t> values, std::uint64_t d) {
  std::uint64_t n = values.size() - d;
  while (n > 0 && values[n - 1 + d] == values[n - 1]) --n;
  return n;
}

std::uint64_t checked_beta_bits(std::uint32_t s, std::uint32_t max_s) {
  if (s < 3) throw ArgumentError("s must be at least 3, got " + std::to_string(s));
  if (s > max_s) throw ArgumentError("s must be at most " + std::to_string(max_s) + ", got " + std::to_string(s));
  return s;
}

}  // namespace

ResidueRecurrence involution_residues(std::uint64_t m) {
  if (m == 0 || m > (std::uint64_t{1} << 32)) {
    throw ArgumentError("modulus must lie in [1, 2^32], got " + std::to_string(m));
  }
  ResidueRecurrence seq;
  seq.modulus = m;
  seq.initial = {0, 0, 1 % m};
  // (n, t_{n-1}, t_n) -> (n + 1, t_n, t_n + n t_{n-1}); all entries < 2^32.
  seq.advance = [m](const RecurrenceState& s) -> RecurrenceState {
    return {(s[0] + 1) % m, s[2], (s[2] + (s[0] * s[1]) % m) % m};
  };
  seq.residue = [](const RecurrenceState& s) { return s[2]; };
  return seq;
}

std::uint64_t default_window(std::uint64_t m) {
  constexpr std::uint64_t cap = 10'000'000;
  if (m >= 215) return cap;  // m^3 alone passes the cap
  return std::min(m * m * m + 4 * m, cap);
}

PeriodReport detect_period(const ResidueRecurrence& seq, std::uint64_t window) {
  const auto inconclusive = [&] {
    return InconclusiveError("no state repetition for modulus " + std::to_string(seq.modulus) + " within " +
                             std::to_string(window) + " terms");
  };

  // Brent's cycle finding on the state sequence: constant memory, and it
  // walks at most about twice the distance to the first repeat.
  std::uint64_t power = 1;
  std::uint64_t cycle = 1;
  std::uint64_t steps = 1;
  RecurrenceState tortoise = seq.initial;
  RecurrenceState hare = seq.advance(tortoise);
  while (tortoise != hare) {
    if (steps > 2 * window + 2) throw inconclusive();
    if (power == cycle) {
      tortoise = hare;
      power *= 2;
      cycle = 0;
    }
    hare = seq.advance(hare);
    ++cycle;
    ++steps;
  }

  std::uint64_t start = 0;
  tortoise = seq.initial;
  hare = seq.initial;
  for (std::uint64_t i = 0; i < cycle; ++i) hare = seq.advance(hare);
  while (tortoise != hare) {
    tortoise = seq.advance(tortoise);
    hare = seq.advance(hare);
    ++start;
  }
  if (start + cycle > window) throw inconclusive();

  // The states repeat with period `cycle` from index `start`, so the
  // residues do too; two full cycles past `start` decide every divisor.
  std::vector<std::uint64_t> values;
  values.reserve(start + 2 * cycle);
  RecurrenceState state = seq.initial;
  for (std::uint64_t n = 0; n < start + 2 * cycle; ++n) {
    values.push_back(seq.residue(state));
    state = seq.advance(state);
  }
  const std::vector<std::uint64_t> candidates = divisors(cycle);
  return analyze_window(values, seq.modulus, candidates, cycle);
}

PeriodReport analyze_window(std::span<const std::uint64_t> values, std::uint64_t modulus,
                            std::span<const std::uint64_t> candidates, std::uint64_t confirm_length) {
  const std::uint64_t size = values.size();
  PeriodReport report;
  report.modulus = modulus;
  report.window_checked = size;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> rejected;  // (shift, failing index)
  for (const std::uint64_t d : candidates) {
    if (d == 0 || d + confirm_length > size) {
      throw InconclusiveError("window of " + std::to_string(size) + " terms is too short for period candidate " +
                              std::to_string(d));
    }
    const std::uint64_t holds_from = first_index_holding(values, d);
    if (size - d - holds_from < confirm_length) {
      rejected.emplace_back(d, holds_from - 1);
      continue;
    }
    report.period = d;
    report.preperiod = holds_from;
    for (const auto& [shift, index] : rejected) {
      if (d % shift != 0) continue;
      report.witnesses.push_back(
          {PeriodWitness::Kind::RejectedDivisor, shift, index, values[index], values[index + shift]});
    }
    if (holds_from > 0) {
      const std::uint64_t index = holds_from - 1;
      report.witnesses.push_back({PeriodWitness::Kind::Preperiod, d, index, values[index], values[index + d]});
    }
    return report;
  }
  throw InconclusiveError("no candidate period confirmed for modulus " + std::to_string(modulus));
}

bool verify_witnesses(const PeriodReport& report,
                      const std::function<std::uint64_t(std::uint64_t)>& fresh_value) {
  for (const auto& w : report.witnesses) {
    if (w.index + w.shift >= report.window_checked) return false;
    const std::uint64_t a = fresh_value(w.index);
    const std::uint64_t b = fresh_value(w.index + w.shift);
    if (a != w.value_at_index || b != w.value_at_shifted || a == b) return false;
    if (w.kind == PeriodWitness::Kind::Preperiod &&
        (w.shift != report.period || w.index + 1 != report.preperiod)) {
      return false;
    }
    if (w.kind == PeriodWitness::Kind::RejectedDivisor &&
        (w.shift >= report.period || report.period % w.shift != 0)) {
      return false;
    }
  }
  return true;
}

bool verify_odd_modulus(std::uint64_t m, std::uint64_t window) {
  if (m == 0 || m % 2 == 0) throw ArgumentError("modulus must be odd, got " + std::to_string(m));
  const PeriodReport report = detect_period(involution_residues(m), window);
  return report.preperiod == 0 && report.period == m;
}

PeriodCheck verify_even_modulus(std::uint64_t m, std::uint64_t window) {
  if (m == 0 || m % 2 != 0) throw ArgumentError("modulus must be even, got " + std::to_string(m));
  const auto k = static_cast<std::uint64_t>(__builtin_ctzll(m));
  PeriodCheck check;
  check.report = detect_period(involution_residues(m), window);
  check.expected_preperiod = 4 * k - 2;
  check.expected_period = m >> k;
  check.matches =
      check.report.preperiod == check.expected_preperiod && check.report.period == check.expected_period;
  return check;
}

PeriodCheck check_involution_modulus(std::uint64_t m, std::uint64_t window) {
  if (m % 2 == 0) return verify_even_modulus(m, window);
  PeriodCheck check;
  check.report = detect_period(involution_residues(m), window);
  check.expected_preperiod = 0;
  check.expected_period = m;
  check.matches = check.report.preperiod == 0 && check.report.period == m;
  return check;
}

bool odd_product_congruence(std::uint32_t s) {
  if (s < 3) throw ArgumentError("s must be at least 3, got " + std::to_string(s));
  if (s > 40) throw ArgumentError("s must be at most 40, got " + std::to_string(s));
  return odd_product(std::uint64_t{1} << (s - 1)).mod_pow2(s) == ExactInt(1);
}

std::vector<std::uint64_t> beta_residues(std::uint32_t s, std::size_t count) {
  if (s == 0 || s > 63) throw ArgumentError("s must lie in [1, 63], got " + std::to_string(s));
  const std::uint64_t modulus = std::uint64_t{1} << s;
  std::vector<std::uint64_t> out;
  out.reserve(count);
  ExactInt previous(0);  // t_{-1}
  ExactInt current(1);   // t_0
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(odd_part(current).mod(modulus));
    ExactInt next = current + ExactInt(static_cast<std::int64_t>(n)) * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return out;
}

bool beta_shift_congruence(std::uint32_t s, std::uint64_t n_max) {
  checked_beta_bits(s, 24);
  const std::uint64_t shift = std::uint64_t{1} << (s + 1);
  const std::vector<std::uint64_t> b = beta_residues(s, n_max + shift + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (b[n + shift] != b[n]) return false;
  }
  return true;
}

PeriodReport beta_period(std::uint32_t s) {
  checked_beta_bits(s, 20);
  const std::uint64_t known_period = std::uint64_t{1} << (s + 1);
  const std::vector<std::uint64_t> values = beta_residues(s, 3 * known_period);
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t d = 1; d <= known_period; d *= 2) candidates.push_back(d);
  return analyze_window(values, std::uint64_t{1} << s, candidates, known_period);
}

bool beta_half_period_witness(std::uint32_t s) {
  checked_beta_bits(s, 24);
  const std::uint64_t modulus = std::uint64_t{1} << s;
  const std::vector<std::uint64_t> b = beta_residues(s, modulus + 3);
  return b[modulus + 2] != b[2];
}

bool beta_two_step_identity(std::uint32_t s) {
  checked_beta_bits(s, 24);
  const std::uint64_t modulus = std::uint64_t{1} << s;
  const std::vector<std::uint64_t> b = beta_residues(s, modulus + 3);
  return ((1 + modulus / 2) * b[modulus]) % modulus == b[modulus + 2];
}

}  // namespace involution_lab
