#include "involution_lab/valuations.hpp"

#include "involution_lab/algebra.hpp"
#include "involution_lab/sequences.hpp"

namespace involution_lab {

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::T: return "t";
    case SequenceKind::TSigned: return "t_signed";
    case SequenceKind::TEven: return "t_even";
    case SequenceKind::TOdd: return "t_odd";
    case SequenceKind::Tau: return "tau";
  }
  return "?";
}

ValuationReport ValuationReport::make(std::uint64_t n, SequenceKind kind, Valuation computed,
                                      std::optional<Valuation> predicted, std::uint32_t prime) {
  ValuationReport report;
  report.n = n;
  report.kind = kind;
  report.prime = prime;
  report.computed = computed;
  report.predicted = predicted;
  report.matches = predicted.has_value() && *predicted == computed;
  return report;
}

std::uint64_t pth_root_valuation_bound(std::uint64_t n, std::uint64_t p) { return n / p - n / (p * p); }

std::uint64_t ord2_t_closed(std::uint64_t n) { return n / 2 - 2 * (n / 4) + (n + 1) / 4; }

namespace {

Valuation ord2(std::uint64_t k) {
  if (k == 0) return Valuation::infinity();
  return Valuation(static_cast<std::uint64_t>(__builtin_ctzll(k)));
}

}  // namespace

bool binomial_power_bound_holds(std::uint64_t k, std::uint64_t i) {
  if (k == 0 || i == 0) throw ArgumentError("binomial_power_bound_holds requires k, i >= 1");
  const Valuation lhs = val_p(ExactInt::power_of_two(i) * binomial(k, i), 2);
  const std::uint64_t vk = ord2(k).value();
  const std::uint64_t vi = ord2(i).value();
  const bool general = lhs >= Valuation(vk + i - vi);
  const bool weak = lhs >= Valuation(vk + 1);
  const bool large_i = i < 5 || lhs >= Valuation(vk + 3);
  return general && weak && large_i;
}

Valuation ord2_signed_closed(std::uint64_t n) {
  const std::uint64_t k = n / 4;
  const std::uint64_t r = n % 4;
  if (r == 2) return ord2(k) + (k + 3);
  return Valuation(k + r / 2);
}

ExactInt t_even(std::uint64_t n) { return (t_rec(n) + t_signed(n)).shifted_right_exact(1); }

ExactInt t_odd(std::uint64_t n) { return (t_rec(n) - t_signed(n)).shifted_right_exact(1); }

std::optional<Valuation> ord2_even_closed(std::uint64_t n) {
  const std::uint64_t k = n / 4;
  switch (n % 4) {
    case 0: return Valuation(k + chi_odd(k));
    case 1: return std::nullopt;
    default: return Valuation(k);
  }
}

std::optional<Valuation> ord2_odd_closed(std::uint64_t n) {
  const std::uint64_t k = n / 4;
  switch (n % 4) {
    case 0: return std::nullopt;
    case 1: return ord2(k) + (k + chi_even(k));
    default: return Valuation(k);
  }
}

std::vector<ValuationReport> table3(std::uint64_t k_max) {
  std::vector<ValuationReport> reports;
  const std::uint64_t n_end = 4 * (k_max + 1);
  reports.reserve(4 * n_end);
  for (std::uint64_t n = 0; n < n_end; ++n) {
    reports.push_back(ValuationReport::make(n, SequenceKind::T, val_p(t_rec(n), 2), Valuation(ord2_t_closed(n))));
    reports.push_back(
        ValuationReport::make(n, SequenceKind::TSigned, val_p(t_signed(n), 2), ord2_signed_closed(n)));
    reports.push_back(ValuationReport::make(n, SequenceKind::TEven, val_p(t_even(n), 2), ord2_even_closed(n)));
    reports.push_back(ValuationReport::make(n, SequenceKind::TOdd, val_p(t_odd(n), 2), ord2_odd_closed(n)));
  }
  return reports;
}

}  // namespace involution_lab
