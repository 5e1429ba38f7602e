// Acceptance runner: one exact check per criterion, each with a wall-clock
// limit. Prints "Cxx PASS|FAIL (elapsed, limit)" and a detail line on
// failure. Exit code 0 only if every selected criterion passes.

#include <chrono>
#include <cstring>
#include <iomanip>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "involution_lab/algebra.hpp"
#include "involution_lab/conjecture.hpp"
#include "involution_lab/enumeration.hpp"
#include "involution_lab/golden_tables.hpp"
#include "involution_lab/periodicity.hpp"
#include "involution_lab/sequences.hpp"
#include "involution_lab/valuations.hpp"

using namespace involution_lab;

namespace {

// Returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string()>;

struct Criterion {
  const char* id;
  const char* summary;
  double limit_seconds;
  Check run;
};

template <typename T>
std::string str(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string c01_tables() {
  std::string failures;
  for (std::int64_t n = 0; n <= 21; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const ExactInt plus = g_int(n);
    if (plus != ExactInt(golden::table1_g_plus[i])) {
      failures += "g_" + str(n) + "(1,1) = " + plus.to_string() + " but the table prints " +
                  str(golden::table1_g_plus[i]) + "; ";
    }
    const ExactInt minus = g_alt(n);
    if (minus != ExactInt(golden::table2_g_minus[i])) {
      failures += "g_" + str(n) + "(1,-1) = " + minus.to_string() + " but the table prints " +
                  str(golden::table2_g_minus[i]) + "; ";
    }
  }
  if (failures.size() >= 2) failures.resize(failures.size() - 2);
  return failures;
}

std::string c02_graph_oracle() {
  for (std::int64_t n = 0; n <= 13; ++n) {
    if (g_poly(n) != g_poly_bruteforce(static_cast<std::uint32_t>(n))) return "g_poly differs from brute force at n = " + str(n);
  }
  return {};
}

std::string c03_fiber_law() {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> cases{{2, 10}, {3, 9}, {5, 7}};
  for (const auto& [p, n_max] : cases) {
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      const auto roots = enumerate_pth_roots(n, p);
      ExactInt total;
      for (const auto& [h, members] : group_by_refined_class(roots, p)) {
        const ExactInt size = class_size_formula(h, p, n);
        if (size != ExactInt(static_cast<std::int64_t>(members.size()))) {
          return "class size formula off at p = " + str(p) + ", n = " + str(n);
        }
        total += size;
      }
      if (total != tau_p(n, p)) return "class sizes do not sum to tau at p = " + str(p) + ", n = " + str(n);
    }
  }
  return {};
}

std::string c04_involution_valuation() {
  for (std::uint64_t n = 0; n <= 2000; ++n) {
    if (val_p(t_rec(n), 2) != Valuation(ord2_t_closed(n))) return "ord_2(t_n) off at n = " + str(n);
  }
  for (std::size_t n = 0; n <= 400; ++n) {
    if (beta(n) != beta_closed(n)) return "odd part closed form off at n = " + str(n);
  }
  return {};
}

std::string c05_root_bound() {
  for (const std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (std::uint64_t n = 0; n <= 500; ++n) {
      if (val_p(tau_p(n, p), p) < Valuation(pth_root_valuation_bound(n, p))) {
        return "bound fails at p = " + str(p) + ", n = " + str(n);
      }
    }
  }
  return {};
}

std::string c06_expansion_identity() {
  for (std::size_t n = 0; n <= 80; ++n) {
    const BivariatePoly t = t_poly(n);
    if (t_poly_by_two_cycle_expansion(n) != t) return "expansion differs at n = " + str(n);
    std::size_t terms = 0;
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
      const auto expected = factorial(n).exact_quotient(ExactInt::power_of_two(i) * factorial(i) * factorial(n - 2 * i));
      if (!expected) return "n!/(2^i i! (n-2i)!) is not an integer at n = " + str(n);
      if (t.coefficient(static_cast<std::uint32_t>(n - 2 * i), static_cast<std::uint32_t>(i)) != Dyadic(*expected)) {
        return "coefficient of x^" + str(n - 2 * i) + " y^" + str(i) + " off at n = " + str(n);
      }
      ++terms;
    }
    if (t.term_count() != terms) return "unexpected extra terms at n = " + str(n);
  }
  return {};
}

std::string c07_signed_and_parity_valuations() {
  for (const auto& r : table3(500)) {
    if (!r.predicted) continue;
    if (!r.matches) {
      return std::string(to_string(r.kind)) + " at n = " + str(r.n) + ": computed " + r.computed.to_string() +
             ", predicted " + r.predicted->to_string();
    }
  }
  if (!val_p(t_signed(2), 2).is_infinite()) return "t_2(1,-1) should vanish";
  return {};
}

std::string c08_periodicity() {
  for (std::uint64_t m = 1; m <= 99; m += 2) {
    if (!verify_odd_modulus(m, default_window(m))) return "odd modulus " + str(m) + " is not purely periodic with period m";
  }
  for (std::uint64_t m = 2; m <= 96; m += 2) {
    const PeriodCheck check = verify_even_modulus(m, default_window(m));
    if (!check.matches) {
      return "modulus " + str(m) + ": preperiod " + str(check.report.preperiod) + ", period " +
             str(check.report.period) + " (expected " + str(check.expected_preperiod) + ", " +
             str(check.expected_period) + ")";
    }
  }
  for (std::uint32_t s = 3; s <= 6; ++s) {
    const PeriodReport r = beta_period(s);
    if (r.preperiod != 0 || r.period != (2ULL << s)) {
      return "odd parts mod 2^" + str(s) + ": preperiod " + str(r.preperiod) + ", period " + str(r.period);
    }
    if (!beta_half_period_witness(s)) return "2^" + str(s) + " is a period of the odd parts mod 2^" + str(s);
  }
  return {};
}

std::string c09_odd_product() {
  for (std::uint32_t s = 3; s <= 16; ++s) {
    if (!odd_product_congruence(s)) return "congruence fails at s = " + str(s);
  }
  return {};
}

std::string c10_rho() {
  const TwoAdicPrefix prefix = fit_rho(1000, 11);
  const std::vector<std::uint8_t> expected{1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1};
  if (!prefix.violations.empty()) {
    return str(prefix.violations.size()) + " violations, first at k = " + str(prefix.violations.front().k);
  }
  if (prefix.digits != expected) {
    std::string got;
    for (const auto d : prefix.digits) got += str(int{d});
    return "digits " + got;
  }
  return {};
}

std::string c11_cross_engine() {
  for (std::size_t n = 0; n <= 400; ++n) {
    const ExactInt t = t_rec(n);
    if (t_direct(n) != t) return "direct sum differs at n = " + str(n);
    if (t_poly(n).evaluate(Dyadic(1), Dyadic(1)) != Dyadic(t)) return "polynomial at (1,1) differs at n = " + str(n);
    if (t_by_two_cycle_expansion(n) != t) return "doubled-edge expansion differs at n = " + str(n);
  }
  for (std::uint32_t n = 0; n <= 12; ++n) {
    ExactInt total;
    for (const auto& g : enumerate_graphs(n)) total += fiber_size_2(g, n);
    if (total != t_rec(n)) return "graph fibers do not sum to t_n at n = " + str(n);
  }
  return {};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"C01", "graph sums against the printed tables", 1.0, c01_tables},
      {"C02", "graph recurrence against brute force, n <= 13", 120.0, c02_graph_oracle},
      {"C03", "fiber law for pth roots", 120.0, c03_fiber_law},
      {"C04", "2-adic valuation of t_n and odd-part closed form", 30.0, c04_involution_valuation},
      {"C05", "lower bound for ord_p of root counts", 30.0, c05_root_bound},
      {"C06", "doubled-edge expansion of the involution polynomial", 30.0, c06_expansion_identity},
      {"C07", "signed, even and odd valuations, k <= 500", 60.0, c07_signed_and_parity_valuations},
      {"C08", "periods of t_n mod m and odd parts mod 2^s", 120.0, c08_periodicity},
      {"C09", "odd product congruence, 3 <= s <= 16", 5.0, c09_odd_product},
      {"C10", "rho digit prefix for k <= 1000", 60.0, c10_rho},
      {"C11", "cross-engine consistency", 60.0, c11_cross_engine},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    failure = c.run();
  } catch (const std::exception& e) {
    failure = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && elapsed > c.limit_seconds) failure = "exceeded the time limit";
  const bool pass = failure.empty();
  std::cout << c.id << ' ' << (pass ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(3) << elapsed << " s, limit " << std::setprecision(0) << c.limit_seconds
            << " s) " << c.summary << '\n';
  if (!pass) std::cout << "  " << failure << '\n';
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::string> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0] << " [--criterion Cxx]\n";
      return 2;
    }
  }
  bool all_passed = true;
  bool matched = false;
  for (const auto& c : criteria()) {
    if (only && *only != c.id) continue;
    matched = true;
    all_passed = run_one(c) && all_passed;
  }
  if (!matched) {
    std::cerr << "unknown criterion " << *only << '\n';
    return 2;
  }
  return all_passed ? 0 : 1;
}
