#include "involution_lab/checks.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "involution_lab/algebra.hpp"
#include "involution_lab/golden_tables.hpp"
#include "involution_lab/periodicity.hpp"
#include "involution_lab/sequences.hpp"
#include "involution_lab/valuations.hpp"

namespace involution_lab {

namespace {

// Counts checked instances and keeps the first failure.
class Batch {
 public:
  explicit Batch(std::string name) { outcome_.name = std::move(name); }

  bool failed() const { return !outcome_.passed; }

  // Returns false once the batch has failed so loops can bail out.
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++instances_;
    if (!ok && outcome_.passed) {
      outcome_.passed = false;
      outcome_.counterexample = describe();
    }
    return outcome_.passed;
  }

  CheckOutcome finish(const std::string& scope) {
    outcome_.detail = scope + " (" + std::to_string(instances_) + " instances)";
    return std::move(outcome_);
  }

 private:
  CheckOutcome outcome_;
  std::uint64_t instances_ = 0;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

// Compares every cell, so all disagreeing cells are named, not only the first.
CheckOutcome golden_row(const std::string& name, const std::array<std::int64_t, 22>& printed,
                        ExactInt (*computed)(std::int64_t)) {
  Batch batch(name);
  std::string cells;
  for (std::int64_t n = 0; n < static_cast<std::int64_t>(printed.size()); ++n) {
    const ExactInt value = computed(n);
    const ExactInt expected(printed[static_cast<std::size_t>(n)]);
    if (value != expected) cells += (cells.empty() ? "" : ",") + std::to_string(n);
    batch.expect(value == expected, [&] {
      return name + " cell n=" + std::to_string(n) + ": printed " + expected.to_string() + ", recurrence gives " +
             value.to_string();
    });
  }
  CheckOutcome out = batch.finish("n = 0..21 against the printed table");
  if (!out.passed) out.detail += "; disagreeing cells n = " + cells;
  return out;
}

CheckOutcome check_table1(const CheckParams&) { return golden_row("table1", golden::table1_g_plus, g_int); }
CheckOutcome check_table2(const CheckParams&) { return golden_row("table2", golden::table2_g_minus, g_alt); }

// Fiber law for pth roots: each refined class has the closed-form size and
// the sizes add up to tau_p(n).
CheckOutcome check_lemma21(const CheckParams& params) {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> cases{{2, 10}, {3, 9}, {5, 7}};
  if (params.p) cases = {{*params.p, params.n_max.value_or(8)}};
  else if (params.n_max) for (auto& c : cases) c.second = std::min(c.second, *params.n_max);
  Batch batch("lemma21");
  std::string scope;
  for (const auto& [p, n_max] : cases) {
    if (!is_prime(p)) throw ArgumentError("--p must be prime, got " + str(p));
    scope += (scope.empty() ? "" : ", ") + std::string("p=") + str(p) + " n<=" + str(n_max);
    for (std::uint32_t n = 0; n <= n_max && !batch.failed(); ++n) {
      const auto roots = enumerate_pth_roots(n, p, params.limits);
      const auto groups = group_by_refined_class(roots, p);
      ExactInt total;
      for (const auto& [h, members] : groups) {
        validate_class(h, p, n);
        const ExactInt formula = class_size_formula(h, p, n);
        total += formula;
        if (!batch.expect(formula == ExactInt(static_cast<std::int64_t>(members.size())), [&] {
              return "p=" + str(p) + " n=" + str(n) + ": class of size " + str(members.size()) + " but formula gives " +
                     formula.to_string();
            })) {
          break;
        }
      }
      batch.expect(total == tau_p(n, p), [&] {
        return "p=" + str(p) + " n=" + str(n) + ": class sizes sum to " + total.to_string() + ", tau_p(n) = " +
               tau_p(n, p).to_string();
      });
      batch.expect(ExactInt(static_cast<std::int64_t>(roots.size())) == tau_p(n, p), [&] {
        return "p=" + str(p) + " n=" + str(n) + ": enumerated " + str(roots.size()) + " roots";
      });
    }
  }
  return batch.finish(scope);
}

CheckOutcome check_thm23(const CheckParams& params) {
  const std::uint64_t n_max = params.n_max.value_or(500);
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  if (params.p) primes = {*params.p};
  Batch batch("thm23");
  for (const std::uint32_t p : primes) {
    if (!is_prime(p)) throw ArgumentError("--p must be prime, got " + str(p));
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      const Valuation v = val_p(tau_p(n, p), p);
      const std::uint64_t bound = pth_root_valuation_bound(n, p);
      if (!batch.expect(v >= Valuation(bound), [&] {
            return "p=" + str(p) + " n=" + str(n) + ": ord_p = " + v.to_string() + " < bound " + str(bound);
          })) {
        break;
      }
    }
  }
  return batch.finish("ord_p(tau_p(n)) >= floor(n/p) - floor(n/p^2), n <= " + str(n_max));
}

// Involution classes versus constrained graphs, fiber sizes and the
// per-fiber weight averages.
CheckOutcome check_cor31(const CheckParams& params) {
  const std::uint64_t n_max = params.n_max.value_or(12);
  Batch batch("cor31");
  for (std::uint32_t n = 0; n <= n_max && !batch.failed(); ++n) {
    const auto involutions = enumerate_pth_roots(n, 2, params.limits);
    const auto groups = group_by_refined_class(involutions, 2);
    std::set<ConstrainedGraph> seen;
    for (const auto& [h, members] : groups) {
      const ConstrainedGraph g = graph_of_class(h, n);
      seen.insert(g);
      const ExactInt expected = fiber_size_2(g, n);
      if (!batch.expect(expected == ExactInt(static_cast<std::int64_t>(members.size())), [&] {
            return "n=" + str(n) + ": fiber of size " + str(members.size()) + ", expected " + expected.to_string();
          })) {
        break;
      }
      batch.expect(class_of_graph(g, n) == h, [&] { return "n=" + str(n) + ": class/graph round trip differs"; });
    }
    const auto graphs = enumerate_graphs(n, params.limits);
    const std::set<ConstrainedGraph> listed(graphs.begin(), graphs.end());
    batch.expect(listed.size() == graphs.size() && listed == seen, [&] {
      return "n=" + str(n) + ": " + str(graphs.size()) + " generated graphs vs " + str(seen.size()) + " classes";
    });
    ExactInt total;
    for (const auto& g : graphs) total += fiber_size_2(g, n);
    batch.expect(total == t_rec(n), [&] {
      return "n=" + str(n) + ": fibers sum to " + total.to_string() + ", t_n = " + t_rec(n).to_string();
    });
  }
  return batch.finish("fiber sizes 2^(floor(n/2) - s) and class/graph bijection, n <= " + str(n_max));
}

CheckOutcome check_weights(const CheckParams& params) {
  const std::uint64_t n_max = params.n_max.value_or(10);
  Batch batch("weights");
  for (std::uint32_t n = 0; n <= n_max && !batch.failed(); ++n) {
    const auto groups = group_by_refined_class(enumerate_pth_roots(n, 2, params.limits), 2);
    BivariatePoly total;
    for (const auto& [h, members] : groups) {
      BivariatePoly fiber_sum;
      for (const auto& pi : members) fiber_sum += weight_of_permutation(pi);
      const ConstrainedGraph g = graph_of_class(h, n);
      const BivariatePoly average =
          weight_of_graph(g, n).scaled(Dyadic(ExactInt(static_cast<std::int64_t>(members.size()))));
      total += average;
      if (!batch.expect(fiber_sum == average, [&] {
            return "n=" + str(n) + ": fiber weight sum " + fiber_sum.to_string() + " != |fiber| wt(G) = " +
                   average.to_string();
          })) {
        break;
      }
    }
    batch.expect(total == t_poly(n), [&] { return "n=" + str(n) + ": sum of weights differs from t_n(x,y)"; });
  }
  return batch.finish("sum of wt(pi) over a fiber equals |fiber| wt(G), n <= " + str(n_max));
}

CheckOutcome check_thm32(const CheckParams& params) {
  const std::uint64_t n_max = params.n_max.value_or(400);
  Batch batch("thm32");
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const ExactInt expanded = t_by_two_cycle_expansion(n);
    if (!batch.expect(expanded == t_rec(n), [&] {
          return "n=" + str(n) + ": expansion gives " + expanded.to_string() + ", recurrence " + t_rec(n).to_string();
        })) {
      break;
    }
  }
  // Graph counts by number of doubled edges: C(floor(n/2), 2i) (1;2)_i g_{n-4i}.
  const std::uint64_t graph_max = std::min<std::uint64_t>(n_max, 12);
  for (std::uint32_t n = 0; n <= graph_max && !batch.failed(); ++n) {
    std::map<std::uint32_t, std::uint64_t> by_doubled;
    for (const auto& g : enumerate_graphs(n, params.limits)) ++by_doubled[two_cycle_count(g)];
    for (std::uint64_t i = 0; 4 * i <= n; ++i) {
      const ExactInt predicted = binomial(n / 2, 2 * i) * odd_product(i) * g_int(static_cast<std::int64_t>(n - 4 * i));
      const ExactInt counted(static_cast<std::int64_t>(by_doubled[static_cast<std::uint32_t>(i)]));
      batch.expect(predicted == counted, [&] {
        return "n=" + str(n) + ": " + counted.to_string() + " graphs with " + str(i) + " doubled edges, formula " +
               predicted.to_string();
      });
    }
  }
  return batch.finish("doubled-edge expansion of t_n, n <= " + str(n_max) + "; graph counts n <= " + str(graph_max));
}

CheckOutcome check_thm33(const CheckParams& params) {
  const std::uint64_t n_max = params.n_max.value_or(2000);
  const std::uint64_t beta_max = std::min<std::uint64_t>(n_max, 400);
  Batch batch("thm33");
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const Valuation v = val_p(t_rec(n), 2);
    if (!batch.expect(v == Valuation(ord2_t_closed(n)), [&] {
          return "n=" + str(n) + ": ord_2(t_n) = " + v.to_string() + ", closed form " + str(ord2_t_closed(n));
        })) {
      break;
    }
  }
  for (std::uint64_t n = 0; n <= beta_max && !batch.failed(); ++n) {
    const ExactInt b = beta(n);
    batch.expect(b.is_odd() && b == beta_closed(n), [&] {
      return "n=" + str(n) + ": beta = " + b.to_string() + ", closed form " + beta_closed(n).to_string();
    });
  }
  return batch.finish("ord_2(t_n) for n <= " + str(n_max) + ", beta_n closed form for n <= " + str(beta_max));
}

CheckOutcome check_thm41(const CheckParams& params) {
  const std::uint64_t n_max = params.n_max.value_or(80);
  Batch batch("thm41");
  for (std::uint64_t n = 0; n <= n_max && !batch.failed(); ++n) {
    const BivariatePoly direct = t_poly(n);
    batch.expect(t_poly_by_two_cycle_expansion(n) == direct,
                 [&] { return "n=" + str(n) + ": expansion differs from the recurrence"; });
    batch.expect(direct.term_count() == n / 2 + 1,
                 [&] { return "n=" + str(n) + ": " + str(direct.term_count()) + " terms"; });
    for (std::uint64_t i = 0; 2 * i <= n; ++i) {
      const ExactInt expected = *factorial(n).exact_quotient(ExactInt::power_of_two(i) * factorial(i) * factorial(n - 2 * i));
      const Dyadic c = direct.coefficient(static_cast<std::uint32_t>(n - 2 * i), static_cast<std::uint32_t>(i));
      if (!batch.expect(c == Dyadic(expected), [&] {
            return "n=" + str(n) + ": coefficient of x^" + str(n - 2 * i) + " y^" + str(i) + " is " + c.to_string();
          })) {
        break;
      }
    }
  }
  return batch.finish("t_n(x,y) expansion and coefficients n!/(2^i i! (n-2i)!), n <= " + str(n_max));
}

CheckOutcome check_prop42(const CheckParams& params) {
  const std::uint64_t n_max = params.n_max.value_or(13);
  Batch batch("prop42");
  for (std::uint32_t n = 0; n <= n_max && !batch.failed(); ++n) {
    const BivariatePoly recurrence = g_poly(n);
    const BivariatePoly brute = g_poly_bruteforce(n, params.limits);
    batch.expect(recurrence == brute, [&] {
      return "n=" + str(n) + ": recurrence " + recurrence.to_string() + ", graph sum " + brute.to_string();
    });
    batch.expect(g_int(n) == g_bruteforce(n, params.limits), [&] {
      return "n=" + str(n) + ": g_n = " + g_int(n).to_string() + ", graph count " + g_bruteforce(n, params.limits).to_string();
    });
    batch.expect(recurrence.evaluate(Dyadic(1), Dyadic(-1)) == Dyadic(g_alt(n)),
                 [&] { return "n=" + str(n) + ": g_n(1,-1) disagrees with the scalar recurrence"; });
  }
  return batch.finish("g_n(x,y) recurrence against the graph weight sum, n <= " + str(n_max));
}

CheckOutcome check_lemma51(const CheckParams& params) {
  const std::uint64_t k_max = params.k_max.value_or(128);
  Batch batch("lemma51");
  for (std::uint64_t k = 1; k <= k_max && !batch.failed(); ++k) {
    for (std::uint64_t i = 1; i <= k; ++i) {
      if (!batch.expect(binomial_power_bound_holds(k, i),
                        [&] { return "k=" + str(k) + " i=" + str(i) + ": bound on ord_2(2^i C(k,i)) fails"; })) {
        break;
      }
    }
  }
  return batch.finish("ord_2(2^i C(k,i)) bounds, 1 <= i <= k <= " + str(k_max));
}

// Computed valuation against a closed form for each n in a list.
template <typename Compute, typename Predict>
CheckOutcome valuation_rows(const std::string& name, const std::string& scope, const std::vector<std::uint64_t>& ns,
                            Compute compute, Predict predict) {
  Batch batch(name);
  for (const std::uint64_t n : ns) {
    const Valuation computed = compute(n);
    const Valuation predicted = predict(n);
    if (!batch.expect(computed == predicted, [&] {
          return "n=" + str(n) + ": computed " + computed.to_string() + ", predicted " + predicted.to_string();
        })) {
      break;
    }
  }
  return batch.finish(scope);
}

std::vector<std::uint64_t> residues(std::uint64_t k_max, std::initializer_list<std::uint64_t> rs) {
  std::vector<std::uint64_t> ns;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    for (const auto r : rs) ns.push_back(4 * k + r);
  }
  return ns;
}

CheckOutcome check_thm52(const CheckParams& params) {
  const std::uint64_t k_max = params.k_max.value_or(500);
  CheckOutcome out = valuation_rows(
      "thm52", "ord_2(t_n(1,-1)), k <= " + str(k_max), residues(k_max, {0, 1, 2, 3}),
      [](std::uint64_t n) { return val_p(t_signed(n), 2); }, ord2_signed_closed);
  if (out.passed) {
    for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(4 * k_max + 3, 60); ++n) {
      if (t_poly(n).evaluate(Dyadic(1), Dyadic(-1)) != Dyadic(t_signed(n))) {
        out.passed = false;
        out.counterexample = "n=" + str(n) + ": t_n(1,-1) from the polynomial differs from the scalar recurrence";
        break;
      }
    }
  }
  return out;
}

CheckOutcome check_cor53(const CheckParams& params) {
  const std::uint64_t k_max = params.k_max.value_or(500);
  const auto ns = residues(k_max, {2, 3});
  const auto k_of = [](std::uint64_t n) { return Valuation(n / 4); };
  const std::string scope = "ord_2 of even/odd counts at n = 4k+2, 4k+3, k <= " + str(k_max);
  CheckOutcome even = valuation_rows(
      "cor53", scope + ", even", ns, [](std::uint64_t n) { return val_p(t_even(n), 2); }, k_of);
  if (!even.passed) return even;
  CheckOutcome odd = valuation_rows(
      "cor53", scope + ", odd", ns, [](std::uint64_t n) { return val_p(t_odd(n), 2); }, k_of);
  if (odd.passed) odd.detail = scope;
  return odd;
}

CheckOutcome check_thm54(const CheckParams& params) {
  const std::uint64_t k_max = params.k_max.value_or(500);
  return valuation_rows(
      "thm54", "ord_2(t^e_{4k}) = k + chi_o(k), k <= " + str(k_max), residues(k_max, {0}),
      [](std::uint64_t n) { return val_p(t_even(n), 2); },
      [](std::uint64_t n) { return Valuation(n / 4 + chi_odd(n / 4)); });
}

CheckOutcome check_thm55(const CheckParams& params) {
  const std::uint64_t k_max = params.k_max.value_or(500);
  return valuation_rows(
      "thm55", "ord_2(t^o_{4k+1}) = k + ord_2(k) + chi_e(k), k <= " + str(k_max), residues(k_max, {1}),
      [](std::uint64_t n) { return val_p(t_odd(n), 2); },
      [](std::uint64_t n) {
        const std::uint64_t k = n / 4;
        return val_p(ExactInt(static_cast<std::int64_t>(k)), 2) + (k + chi_even(k));
      });
}

CheckOutcome check_thm61(const CheckParams& params) {
  const std::uint64_t m_max = params.m_max.value_or(99);
  const std::uint64_t n_max = params.n_max.value_or(200);
  Batch batch("thm61");
  for (std::uint64_t m = 1; m <= m_max && !batch.failed(); m += 2) {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      if (!batch.expect(t_rec(n + m).mod(m) == t_rec(n).mod(m),
                        [&] { return "m=" + str(m) + " n=" + str(n) + ": t_{n+m} and t_n differ mod m"; })) {
        break;
      }
    }
  }
  return batch.finish("t_{n+m} == t_n mod m for odd m <= " + str(m_max) + ", n <= " + str(n_max));
}

std::function<std::uint64_t(std::uint64_t)> fresh_t_mod(std::uint64_t m) {
  return [m](std::uint64_t n) { return t_rec(n).mod(m); };
}

CheckOutcome check_thm62(const CheckParams& params) {
  const std::uint64_t m_max = params.m_max.value_or(99);
  Batch batch("thm62");
  for (std::uint64_t m = 1; m <= m_max; m += 2) {
    const PeriodCheck c = check_involution_modulus(m, default_window(m));
    const bool ok = c.matches && verify_witnesses(c.report, fresh_t_mod(m));
    if (!batch.expect(ok, [&] {
          return "m=" + str(m) + ": preperiod " + str(c.report.preperiod) + ", period " + str(c.report.period) +
                 (c.matches ? " (witness mismatch)" : "");
        })) {
      break;
    }
  }
  return batch.finish("t_n mod m purely periodic with smallest period m, odd m <= " + str(m_max));
}

CheckOutcome check_thm63(const CheckParams& params) {
  const std::uint64_t m_max = params.m_max.value_or(96);
  Batch batch("thm63");
  for (std::uint64_t m = 2; m <= m_max; m += 2) {
    const PeriodCheck c = verify_even_modulus(m, default_window(m));
    const bool ok = c.matches && verify_witnesses(c.report, fresh_t_mod(m));
    if (!batch.expect(ok, [&] {
          return "m=" + str(m) + ": preperiod " + str(c.report.preperiod) + " (expected " + str(c.expected_preperiod) +
                 "), period " + str(c.report.period) + " (expected " + str(c.expected_period) + ")";
        })) {
      break;
    }
  }
  return batch.finish("preperiod 4k-2 and period l for even m = 2^k l <= " + str(m_max));
}

std::uint32_t beta_s_max(const CheckParams& params, std::uint32_t fallback) {
  const std::uint32_t s_max = params.s_max.value_or(fallback);
  if (s_max < 3) throw ArgumentError("--s must be at least 3, got " + str(s_max));
  return s_max;
}

CheckOutcome check_lemma64(const CheckParams& params) {
  const std::uint32_t s_max = beta_s_max(params, 16);
  Batch batch("lemma64");
  for (std::uint32_t s = 3; s <= s_max; ++s) {
    if (!batch.expect(odd_product_congruence(s),
                      [&] { return "s=" + str(s) + ": (1;2)_{2^(s-1)} is not 1 mod 2^s"; })) {
      break;
    }
  }
  return batch.finish("(1;2)_{2^(s-1)} == 1 mod 2^s, 3 <= s <= " + str(s_max));
}

CheckOutcome check_lemma65(const CheckParams& params) {
  const std::uint32_t s_max = beta_s_max(params, 6);
  Batch batch("lemma65");
  for (std::uint32_t s = 3; s <= s_max; ++s) {
    const std::uint64_t n_max = params.n_max.value_or(std::uint64_t{4} << (s + 1));
    if (!batch.expect(beta_shift_congruence(s, n_max),
                      [&] { return "s=" + str(s) + ": beta_{n + 2^(s+1)} != beta_n mod 2^s for some n <= " + str(n_max); })) {
      break;
    }
  }
  return batch.finish("beta_{n+2^(s+1)} == beta_n mod 2^s, 3 <= s <= " + str(s_max));
}

CheckOutcome check_thm66(const CheckParams& params) {
  const std::uint32_t s_max = beta_s_max(params, 6);
  Batch batch("thm66");
  for (std::uint32_t s = 3; s <= s_max && !batch.failed(); ++s) {
    const PeriodReport r = beta_period(s);
    const std::uint64_t modulus = std::uint64_t{1} << s;
    const auto fresh = [modulus](std::uint64_t n) { return beta(n).mod(modulus); };
    batch.expect(r.preperiod == 0 && r.period == 2 * modulus && verify_witnesses(r, fresh), [&] {
      return "s=" + str(s) + ": preperiod " + str(r.preperiod) + ", period " + str(r.period);
    });
    batch.expect(beta_half_period_witness(s),
                 [&] { return "s=" + str(s) + ": beta_{2^s+2} == beta_2 mod 2^s"; });
    batch.expect(beta_two_step_identity(s),
                 [&] { return "s=" + str(s) + ": beta_{2^s+2} != (1 + 2^(s-1)) beta_{2^s} mod 2^s"; });
  }
  return batch.finish("beta_n mod 2^s has smallest period 2^(s+1), 3 <= s <= " + str(s_max));
}

using CheckFn = CheckOutcome (*)(const CheckParams&);

struct NamedCheck {
  std::string_view name;
  CheckFn run;
};

constexpr std::array<NamedCheck, 22> registry{{
    {"table1", check_table1},   {"table2", check_table2},   {"lemma21", check_lemma21}, {"thm23", check_thm23},
    {"cor31", check_cor31},     {"weights", check_weights}, {"thm32", check_thm32},     {"thm33", check_thm33},
    {"thm41", check_thm41},     {"prop42", check_prop42},   {"lemma51", check_lemma51}, {"thm52", check_thm52},
    {"cor53", check_cor53},     {"thm54", check_thm54},     {"thm55", check_thm55},     {"thm61", check_thm61},
    {"thm62", check_thm62},     {"thm63", check_thm63},     {"lemma64", check_lemma64}, {"lemma65", check_lemma65},
    {"thm66", check_thm66},     {"all", nullptr},
}};

constexpr auto names = [] {
  std::array<std::string_view, registry.size() - 1> out{};
  for (std::size_t i = 0; i + 1 < registry.size(); ++i) out[i] = registry[i].name;
  return out;
}();

}  // namespace

std::span<const std::string_view> check_names() { return names; }

bool is_check_name(std::string_view name) {
  return std::any_of(registry.begin(), registry.end(), [&](const NamedCheck& c) { return c.name == name; });
}

std::vector<CheckOutcome> run_check(std::string_view name, const CheckParams& params) {
  std::vector<CheckOutcome> outcomes;
  for (const auto& check : registry) {
    if (check.run == nullptr) continue;
    if (name == "all" || check.name == name) outcomes.push_back(check.run(params));
  }
  if (outcomes.empty()) throw ArgumentError("unknown check '" + std::string(name) + "'");
  return outcomes;
}

}  // namespace involution_lab
