#include "involution_lab/sequences.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "involution_lab/algebra.hpp"
#include "involution_lab/sequence_cache.hpp"
#include "involution_lab/valuations.hpp"

namespace involution_lab {

namespace {

ExactInt from_size(std::size_t n) { return ExactInt(static_cast<std::int64_t>(n)); }

// ---------------------------------------------------------------------------
// Recurrence steps

ExactInt t_step(std::size_t n, const std::vector<ExactInt>& prefix) {
  if (n < 2) return ExactInt(1);
  return prefix[n - 1] + from_size(n - 1) * prefix[n - 2];
}

ExactInt t_signed_step(std::size_t n, const std::vector<ExactInt>& prefix) {
  if (n < 2) return ExactInt(1);
  return prefix[n - 1] - from_size(n - 1) * prefix[n - 2];
}

BivariatePoly t_poly_step(std::size_t n, const std::vector<BivariatePoly>& prefix) {
  if (n == 0) return BivariatePoly::constant(Dyadic(1));
  BivariatePoly next = prefix[n - 1].shifted(1, 0);
  if (n >= 2) next += prefix[n - 2].shifted(0, 1).scaled(Dyadic(from_size(n - 1)));
  return next;
}

Dyadic scale(const Dyadic& value, const Dyadic& c) { return value * c; }
BivariatePoly scale(const BivariatePoly& value, const Dyadic& c) { return value.scaled(c); }

// One step of the graph-sum recurrence, generic over the coefficient ring so
// the polynomial and the evaluated sequences share the same code path.
template <typename T>
T g_step(std::size_t n, const std::vector<T>& prefix, const T& one, const T& x, const T& y) {
  if (n == 0) return one;
  auto g = [&](std::int64_t i) -> T { return i < 0 ? T() : prefix[static_cast<std::size_t>(i)]; };
  const auto size = static_cast<std::int64_t>(n);
  if (n % 2 == 1) {
    const std::uint64_t m = (n - 1) / 2;
    return x * g(size - 1) + scale(y * g(size - 2), Dyadic(ExactInt(static_cast<std::int64_t>(m))));
  }
  const std::uint64_t m = n / 2;
  const T isolated = scale(x * x + y, Dyadic::half());
  const T y2 = y * y;
  T next = isolated * g(size - 2);
  next += scale(x * y * g(size - 3), Dyadic(ExactInt(static_cast<std::int64_t>(m - 1))));
  next += scale(y2 * g(size - 4), Dyadic(ExactInt(2) * binomial(m - 1, 2)));
  next += scale(y2 * y2 * g(size - 8), Dyadic(ExactInt(3) * binomial(m - 1, 3)));
  return next;
}

// ---------------------------------------------------------------------------
// Caches

SequenceCache<ExactInt>& t_cache() {
  static SequenceCache<ExactInt> cache(t_step);
  return cache;
}

SequenceCache<ExactInt>& t_signed_cache() {
  static SequenceCache<ExactInt> cache(t_signed_step);
  return cache;
}

SequenceCache<BivariatePoly>& t_poly_cache() {
  static SequenceCache<BivariatePoly> cache(t_poly_step);
  return cache;
}

SequenceCache<BivariatePoly>& g_poly_cache() {
  static SequenceCache<BivariatePoly> cache([](std::size_t n, const std::vector<BivariatePoly>& prefix) {
    return g_step(n, prefix, BivariatePoly::constant(Dyadic(1)), BivariatePoly::x(), BivariatePoly::y());
  });
  return cache;
}

SequenceCache<Dyadic>& g_eval_cache(std::int64_t y_value) {
  static SequenceCache<Dyadic> plus_one([](std::size_t n, const std::vector<Dyadic>& prefix) {
    return g_step(n, prefix, Dyadic(1), Dyadic(1), Dyadic(1));
  });
  static SequenceCache<Dyadic> minus_one([](std::size_t n, const std::vector<Dyadic>& prefix) {
    return g_step(n, prefix, Dyadic(1), Dyadic(1), Dyadic(-1));
  });
  return y_value > 0 ? plus_one : minus_one;
}

SequenceCache<ExactInt>& beta_cache() {
  static SequenceCache<ExactInt> cache([](std::size_t n, const std::vector<ExactInt>&) { return odd_part(t_rec(n)); });
  return cache;
}

SequenceCache<ExactInt>& tau_cache(std::uint32_t p) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<SequenceCache<ExactInt>>> caches;
  std::lock_guard lock(mutex);
  auto& slot = caches[p];
  if (!slot) {
    slot = std::make_unique<SequenceCache<ExactInt>>([p](std::size_t n, const std::vector<ExactInt>& prefix) {
      if (n < p) return ExactInt(1);
      ExactInt arrangements(1);
      for (std::size_t j = 1; j < p; ++j) arrangements *= from_size(n - j);
      return prefix[n - 1] + arrangements * prefix[n - p];
    });
  }
  return *slot;
}

// Shared pieces of the doubled-edge expansion for n = 4k + r.
struct Expansion {
  std::size_t k;
  std::size_t r;
  std::size_t half_r;
};

Expansion split(std::size_t n) { return {n / 4, n % 4, (n % 4) / 2}; }

// 2^i C(k, i) (1;2)_{k+h} / (1;2)_{i+h}, with the ratio as an explicit product.
ExactInt expansion_weight(const Expansion& e, std::size_t i) {
  return ExactInt::power_of_two(i) * binomial(e.k, i) * odd_product_range(i + e.half_r, e.k + e.half_r);
}

}  // namespace

ExactInt t_rec(std::size_t n) { return t_cache().at(n); }

ExactInt t_direct(std::size_t n) {
  const ExactInt n_factorial = factorial(n);
  ExactInt sum;
  for (std::size_t i = 0; 2 * i <= n; ++i) {
    const ExactInt denominator = ExactInt::power_of_two(i) * factorial(i) * factorial(n - 2 * i);
    auto term = n_factorial.exact_quotient(denominator);
    if (!term) throw InvariantViolation("t_direct: inexact term at i = " + std::to_string(i));
    sum += *term;
  }
  return sum;
}

ExactInt tau_p(std::size_t n, std::uint32_t p) {
  if (!is_prime(p)) throw ArgumentError("tau_p: " + std::to_string(p) + " is not prime");
  return tau_cache(p).at(n);
}

BivariatePoly t_poly(std::size_t n) { return t_poly_cache().at(n); }

ExactInt t_signed(std::size_t n) { return t_signed_cache().at(n); }

BivariatePoly g_poly(std::int64_t n) {
  if (n < 0) return {};
  return g_poly_cache().at(static_cast<std::size_t>(n));
}

ExactInt g_int(std::int64_t n) {
  if (n < 0) return ExactInt(0);
  return g_eval_cache(1).at(static_cast<std::size_t>(n)).to_integer("g_n(1,1)");
}

ExactInt g_alt(std::int64_t n) {
  if (n < 0) return ExactInt(0);
  return g_eval_cache(-1).at(static_cast<std::size_t>(n)).to_integer("g_n(1,-1)");
}

ExactInt t_by_two_cycle_expansion(std::size_t n) {
  const Expansion e = split(n);
  ExactInt sum;
  for (std::size_t i = 0; i <= e.k; ++i) {
    sum += expansion_weight(e, i) * g_int(static_cast<std::int64_t>(4 * i + e.r));
  }
  return sum.shifted_left(e.k + e.half_r);
}

BivariatePoly t_poly_by_two_cycle_expansion(std::size_t n) {
  const Expansion e = split(n);
  BivariatePoly sum;
  for (std::size_t i = 0; i <= e.k; ++i) {
    const auto y_power = static_cast<std::uint32_t>(2 * (e.k - i));
    sum += g_poly(static_cast<std::int64_t>(4 * i + e.r)).shifted(0, y_power).scaled(Dyadic(expansion_weight(e, i)));
  }
  return sum.scaled(Dyadic(ExactInt::power_of_two(e.k + e.half_r)));
}

ExactInt beta(std::size_t n) { return beta_cache().at(n); }

ExactInt beta_closed(std::size_t n) {
  const Expansion e = split(n);
  const std::int64_t delta = e.r == 3 ? 1 : 0;
  Dyadic sum;
  for (std::size_t i = 0; i <= e.k; ++i) {
    const ExactInt term = expansion_weight(e, i) * g_int(static_cast<std::int64_t>(4 * i + e.r));
    sum += Dyadic::from_parts(term, delta);
  }
  return sum.to_integer("beta_closed");
}

ExactInt beta_step(std::size_t n, const ExactInt& beta_prev, const ExactInt& beta_curr) {
  if (n == 0) throw ArgumentError("beta_step requires n >= 1");
  const auto h_prev = static_cast<std::int64_t>(ord2_t_closed(n - 1));
  const auto h_curr = static_cast<std::int64_t>(ord2_t_closed(n));
  const auto h_next = static_cast<std::int64_t>(ord2_t_closed(n + 1));
  const Dyadic next = Dyadic::from_parts(beta_curr, h_next - h_curr) +
                      Dyadic::from_parts(from_size(n) * beta_prev, h_next - h_prev);
  auto integral = next.as_integer();
  if (!integral) {
    throw ArgumentError("beta_step(" + std::to_string(n) + "): result " + next.to_string() +
                        " is not an integer; inputs are not consecutive odd factors");
  }
  return *integral;
}

bool sequence_caches_self_test(std::size_t count) {
  const std::size_t poly_count = std::min<std::size_t>(count, 48);
  return t_cache().self_test(count) && t_signed_cache().self_test(count) && beta_cache().self_test(count) &&
         g_eval_cache(1).self_test(count) && g_eval_cache(-1).self_test(count) && tau_cache(2).self_test(count) &&
         tau_cache(3).self_test(count) && t_poly_cache().self_test(poly_count) &&
         g_poly_cache().self_test(poly_count);
}

}  // namespace involution_lab
