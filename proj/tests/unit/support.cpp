#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::int64_t naive_ord(const ExactInt& x, std::uint64_t p) {
  if (x.is_zero()) return -1;
  ExactInt rest = x;
  const ExactInt divisor(static_cast<std::int64_t>(p));
  std::int64_t count = 0;
  while (auto q = rest.exact_quotient(divisor)) {
    rest = *q;
    ++count;
  }
  return count;
}

std::uint64_t kummer_carries(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t a = k;
  std::uint64_t b = n - k;
  std::uint64_t carry = 0;
  std::uint64_t carries = 0;
  while (a > 0 || b > 0 || carry > 0) {
    const std::uint64_t digit_sum = a % p + b % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    carries += carry;
    a /= p;
    b /= p;
  }
  return carries;
}

std::vector<std::vector<std::uint32_t>> filtered_roots(std::uint32_t n, std::uint32_t order) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1U);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    bool ok = true;
    for (std::uint32_t i = 1; i <= n && ok; ++i) {
      std::uint32_t x = i;
      for (std::uint32_t j = 0; j < order; ++j) x = perm[x - 1];
      ok = x == i;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::pair<std::uint64_t, std::uint64_t> involutions_by_sign(std::uint32_t n) {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  for (const auto& perm : filtered_roots(n, 2)) {
    std::uint32_t transpositions = 0;
    for (std::uint32_t i = 1; i <= n; ++i) transpositions += perm[i - 1] > i ? 1 : 0;
    (transpositions % 2 == 0 ? even : odd) += 1;
  }
  return {even, odd};
}

std::pair<std::uint64_t, std::uint64_t> naive_eventual_period(const std::vector<std::uint64_t>& values,
                                                              std::uint64_t confirm) {
  const std::uint64_t size = values.size();
  for (std::uint64_t period = 1; period < size; ++period) {
    for (std::uint64_t start = 0; start + period + confirm <= size; ++start) {
      bool holds = true;
      for (std::uint64_t n = start; n + period < size && holds; ++n) holds = values[n] == values[n + period];
      if (holds) return {start, period};
    }
  }
  return {size, 0};
}

const std::vector<std::int64_t> verified_g_plus{
    1,    1,     1,     2,     2,      6,      8,       26,      41,      145,      253,
    978,  1858,  7726,  15796, 69878,  152219, 711243,  1638323, 8039510, 19467494, 99862594,
};

const std::vector<std::int64_t> verified_g_minus{
    1,  1,    0,    -1,  -1,   1,     2,      -1,    -6,     -2,     28,
    38, -140, -368, 732, 3308, -3934, -30398, 19232, 292814, -44946, -2973086,
};

std::mt19937_64 engine(std::uint64_t salt) { return std::mt19937_64(0x5eed'1234ULL + salt); }

}  // namespace oracle
