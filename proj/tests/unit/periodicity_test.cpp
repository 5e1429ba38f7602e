#include <gtest/gtest.h>

#include "involution_lab/algebra.hpp"
#include "involution_lab/errors.hpp"
#include "involution_lab/periodicity.hpp"
#include "involution_lab/sequences.hpp"
#include "support.hpp"

using namespace involution_lab;

namespace {

std::vector<std::uint64_t> exact_residues(std::uint64_t m, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n < count; ++n) out.push_back(t_rec(n).mod(m));
  return out;
}

std::pair<std::uint64_t, std::uint64_t> detected(std::uint64_t m) {
  const PeriodReport r = detect_period(involution_residues(m), default_window(m));
  return {r.preperiod, r.period};
}

}  // namespace

TEST(ResidueRecurrence, MatchesExactValues) {
  for (const std::uint64_t m : {1ULL, 2ULL, 3ULL, 8ULL, 12ULL, 97ULL, 256ULL, 360ULL, 511ULL, 512ULL}) {
    const ResidueRecurrence seq = involution_residues(m);
    RecurrenceState state = seq.initial;
    const auto exact = exact_residues(m, 2000);
    for (std::size_t n = 0; n < exact.size(); ++n) {
      ASSERT_EQ(seq.residue(state), exact[n]) << "m=" << m << " n=" << n;
      state = seq.advance(state);
    }
  }
}

TEST(ResidueRecurrence, LongRunMatchesExactForSmallModulus) {
  const ResidueRecurrence seq = involution_residues(7);
  RecurrenceState state = seq.initial;
  for (std::size_t n = 0; n <= 10'000; ++n) {
    if (n % 997 == 0) {
      ASSERT_EQ(seq.residue(state), t_rec(n).mod(7)) << n;
    }
    state = seq.advance(state);
  }
}

TEST(ResidueRecurrence, RejectsBadModulus) {
  EXPECT_THROW((void)involution_residues(0), ArgumentError);
  EXPECT_THROW((void)involution_residues((1ULL << 32) + 1), ArgumentError);
  EXPECT_NO_THROW((void)involution_residues(1ULL << 32));
}

TEST(DetectPeriod, KnownModuli) {
  using P = std::pair<std::uint64_t, std::uint64_t>;
  EXPECT_EQ(detected(3), P(0, 3));
  EXPECT_EQ(detected(2), P(2, 1));
  EXPECT_EQ(detected(4), P(6, 1));
  EXPECT_EQ(detected(8), P(10, 1));
  EXPECT_EQ(detected(12), P(6, 3));
  EXPECT_EQ(detected(15), P(0, 15));
  EXPECT_EQ(detected(1), P(0, 1));
}

TEST(DetectPeriod, AgreesWithNaiveScan) {
  for (std::uint64_t m = 1; m <= 40; ++m) {
    const auto values = exact_residues(m, 4 * m + 200);
    const auto [pre, per] = detected(m);
    EXPECT_EQ(oracle::naive_eventual_period(values, 2 * m + 20), std::make_pair(pre, per)) << m;
  }
}

TEST(DetectPeriod, ClosedFormsUpToSixtyFour) {
  for (std::uint64_t m = 1; m <= 64; ++m) {
    const PeriodCheck check = check_involution_modulus(m, default_window(m));
    EXPECT_TRUE(check.matches) << m;
    if (m % 2 == 1) {
      EXPECT_TRUE(verify_odd_modulus(m, default_window(m)));
    }
  }
  EXPECT_THROW((void)verify_odd_modulus(4, 100), ArgumentError);
  EXPECT_THROW((void)verify_even_modulus(9, 100), ArgumentError);
}

TEST(DetectPeriod, WitnessesSurviveRecomputation) {
  for (const std::uint64_t m : {6ULL, 12ULL, 15ULL, 40ULL, 105ULL}) {
    const PeriodReport r = detect_period(involution_residues(m), default_window(m));
    EXPECT_TRUE(verify_witnesses(r, [m](std::uint64_t n) { return t_rec(n).mod(m); })) << m;
    for (const auto& w : r.witnesses) {
      EXPECT_NE(w.value_at_index, w.value_at_shifted);
      if (w.kind == PeriodWitness::Kind::Preperiod) {
        EXPECT_EQ(w.shift, r.period);
        EXPECT_EQ(w.index + 1, r.preperiod);
      } else {
        EXPECT_EQ(r.period % w.shift, 0U);
        EXPECT_LT(w.shift, r.period);
      }
    }
  }
}

TEST(DetectPeriod, TamperedWitnessIsRejected) {
  PeriodReport r = detect_period(involution_residues(12), default_window(12));
  ASSERT_FALSE(r.witnesses.empty());
  r.witnesses.front().value_at_index ^= 1;
  EXPECT_FALSE(verify_witnesses(r, [](std::uint64_t n) { return t_rec(n).mod(12); }));
}

TEST(DetectPeriod, TinyWindowIsInconclusive) {
  EXPECT_THROW((void)detect_period(involution_residues(15), 5), InconclusiveError);
}

TEST(AnalyzeWindow, FindsSmallestCandidate) {
  const std::vector<std::uint64_t> values{5, 9, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2};
  const std::vector<std::uint64_t> candidates{1, 2, 4};
  const PeriodReport r = analyze_window(values, 10, candidates, 4);
  EXPECT_EQ(r.preperiod, 2U);
  EXPECT_EQ(r.period, 2U);
  EXPECT_EQ(oracle::naive_eventual_period(values, 4), std::make_pair(r.preperiod, r.period));
}

TEST(OddProduct, PowerOfTwoCongruence) {
  for (std::uint32_t s = 3; s <= 16; ++s) EXPECT_TRUE(odd_product_congruence(s)) << s;
  EXPECT_EQ(odd_product(4).mod(8), 1U);    // 105, s = 3
  EXPECT_EQ(odd_product(8).mod(16), 1U);   // s = 4
  EXPECT_EQ(odd_product(4).mod(16), 9U);   // half the length is not enough
  EXPECT_EQ(odd_product(32).mod(64), 1U);  // s = 6
  EXPECT_THROW((void)odd_product_congruence(2), ArgumentError);
}

TEST(OddPartResidues, MatchExactOddParts) {
  const auto residues = beta_residues(5, 300);
  for (std::size_t n = 0; n < residues.size(); ++n) EXPECT_EQ(residues[n], beta(n).mod(32)) << n;
  EXPECT_THROW((void)beta_residues(0, 10), ArgumentError);
  EXPECT_THROW((void)beta_residues(64, 10), ArgumentError);
}

TEST(OddPartResidues, ShiftCongruence) {
  EXPECT_EQ(beta(16).mod(8), 1U);
  EXPECT_EQ(beta(0).mod(8), 1U);
  for (std::uint32_t s = 3; s <= 8; ++s) EXPECT_TRUE(beta_shift_congruence(s, 600)) << s;
  EXPECT_THROW((void)beta_shift_congruence(2, 10), ArgumentError);
}

TEST(OddPartResidues, PeriodIsDoubleTheModulus) {
  for (std::uint32_t s = 3; s <= 8; ++s) {
    const PeriodReport r = beta_period(s);
    EXPECT_EQ(r.period, 2ULL << s) << s;
    EXPECT_EQ(r.modulus, 1ULL << s);
    EXPECT_TRUE(verify_witnesses(r, [s](std::uint64_t n) { return beta(n).mod(1ULL << s); }));
    const auto values = beta_residues(s, 3 * (2ULL << s));
    EXPECT_EQ(oracle::naive_eventual_period(values, 2ULL << s), std::make_pair(r.preperiod, r.period)) << s;
  }
  EXPECT_THROW((void)beta_period(21), ArgumentError);
}

TEST(OddPartResidues, HalfPeriodWitness) {
  for (std::uint32_t s = 3; s <= 12; ++s) {
    EXPECT_TRUE(beta_half_period_witness(s)) << s;
    EXPECT_TRUE(beta_two_step_identity(s)) << s;
  }
}

TEST(OddPartResidues, LiteralHalfShiftCongruenceFailsAtEight) {
  // beta_{2^s+2} - beta_2 == 2^{s-1} mod 2^s is not unconditional: at s = 3
  // the difference is 2 mod 8, not 4.
  EXPECT_EQ(beta(8).mod(8), 7U);
  EXPECT_EQ((beta(10) - beta(2)).mod(8), 2U);
  for (std::uint32_t s = 4; s <= 6; ++s) {
    const std::uint64_t m = 1ULL << s;
    EXPECT_EQ((beta(m + 2) - beta(2)).mod(m), m / 2) << s;
  }
}
