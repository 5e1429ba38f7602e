#include <gtest/gtest.h>

#include <limits>

#include "involution_lab/bivariate_poly.hpp"
#include "involution_lab/dyadic.hpp"
#include "involution_lab/errors.hpp"
#include "involution_lab/exact_int.hpp"
#include "involution_lab/valuation.hpp"
#include "support.hpp"

using namespace involution_lab;

namespace {

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (magnitude > 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  return negative ? "-" + digits : digits;
}

}  // namespace

TEST(ExactInt, DecimalRoundTrip) {
  for (const char* text : {"0", "1", "-1", "9496", "-44946", "123456789012345678901234567890",
                           "-98765432109876543210987654321"}) {
    EXPECT_EQ(ExactInt::from_string(text).to_string(), text);
  }
  EXPECT_EQ(ExactInt::from_string("+17").to_string(), "17");
}

TEST(ExactInt, RejectsMalformedDecimal) {
  for (const char* text : {"", "-", "12a", "1.5", " 3", "0x10", "1e5"}) {
    EXPECT_THROW(ExactInt::from_string(text), ArgumentError) << text;
  }
}

TEST(ExactInt, ZeroIsCanonical) {
  const ExactInt zero = ExactInt(5) - ExactInt(5);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.sign(), 0);
  EXPECT_EQ(zero, ExactInt());
  EXPECT_EQ((-zero).to_string(), "0");
}

TEST(ExactInt, ArithmeticMatchesInt128) {
  auto rng = oracle::engine(1);
  std::uniform_int_distribution<std::int64_t> dist(std::numeric_limits<std::int64_t>::min() / 2,
                                                   std::numeric_limits<std::int64_t>::max() / 2);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t a = dist(rng);
    const std::int64_t b = dist(rng);
    const ExactInt x(a);
    const ExactInt y(b);
    EXPECT_EQ((x + y).to_string(), i128_to_string(static_cast<__int128>(a) + b));
    EXPECT_EQ((x - y).to_string(), i128_to_string(static_cast<__int128>(a) - b));
    EXPECT_EQ((x * y).to_string(), i128_to_string(static_cast<__int128>(a) * b));
    EXPECT_EQ(x < y, a < b);
  }
}

TEST(ExactInt, ModIsLeastNonNegative) {
  auto rng = oracle::engine(2);
  std::uniform_int_distribution<std::int64_t> value(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<std::uint64_t> modulus(1, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t a = value(rng);
    const std::uint64_t m = modulus(rng);
    const auto expected = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) %
                                                     static_cast<std::int64_t>(m));
    EXPECT_EQ(ExactInt(a).mod(m), expected);
  }
  EXPECT_EQ(ExactInt(-1).mod_pow2(3), ExactInt(7));
}

TEST(ExactInt, ShiftsAndBits) {
  const ExactInt x(12);
  EXPECT_EQ(x.trailing_zero_bits(), 2U);
  EXPECT_EQ(x.shifted_left(3), ExactInt(96));
  EXPECT_EQ(x.shifted_right_exact(2), ExactInt(3));
  EXPECT_THROW((void)x.shifted_right_exact(3), InvariantViolation);
  EXPECT_TRUE(x.bit(2));
  EXPECT_FALSE(x.bit(0));
  EXPECT_EQ(ExactInt::power_of_two(100).trailing_zero_bits(), 100U);
}

TEST(ExactInt, ExactQuotient) {
  EXPECT_EQ(ExactInt(9496).exact_quotient(ExactInt(8)), ExactInt(1187));
  EXPECT_FALSE(ExactInt(9496).exact_quotient(ExactInt(16)).has_value());
  EXPECT_TRUE(ExactInt(0).divisible_by(ExactInt(7)));
}

TEST(ExactInt, Int64Bounds) {
  EXPECT_TRUE(ExactInt(std::numeric_limits<std::int64_t>::min()).fits_int64());
  const ExactInt big = ExactInt(std::numeric_limits<std::int64_t>::max()) + ExactInt(1);
  EXPECT_FALSE(big.fits_int64());
  EXPECT_THROW((void)big.to_int64(), ArgumentError);
}

TEST(Dyadic, CanonicalForm) {
  const Dyadic x = Dyadic::from_parts(ExactInt(12), 4);  // 12/16 = 3/4
  EXPECT_EQ(x.numerator(), ExactInt(3));
  EXPECT_EQ(x.exponent(), 2U);
  EXPECT_EQ(x.to_string(), "3/4");
  EXPECT_EQ(Dyadic::from_parts(ExactInt(3), -2), Dyadic(12));
  EXPECT_EQ(Dyadic::from_parts(ExactInt(0), 7).exponent(), 0U);
}

TEST(Dyadic, FieldOperations) {
  const Dyadic half = Dyadic::half();
  EXPECT_EQ(half + half, Dyadic(1));
  EXPECT_EQ(half * half, Dyadic::from_parts(ExactInt(1), 2));
  EXPECT_EQ(Dyadic(1) - half, half);
  EXPECT_TRUE((half * Dyadic(2)).is_integer());
  EXPECT_EQ(divide_exact(Dyadic(3), Dyadic(4)), Dyadic::from_parts(ExactInt(3), 2));
  EXPECT_FALSE(divide_exact(Dyadic(1), Dyadic(3)).has_value());
  EXPECT_THROW((void)half.to_integer("half"), InvariantViolation);
}

TEST(Dyadic, RandomSumsAgreeWithCommonDenominator) {
  auto rng = oracle::engine(3);
  std::uniform_int_distribution<std::int64_t> num(-10000, 10000);
  std::uniform_int_distribution<std::int64_t> exp(0, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t a = num(rng), b = num(rng), ea = exp(rng), eb = exp(rng);
    const Dyadic sum = Dyadic::from_parts(ExactInt(a), ea) + Dyadic::from_parts(ExactInt(b), eb);
    // a/2^ea + b/2^eb = (a 2^(40-ea) + b 2^(40-eb)) / 2^40
    const ExactInt common = ExactInt(a) * ExactInt::power_of_two(40 - ea) + ExactInt(b) * ExactInt::power_of_two(40 - eb);
    EXPECT_EQ(sum, Dyadic::from_parts(common, 40));
  }
}

TEST(Valuation, InfinityOrdering) {
  const Valuation inf = Valuation::infinity();
  EXPECT_GT(inf, Valuation(1'000'000));
  EXPECT_EQ(inf + Valuation(3), inf);
  EXPECT_EQ(Valuation(2) + 3, Valuation(5));
  EXPECT_EQ(inf.to_string(), "inf");
  EXPECT_THROW((void)inf.value(), ArgumentError);
}

TEST(BivariatePoly, ZeroTermsAreDropped) {
  BivariatePoly p = BivariatePoly::x() + BivariatePoly::y();
  p -= BivariatePoly::x();
  EXPECT_EQ(p, BivariatePoly::y());
  EXPECT_EQ(p.term_count(), 1U);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(BivariatePoly, ProductAndEvaluation) {
  const BivariatePoly x = BivariatePoly::x();
  const BivariatePoly y = BivariatePoly::y();
  const BivariatePoly isolated = (x * x + y).scaled(Dyadic::half());
  EXPECT_FALSE(isolated.has_integer_coefficients());
  EXPECT_EQ(isolated.evaluate(Dyadic(1), Dyadic(1)), Dyadic(1));
  EXPECT_EQ(isolated.evaluate(Dyadic(1), Dyadic(-1)), Dyadic(0));
  const BivariatePoly square = (x + y) * (x + y);
  EXPECT_EQ(square.coefficient(1, 1), Dyadic(2));
  EXPECT_EQ(square.evaluate(Dyadic(3), Dyadic(-5)), Dyadic(4));
  EXPECT_EQ(x.shifted(2, 3), BivariatePoly::monomial(3, 3));
}

TEST(BivariatePoly, RandomRingLaws) {
  auto rng = oracle::engine(4);
  std::uniform_int_distribution<std::uint32_t> deg(0, 4);
  std::uniform_int_distribution<std::int64_t> coef(-9, 9);
  std::uniform_int_distribution<std::int64_t> exp(0, 3);
  const auto random_poly = [&] {
    BivariatePoly p;
    for (int i = 0; i < 4; ++i) p.add_term({deg(rng), deg(rng)}, Dyadic::from_parts(ExactInt(coef(rng)), exp(rng)));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const BivariatePoly a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    const Dyadic x = Dyadic::from_parts(ExactInt(coef(rng)), exp(rng));
    const Dyadic y = Dyadic::from_parts(ExactInt(coef(rng)), exp(rng));
    EXPECT_EQ((a * b).evaluate(x, y), a.evaluate(x, y) * b.evaluate(x, y));
  }
}
