#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "factineq/errors.hpp"
#include "factineq/numeric.hpp"
#include "test_support.hpp"

namespace factineq {
namespace {

using testing::rat;

bool isReduced(const BigRational& r) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return sgn(r.den()) > 0 && (g == 1 || (r.isZero() && r.den() == 1));
}

TEST(FactorialTest, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(12), BigInt(479001600));
  EXPECT_EQ(factorial(12), factorial(11) * 12);
}

TEST(FactorialTest, RecurrenceAgainstLoopProduct) {
  for (std::uint64_t m = 1; m <= 300; ++m) {
    ASSERT_EQ(factorial(m), factorial(m - 1) * static_cast<unsigned long>(m)) << m;
  }
  EXPECT_EQ(factorial(202), testing::oracleFactorial(202));
}

TEST(FactorialTest, CapExceededNamesValueAndCap) {
  FactorialCache cache(10);
  EXPECT_EQ(cache.get(10), BigInt(3628800));
  try {
    cache.get(11);
    FAIL() << "expected ResourceLimitError";
  } catch (const ResourceLimitError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("11"), std::string::npos);
    EXPECT_NE(msg.find("10"), std::string::npos);
  }
}

TEST(FactorialTest, HighWaterMarkGrowsAndEntriesAreStable) {
  FactorialCache cache(100);
  EXPECT_EQ(cache.highWaterMark(), 0u);
  const BigInt& five = cache.get(5);
  EXPECT_GE(cache.highWaterMark(), 5u);
  cache.get(90);
  EXPECT_EQ(five, 120);
  EXPECT_EQ(&five, &cache.get(5));
}

TEST(FactorialTest, ConcurrentReadersSeeIdenticalValues) {
  FactorialCache cache(2000);
  std::vector<BigInt> results(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < results.size(); ++t) {
      threads.emplace_back([&, t] {
        for (std::uint64_t m = 0; m <= 1500; m += 7 + t) cache.get(m);
        results[t] = cache.get(1500);
      });
    }
  }
  for (const auto& r : results) EXPECT_EQ(r, testing::oracleFactorial(1500));
}

TEST(FactorialTest, CapFromEnvironmentText) {
  EXPECT_EQ(parseFactorialCap(nullptr), FactorialCache::kDefaultCap);
  EXPECT_EQ(parseFactorialCap(""), FactorialCache::kDefaultCap);
  EXPECT_EQ(parseFactorialCap("500"), 500u);
  EXPECT_EQ(parseFactorialCap("abc"), FactorialCache::kDefaultCap);
  EXPECT_EQ(parseFactorialCap("0"), FactorialCache::kDefaultCap);
  EXPECT_EQ(parseFactorialCap("-3"), FactorialCache::kDefaultCap);
}

TEST(RationalTest, NormalizeReducesAndFixesSign) {
  BigRational r = ratNormalize(4, -6);
  EXPECT_EQ(r.num(), -2);
  EXPECT_EQ(r.den(), 3);
  BigRational zero = ratNormalize(0, 7);
  EXPECT_EQ(zero.num(), 0);
  EXPECT_EQ(zero.den(), 1);
  EXPECT_THROW(ratNormalize(1, 0), DivisionByZeroError);
}

TEST(RationalTest, CompareByCrossMultiplication) {
  EXPECT_GT(ratNormalize(23, 2), ratNormalize(9, 1));
  EXPECT_LT(rat(-1, 2), rat(1, 3));
  EXPECT_EQ(rat(2, 4), rat(1, 2));
}

TEST(RationalTest, Arithmetic) {
  EXPECT_EQ(rat(1, 2) + rat(1, 3), rat(5, 6));
  EXPECT_EQ(rat(5, 6) * rat(0), rat(0));
  EXPECT_EQ((rat(5, 6) * rat(0)).den(), 1);
  EXPECT_EQ(rat(1, 2) - rat(1, 6), rat(1, 3));
  EXPECT_EQ(rat(2, 3) / rat(-4, 9), rat(-3, 2));
  EXPECT_THROW(rat(1) / rat(0), DivisionByZeroError);
  EXPECT_THROW(rat(0).reciprocal(), DivisionByZeroError);
  EXPECT_EQ(rat(-2, 5).reciprocal(), rat(-5, 2));
}

TEST(RationalTest, RandomizedAlgebraicLaws) {
  std::mt19937_64 rng(20071015);
  for (int i = 0; i < 2000; ++i) {
    BigRational a = testing::randomRational(rng);
    BigRational b = testing::randomRational(rng);
    BigRational c = testing::randomRational(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE(isReduced(a + b));
    ASSERT_TRUE(isReduced(a * b));
    ASSERT_TRUE(isReduced(a - b));
    if (!b.isZero()) {
      ASSERT_TRUE(isReduced(a / b));
      ASSERT_EQ((a / b) * b, a);
    }
  }
}

TEST(RationalTest, NormalizeRoundTripUnderScaling) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> scale(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    BigRational a = testing::randomRational(rng);
    long x = scale(rng);
    if (x == 0) continue;
    ASSERT_EQ(ratNormalize(a.num() * x, a.den() * x), a);
  }
}

TEST(RationalTest, ToString) {
  EXPECT_EQ(rat(3).toString(), "3");
  EXPECT_EQ(rat(-3, 4).toString(), "-3/4");
}

TEST(DecimalTest, TwelveSignificantDigits) {
  EXPECT_EQ(toDecimal(rat(1, 3)), "0.333333333333");
  EXPECT_EQ(toDecimal(rat(2, 3)), "0.666666666667");
  EXPECT_EQ(toDecimal(rat(18, 23)), "0.782608695652");
  EXPECT_EQ(toDecimal(rat(3, 2)), "1.50000000000");
  EXPECT_EQ(toDecimal(rat(-25, 63)), "-0.396825396825");
  EXPECT_EQ(toDecimal(rat(0)), "0");
  EXPECT_EQ(toDecimal(rat(120)), "120.000000000");
}

TEST(DecimalTest, RoundHalfToEven) {
  // 0.1234567890125 has 13 significant digits; the 12-digit tie goes to even.
  EXPECT_EQ(toDecimal(ratNormalize(BigInt("1234567890125"), BigInt("10000000000000"))), "0.123456789012");
  EXPECT_EQ(toDecimal(ratNormalize(BigInt("1234567890135"), BigInt("10000000000000"))), "0.123456789014");
  EXPECT_EQ(toDecimal(rat(5, 2), 1), "2");
  EXPECT_EQ(toDecimal(rat(7, 2), 1), "4");
}

TEST(DecimalTest, CarryAndScientificNotation) {
  EXPECT_EQ(toDecimal(ratNormalize(BigInt("9999999999999"), BigInt("1"))), "1.00000000000e+13");
  EXPECT_EQ(toDecimal(ratNormalize(BigInt("999999999999999"), BigInt("1000000000000000"))), "1.00000000000");
  EXPECT_EQ(toDecimal(BigRational(testing::oracleFactorial(20))), "2.43290200818e+18");
  EXPECT_EQ(toDecimal(rat(1, 120000)), "8.33333333333e-6");
  EXPECT_EQ(toDecimal(rat(1, 1000)), "0.00100000000000");
}

}  // namespace
}  // namespace factineq
