#include <gtest/gtest.h>

#include "invforms/arith.hpp"
#include "invforms/errors.hpp"
#include "invforms/integer.hpp"

using namespace invforms;

TEST(BaseExpansion, Digits) {
  const BaseExpansion e(37, 3);
  std::uint64_t v = 0, pw = 1;
  for (int d : e.digits) {
    EXPECT_LT(d, 3);
    v += d * pw;
    pw *= 3;
  }
  EXPECT_EQ(v, 37u);
  EXPECT_NE(e.digits.back(), 0);
  EXPECT_EQ(e.digit(10), 0);
  EXPECT_THROW(BaseExpansion(5, 4), InputError);
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains_to_base_p(13, 0, 2));
  EXPECT_TRUE(contains_to_base_p(3, 1, 2));
  EXPECT_FALSE(contains_to_base_p(4, 1, 2));
  EXPECT_TRUE(contains_to_base_p(10, 9, 3));  // 101_3 contains 100_3
  EXPECT_THROW(contains_to_base_p(3, 1, 6), InputError);
}

TEST(NuP, Examples) {
  EXPECT_EQ(nu_p(8, 2), 3);
  EXPECT_EQ(nu_p(12, 2), 2);
  EXPECT_EQ(nu_p(7, 2), 0);
  EXPECT_EQ(nu_p(54, 3), 3);
  EXPECT_THROW(nu_p(0, 2), InputError);
}

TEST(BinomNuP, Examples) {
  EXPECT_EQ(binom_nu_p(2, 1, 2), 1);
  EXPECT_EQ(binom_nu_p(9, 0, 2), 0);
  EXPECT_EQ(binom_nu_p(4, 2, 2), 1);
  EXPECT_THROW(binom_nu_p(2, 3, 2), InputError);
}

TEST(BinomNuP, MatchesBigIntegerValuation) {
  for (int p : {2, 3, 5}) {
    for (std::uint64_t x = 0; x <= 80; ++x) {
      for (std::uint64_t y = 0; y <= x; ++y) {
        Integer c = binomial(static_cast<long>(x), static_cast<long>(y));
        int v = 0;
        while (c % p == 0) {
          c /= p;
          ++v;
        }
        ASSERT_EQ(binom_nu_p(x, y, p), v) << x << ' ' << y << ' ' << p;
      }
    }
  }
}

TEST(Contains, LucasLink) {
  for (std::uint64_t a = 0; a <= 4096; ++a) {
    for (std::uint64_t b = 0; b <= a; ++b) {
      ASSERT_EQ(contains_to_base_p(a, b, 2), binom_nu_p(a, b, 2) == 0) << a << ' ' << b;
    }
  }
}

TEST(BinomDiv4, Examples) {
  EXPECT_FALSE(binom_div4_criterion(2, 0, 0));
  EXPECT_TRUE(binom_div4_criterion(4, 0, 0));
  EXPECT_FALSE(binom_div4_criterion(6, 0, 0));
  EXPECT_THROW(binom_div4_criterion(3, 0, 0), InputError);  // 4 is not 1 mod 2
  EXPECT_THROW(binom_div4_criterion(5, 1, 2), InputError);  // t >= 2^i
}

TEST(BinomDiv4, MatchesDirectComputation) {
  for (std::int64_t l = 1; l <= 256; ++l) {
    for (int i = 0; (1 << i) <= l; ++i) {
      const std::int64_t m = std::int64_t{2} << i;
      const std::int64_t t = (l + 1) % m - (std::int64_t{1} << i);
      if (t < 0 || l - t < (std::int64_t{1} << i)) continue;
      const bool direct = binomial(l - t, std::int64_t{1} << i) % 4 == 0;
      ASSERT_EQ(binom_div4_criterion(l, i, t), direct) << l << ' ' << i;
      ASSERT_EQ(direct, (l + 1) % (2 * m) == (std::int64_t{1} << i) + t) << l << ' ' << i;
    }
  }
}

TEST(Primes, Basics) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_power_of_two(64));
  EXPECT_FALSE(is_power_of_two(0));
  EXPECT_EQ(exact_log2(64), 6);
}
