#include <gtest/gtest.h>

#include "karp/error.hpp"
#include "karp/farey.hpp"
#include "oracles.hpp"

using karp::Fraction;

TEST(Fraction, ReducesAndOrders) {
  EXPECT_EQ(Fraction(2, 4), Fraction(1, 2));
  EXPECT_EQ(Fraction(0, 7), Fraction(0, 1));
  EXPECT_EQ(Fraction(3, 3), Fraction(1, 1));
  EXPECT_LT(Fraction(2, 7), Fraction(1, 3));
  EXPECT_EQ(Fraction::parse("2/7"), Fraction(2, 7));
  EXPECT_EQ(Fraction::parse(" 4 / 8 ").str(), "1/2");
}

TEST(Fraction, RejectsInvalid) {
  EXPECT_THROW(Fraction(3, 2), karp::DomainError);
  EXPECT_THROW(Fraction(-1, 2), karp::DomainError);
  EXPECT_THROW(Fraction(1, 0), karp::DomainError);
  EXPECT_THROW(Fraction::parse("1-2"), karp::DomainError);
  EXPECT_THROW(Fraction::parse("a/2"), karp::DomainError);
}

TEST(FareySequence, SmallOrders) {
  EXPECT_EQ(karp::farey_sequence(1), (std::vector<Fraction>{{0, 1}, {1, 1}}));
  EXPECT_EQ(karp::farey_sequence(3), (std::vector<Fraction>{{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}}));
  const std::vector<Fraction> f5{{0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2},
                                 {3, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 1}};
  EXPECT_EQ(karp::farey_sequence(5), f5);
}

TEST(FareySequence, MatchesExhaustiveEnumeration) {
  for (int n = 1; n <= 30; ++n) {
    const auto seq = karp::farey_sequence(n);
    EXPECT_EQ(seq, oracle::farey_brute(n)) << "n = " << n;
    EXPECT_EQ(static_cast<std::int64_t>(seq.size()), karp::farey_length(n));
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      ASSERT_LT(seq[i], seq[i + 1]);
      EXPECT_TRUE(karp::is_farey_pair(seq[i], seq[i + 1], n));
    }
  }
}

TEST(FareySequence, RejectsZeroOrder) { EXPECT_THROW(karp::farey_sequence(0), karp::InvalidOrderError); }

TEST(FareyPair, Examples) {
  EXPECT_TRUE(karp::is_farey_pair({1, 3}, {1, 2}, 3));
  EXPECT_FALSE(karp::is_farey_pair({1, 4}, {1, 3}, 9));
  EXPECT_TRUE(karp::is_farey_pair({2, 7}, {1, 3}, 9));
}

TEST(FareyPair, Errors) {
  EXPECT_THROW(karp::is_farey_pair({1, 2}, {1, 3}, 3), karp::OrderingError);
  EXPECT_THROW(karp::is_farey_pair({1, 3}, {1, 3}, 3), karp::OrderingError);
  EXPECT_THROW(karp::is_farey_pair({1, 5}, {1, 4}, 4), karp::OutOfOrderError);
}

TEST(FareyPair, ArithmeticMatchesBetweenness) {
  for (int n = 1; n <= 30; ++n) {
    const auto all = oracle::farey_brute(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j)
        ASSERT_EQ(karp::is_farey_pair(all[i], all[j], n), oracle::nothing_between(all[i], all[j], n))
            << all[i].str() << ", " << all[j].str() << " at n = " << n;
  }
}

TEST(DivisorPair, Examples) {
  EXPECT_TRUE(karp::divisor_pair_check(3, 9));
  EXPECT_TRUE(karp::divisor_pair_check(2, 9));
  EXPECT_FALSE(karp::divisor_pair_check(4, 10));
  EXPECT_THROW(karp::divisor_pair_check(1, 9), karp::DomainError);
  EXPECT_THROW(karp::divisor_pair_check(9, 9), karp::DomainError);
}

TEST(DivisorPair, MatchesDivisibilityAndScan) {
  for (int n = 3; n <= 30; ++n) {
    for (int d = 2; d < n; ++d) {
      const bool expected = n % d == 0 || (n - 1) % d == 0;
      EXPECT_EQ(karp::divisor_pair_check(d, n), expected) << d << ", " << n;
      EXPECT_EQ(oracle::nothing_between(Fraction(d, n), Fraction(d, n - 1), n), expected) << d << ", " << n;
    }
  }
}

TEST(DivisorPair, PowerTargetsAreFareyPairsExactlyWhenLongEnough) {
  // d | m, k = m/d: (1/k, d/(m-1)) is a Farey pair iff k + m - 1 > n
  for (int n = 3; n <= 30; ++n) {
    for (int m = 3; m <= n; ++m) {
      for (int d = 2; d < m; ++d) {
        if (m % d == 0) {
          const int k = m / d;
          EXPECT_EQ(karp::is_farey_pair(Fraction(1, k), Fraction(d, m - 1), n), k + m - 1 > n);
        }
        if ((m - 1) % d == 0) {
          const int k = (m - 1) / d;
          EXPECT_EQ(karp::is_farey_pair(Fraction(d, m), Fraction(1, k), n), m + k > n);
        }
      }
    }
  }
}

TEST(EulerPhi, Values) {
  const std::vector<std::int64_t> expected{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
  for (std::size_t k = 1; k <= expected.size(); ++k) EXPECT_EQ(karp::euler_phi(static_cast<std::int64_t>(k)), expected[k - 1]);
}
