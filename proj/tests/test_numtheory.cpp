#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "ntil/numtheory.hpp"

using namespace ntil;

namespace {

std::vector<bool> sieve(std::size_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= limit; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= limit; j += i) prime[j] = false;
  }
  return prime;
}

}  // namespace

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(41));
  EXPECT_FALSE(is_prime(42));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(IsPrime, LargeKnownValues) {
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 63) - 25));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_FALSE(is_prime(3825123056546413051ULL));
  EXPECT_FALSE(is_prime(std::uint64_t{4294967291} * 4294967279ULL));
}

TEST(IsPrime, MatchesSieve) {
  const std::size_t limit = 1000000;
  const std::vector<bool> prime = sieve(limit);
  for (std::size_t x = 0; x <= limit; ++x) ASSERT_EQ(is_prime(x), prime[x]) << x;
}

TEST(PrevPrime, Examples) {
  EXPECT_EQ(prev_prime(42), 41);
  EXPECT_EQ(prev_prime(3), 2);
  EXPECT_EQ(prev_prime(2), std::nullopt);
  EXPECT_EQ(prev_prime(-5), std::nullopt);
  EXPECT_EQ(prev_prime(41), 37);
}

TEST(PrevPrime, MatchesSieve) {
  const std::size_t limit = 200000;
  const std::vector<bool> prime = sieve(limit);
  std::optional<std::int64_t> last;
  for (std::size_t x = 0; x <= limit; ++x) {
    ASSERT_EQ(prev_prime(static_cast<std::int64_t>(x)), last) << x;
    if (prime[x]) last = static_cast<std::int64_t>(x);
  }
}

// Reference values from independent 40-digit summation.
TEST(CheckClaimSum, FrozenValues) {
  struct Row {
    int n;
    double eps;
    long double lhs;
    long double rhs;
  };
  const Row rows[] = {
      {11, 1.0, 31.119899218946837994L, 33.851239669421487603L},
      {11, 0.0, 237.30793650793650794L, 372.36363636363636364L},
      {12, 0.0, 423.48975468975468975L, 682.66666666666666667L},
      {60, 0.5, 2613213859381936.4316L, 4961384207585240.0033L},
      {30, 0.1, 27573426.614184269552L, 50944403.954089123324L},
      {45, 0.7, 58971569222.011936588L, 108872583113.84371023L},
  };
  for (const Row& r : rows) {
    const BoundCheckReport rep = check_claim_sum(r.n, r.eps);
    EXPECT_TRUE(rep.holds);
    EXPECT_NEAR(static_cast<double>(rep.lhs / r.lhs), 1.0, 1e-12) << r.n << ' ' << r.eps;
    EXPECT_NEAR(static_cast<double>(rep.rhs / r.rhs), 1.0, 1e-12) << r.n << ' ' << r.eps;
  }
}

TEST(CheckClaimSum, DomainErrors) {
  EXPECT_THROW(check_claim_sum(10, 0.5), std::domain_error);
  EXPECT_THROW(check_claim_sum(20, -0.1), std::domain_error);
  EXPECT_THROW(check_claim_sum(20, 1.5), std::domain_error);
}

TEST(CheckClaimSum, Sweep) {
  for (int n = 11; n <= 60; ++n) {
    for (int k = 0; k <= 10; ++k) EXPECT_TRUE(check_claim_sum(n, k / 10.0).holds) << n << ' ' << k;
  }
}

TEST(BhpGap, Examples) {
  EXPECT_TRUE(bhp_gap_holds(100));
  EXPECT_TRUE(bhp_gap_holds(97));
  EXPECT_TRUE(bhp_gap_holds(std::int64_t{1} << 20));
  EXPECT_TRUE(bhp_gap_holds(std::int64_t{1} << 30));
  EXPECT_THROW(bhp_gap_holds(2), std::domain_error);
}

// Brute oracle: a prime in [x - x^0.525, x] by trial division.
TEST(BhpGap, MatchesTrialDivision) {
  const std::vector<bool> prime = sieve(20000);
  for (std::int64_t x = 10; x <= 20000; ++x) {
    const auto lo = static_cast<std::int64_t>(std::ceil(static_cast<double>(x) - std::pow(static_cast<double>(x), 0.525)));
    bool found = false;
    for (std::int64_t y = std::max<std::int64_t>(lo, 2); y <= x && !found; ++y) found = prime[static_cast<std::size_t>(y)];
    ASSERT_EQ(bhp_gap_holds(x), found) << x;
  }
}
