#include "ntil/numtheory.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ntil {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// The first twelve primes form a witness set valid below 3.3e24.
constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 w : kWitnesses) {
    if (x % w == 0) return x == w;
  }
  u64 d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<std::int64_t> prev_prime(std::int64_t x) {
  if (x <= 2) return std::nullopt;
  if (x == 3) return 2;
  // Only odd candidates remain once x > 3.
  std::int64_t cand = x - 1;
  if (cand % 2 == 0) --cand;
  for (; cand >= 3; cand -= 2) {
    if (is_prime(static_cast<u64>(cand))) return cand;
  }
  return 2;
}

BoundCheckReport check_claim_sum(int n, double eps) {
  if (n <= 10) throw std::domain_error("check_claim_sum requires n > 10");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::domain_error("check_claim_sum requires eps in [0, 1]");
  const long double e = 1.0L + static_cast<long double>(eps);
  long double lhs = 0.0L;
  for (int m = 1; m < n; ++m) {
    lhs += std::ldexp(1.0L, m) / std::pow(static_cast<long double>(m), e);
  }
  const long double rhs = 2.0L * std::ldexp(1.0L, n) / std::pow(static_cast<long double>(n), e);
  return {n, eps, lhs, rhs, lhs <= rhs};
}

bool bhp_gap_holds(std::int64_t x) {
  const long double width = std::pow(static_cast<long double>(x), 21.0L / 40.0L);
  const long double lower = static_cast<long double>(x) - width;
  if (!(std::floor(lower) >= 2.0L)) throw std::domain_error("bhp_gap_holds: interval lower end below 2");
  // Smallest integer >= lower.
  const auto first = static_cast<std::int64_t>(std::ceil(lower));
  const std::optional<std::int64_t> p = is_prime(static_cast<u64>(x)) ? std::optional<std::int64_t>(x) : prev_prime(x);
  return p && *p >= first;
}

}  // namespace ntil
