#pragma once

#include <cstdint>
#include <optional>

namespace ntil {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t x);

// Largest prime strictly below x; nullopt when x <= 2.
std::optional<std::int64_t> prev_prime(std::int64_t x);

// Both sides of  sum_{m=1}^{n-1} 2^m / m^(1+eps)  <=  2 * 2^n / n^(1+eps).
struct BoundCheckReport {
  int n = 0;
  double eps = 0.0;
  long double lhs = 0.0L;
  long double rhs = 0.0L;
  bool holds = false;
};

// Requires n > 10 and 0 <= eps <= 1; throws std::domain_error otherwise.
BoundCheckReport check_claim_sum(int n, double eps);

// True iff a prime lies in [x - x^(21/40), x]. Throws std::domain_error when
// floor(x - x^(21/40)) < 2.
bool bhp_gap_holds(std::int64_t x);

}  // namespace ntil
