#pragma once

#include <cstdint>
#include <vector>

#include "ntil/geometry.hpp"
#include "ntil/square.hpp"

namespace ntil {

// The modular parabola y = (x - a)^2 + b (mod p).
struct ParabolaParams {
  std::int64_t p = 2;
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend constexpr auto operator<=>(const ParabolaParams&, const ParabolaParams&) = default;
};

// Throws std::invalid_argument unless p is prime and 0 <= a, b < p.
void validate(const ParabolaParams& params);

// Residue of (x - a)^2 + b modulo p.
std::int64_t parabola_value(const ParabolaParams& params, std::int64_t x);

// {(x, ((x-a)^2 + b) mod p) : 0 <= x < p}, ordered by x.
std::vector<GridPoint> parabola_points(const ParabolaParams& params);

// The unique (a, b) with (x_i - a)^2 + b = y_i (mod p) for both points.
// Subtracting the two equations leaves 2a(x0 - x1) = x0^2 - x1^2 - y0 + y1,
// which is solvable exactly when p is odd and x0 != x1.
ParabolaParams fit_parabola(std::int64_t p, GridPoint p0, GridPoint p1);

// True iff no two distinct unordered pairs of parabola points span
// translated copies of the same segment.
bool unique_difference_property(const ParabolaParams& params);

// Maps raw residue coordinates (x', y') to (left + x', top - y').
// Throws std::invalid_argument when p exceeds the square side.
std::vector<GridPoint> place_in_square(const ParabolaParams& params, const SquareSpec& square);

std::int64_t mod_inverse(std::int64_t v, std::int64_t p);

inline std::int64_t mod_floor(std::int64_t v, std::int64_t p) {
  const std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace ntil
