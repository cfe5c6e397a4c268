#include "ntil/gadgets.hpp"

#include <set>
#include <stdexcept>
#include <tuple>

#include "ntil/numtheory.hpp"

namespace ntil {

void validate(const ParabolaParams& params) {
  if (params.p < 2 || !is_prime(static_cast<std::uint64_t>(params.p))) {
    throw std::invalid_argument("parabola modulus must be prime");
  }
  if (params.a < 0 || params.a >= params.p || params.b < 0 || params.b >= params.p) {
    throw std::invalid_argument("parabola parameters must be residues in [0, p-1]");
  }
}

std::int64_t parabola_value(const ParabolaParams& params, std::int64_t x) {
  const std::int64_t d = mod_floor(x - params.a, params.p);
  return mod_floor(static_cast<std::int64_t>(static_cast<Wide>(d) * d % params.p) + params.b, params.p);
}

std::vector<GridPoint> parabola_points(const ParabolaParams& params) {
  validate(params);
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(params.p));
  for (std::int64_t x = 0; x < params.p; ++x) out.push_back({x, parabola_value(params, x)});
  return out;
}

std::int64_t mod_inverse(std::int64_t v, std::int64_t p) {
  std::int64_t old_r = mod_floor(v, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("value not invertible modulo p");
  return mod_floor(old_s, p);
}

ParabolaParams fit_parabola(std::int64_t p, GridPoint p0, GridPoint p1) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("fit_parabola needs an odd prime modulus");
  }
  for (const GridPoint& q : {p0, p1}) {
    if (q.x < 0 || q.x >= p || q.y < 0 || q.y >= p) throw std::invalid_argument("point outside [0, p-1]^2");
  }
  if (p0.x == p1.x) throw std::invalid_argument("no unique parabola through a vertical pair");
  const Wide rhs = static_cast<Wide>(p0.x) * p0.x - static_cast<Wide>(p1.x) * p1.x - p0.y + p1.y;
  const std::int64_t lhs_coeff = mod_floor(2 * (p0.x - p1.x), p);
  const std::int64_t rhs_mod = mod_floor(static_cast<std::int64_t>(rhs % p), p);
  const std::int64_t a = static_cast<std::int64_t>(static_cast<Wide>(rhs_mod) * mod_inverse(lhs_coeff, p) % p);
  const std::int64_t d = mod_floor(p0.x - a, p);
  const std::int64_t b = mod_floor(p0.y - static_cast<std::int64_t>(static_cast<Wide>(d) * d % p), p);
  return {p, a, b};
}

bool unique_difference_property(const ParabolaParams& params) {
  const std::vector<GridPoint> pts = parabola_points(params);
  std::set<std::tuple<Coord, Coord, Coord>> signatures;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const ReducedDirection d = direction(pts[i], pts[j]);
      const Coord dx = pts[j].x - pts[i].x;
      const Coord dy = pts[j].y - pts[i].y;
      if (!signatures.emplace(d.dx, d.dy, dx * dx + dy * dy).second) return false;
    }
  }
  return true;
}

std::vector<GridPoint> place_in_square(const ParabolaParams& params, const SquareSpec& square) {
  if (params.p > square.side) throw std::invalid_argument("parabola does not fit in square");
  std::vector<GridPoint> out = parabola_points(params);
  for (GridPoint& q : out) q = {square.left() + q.x, square.top() - q.y};
  return out;
}

}  // namespace ntil
