#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ntil {

using Coord = std::int64_t;
using Wide = __int128;

// An exact lattice point.
struct GridPoint {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Primitive direction vector, sign-normalized so that dx > 0, or dx == 0 and dy == 1.
// Parallel segments share the same ReducedDirection.
struct ReducedDirection {
  Coord dx = 1;
  Coord dy = 0;

  friend constexpr auto operator<=>(const ReducedDirection&, const ReducedDirection&) = default;
};

// Canonical line a*x + b*y = c with gcd(|a|,|b|,|c|) = 1 and the leading
// nonzero of (a, b) positive. Equal keys describe the same line.
struct LineKey {
  Coord a = 0;
  Coord b = 1;
  Coord c = 0;

  bool vertical() const { return b == 0; }
  bool contains(GridPoint p) const;

  friend constexpr auto operator<=>(const LineKey&, const LineKey&) = default;
};

// Result of intersecting a line with the column x = const.
struct ColumnHit {
  enum class Kind { kMiss, kPoint, kWholeColumn };
  Kind kind = Kind::kMiss;
  Coord y = 0;

  bool is_point() const { return kind == Kind::kPoint; }
};

// (q - p) x (r - p), computed in 128 bits.
Wide cross(GridPoint p, GridPoint q, GridPoint r);

bool collinear(GridPoint p, GridPoint q, GridPoint r);

// Throws std::invalid_argument("degenerate direction") when p == q.
ReducedDirection direction(GridPoint p, GridPoint q);

// Throws std::invalid_argument when p == q.
LineKey line_through(GridPoint p, GridPoint q);

ColumnHit lattice_y_at(const LineKey& line, Coord x);

Coord gcd(Coord a, Coord b);

// Floor/ceil division for a signed numerator and positive denominator.
Wide floor_div(Wide num, Wide den);
Wide ceil_div(Wide num, Wide den);

namespace detail {
inline std::size_t mix(std::size_t seed, std::uint64_t v) {
  v ^= v >> 33;
  v *= 0xff51afd7ed558ccdULL;
  v ^= v >> 33;
  v *= 0xc4ceb9fe1a85ec53ULL;
  v ^= v >> 33;
  return seed ^ (static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace detail

}  // namespace ntil

template <>
struct std::hash<ntil::GridPoint> {
  std::size_t operator()(const ntil::GridPoint& p) const noexcept {
    return ntil::detail::mix(ntil::detail::mix(0, static_cast<std::uint64_t>(p.x)), static_cast<std::uint64_t>(p.y));
  }
};

template <>
struct std::hash<ntil::ReducedDirection> {
  std::size_t operator()(const ntil::ReducedDirection& d) const noexcept {
    return ntil::detail::mix(ntil::detail::mix(1, static_cast<std::uint64_t>(d.dx)), static_cast<std::uint64_t>(d.dy));
  }
};

template <>
struct std::hash<ntil::LineKey> {
  std::size_t operator()(const ntil::LineKey& l) const noexcept {
    std::size_t h = ntil::detail::mix(2, static_cast<std::uint64_t>(l.a));
    h = ntil::detail::mix(h, static_cast<std::uint64_t>(l.b));
    return ntil::detail::mix(h, static_cast<std::uint64_t>(l.c));
  }
};
