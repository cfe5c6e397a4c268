#include "ntil/geometry.hpp"

#include <limits>
#include <stdexcept>

namespace ntil {

namespace {

Coord checked_sub(Coord a, Coord b) {
  Coord out = 0;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw std::overflow_error("coordinate difference overflows 64 bits");
  }
  return out;
}

Coord narrow(Wide v) {
  if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min()) {
    throw std::overflow_error("line coefficient overflows 64 bits");
  }
  return static_cast<Coord>(v);
}

}  // namespace

Coord gcd(Coord a, Coord b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Coord t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Wide floor_div(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Wide ceil_div(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
  return q;
}

Wide cross(GridPoint p, GridPoint q, GridPoint r) {
  const Wide ux = static_cast<Wide>(q.x) - p.x;
  const Wide uy = static_cast<Wide>(q.y) - p.y;
  const Wide vx = static_cast<Wide>(r.x) - p.x;
  const Wide vy = static_cast<Wide>(r.y) - p.y;
  return ux * vy - uy * vx;
}

bool collinear(GridPoint p, GridPoint q, GridPoint r) { return cross(p, q, r) == 0; }

ReducedDirection direction(GridPoint p, GridPoint q) {
  if (p == q) throw std::invalid_argument("degenerate direction");
  Coord dx = checked_sub(q.x, p.x);
  Coord dy = checked_sub(q.y, p.y);
  const Coord g = gcd(dx, dy);
  dx /= g;
  dy /= g;
  if (dx < 0 || (dx == 0 && dy < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy};
}

LineKey line_through(GridPoint p, GridPoint q) {
  if (p == q) throw std::invalid_argument("line through a single point is undefined");
  const ReducedDirection d = direction(p, q);
  // Normal (dy, -dx) is already primitive, so gcd(a, b, c) = 1.
  Coord a = d.dy;
  Coord b = -d.dx;
  Coord c = narrow(static_cast<Wide>(a) * p.x + static_cast<Wide>(b) * p.y);
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

bool LineKey::contains(GridPoint p) const {
  return static_cast<Wide>(a) * p.x + static_cast<Wide>(b) * p.y == static_cast<Wide>(c);
}

ColumnHit lattice_y_at(const LineKey& line, Coord x) {
  if (line.vertical()) {
    // a == 1 for a canonical vertical line, so the column is x == c.
    if (static_cast<Wide>(line.a) * x == line.c) return {ColumnHit::Kind::kWholeColumn, 0};
    return {};
  }
  const Wide num = static_cast<Wide>(line.c) - static_cast<Wide>(line.a) * x;
  if (num % line.b != 0) return {};
  return {ColumnHit::Kind::kPoint, narrow(num / line.b)};
}

}  // namespace ntil
