#pragma once

#include "ntil/geometry.hpp"
#include "ntil/verify.hpp"

namespace ntil {

// Axis-parallel square of side*side lattice cells hanging down and to the
// right of its top-left lattice corner.
struct SquareSpec {
  int n = 0;
  Coord side = 0;
  GridPoint top_left;

  Coord left() const { return top_left.x; }
  Coord right() const { return top_left.x + side - 1; }
  Coord top() const { return top_left.y; }
  Coord bottom() const { return top_left.y - side + 1; }
  GridPoint bottom_right() const { return {right(), bottom()}; }
  GridPoint bottom_left() const { return {left(), bottom()}; }
  GridPoint top_right() const { return {right(), top()}; }
  Box box() const { return {left(), right(), bottom(), top()}; }
  bool contains(GridPoint p) const { return box().contains(p); }
};

}  // namespace ntil
