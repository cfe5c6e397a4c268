#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ntil/geometry.hpp"

namespace ntil {

// Three pairwise distinct collinear points.
struct CollinearWitness {
  GridPoint a;
  GridPoint b;
  GridPoint c;

  friend constexpr bool operator==(const CollinearWitness&, const CollinearWitness&) = default;
};

// Closed axis-parallel box of lattice cells.
struct Box {
  Coord x_min = 0;
  Coord x_max = -1;
  Coord y_min = 0;
  Coord y_max = -1;

  bool empty() const { return x_max < x_min || y_max < y_min; }
  bool contains(GridPoint p) const { return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max; }
  Coord width() const { return empty() ? 0 : x_max - x_min + 1; }
  Coord height() const { return empty() ? 0 : y_max - y_min + 1; }
};

// Inclusive range [first, second] of t with origin + t*step inside box; empty
// when first > second. step must be nonzero.
std::pair<Wide, Wide> steps_inside(GridPoint origin, ReducedDirection step, const Box& box);

class NotInGeneralPosition : public std::runtime_error {
 public:
  explicit NotInGeneralPosition(const CollinearWitness& w);
  const CollinearWitness& witness() const { return witness_; }

 private:
  CollinearWitness witness_;
};

// O(k^3) scan; returns the first collinear triple in lexicographic order of
// the sorted points.
std::optional<CollinearWitness> verify_brute(std::span<const GridPoint> points);

// O(k^2): for each anchor (in lexicographic order) the later points are
// bucketed by reduced direction; a repeated direction is a witness.
// Throws std::invalid_argument on duplicate points.
std::optional<CollinearWitness> verify_fast(std::span<const GridPoint> points);

struct SaturationResult {
  bool saturated = false;
  std::vector<GridPoint> addable;  // lexicographic order
};

// Throws NotInGeneralPosition if `points` already contains a collinear triple,
// std::invalid_argument if a point lies outside `region`.
SaturationResult is_saturated(std::span<const GridPoint> points, const Box& region);

}  // namespace ntil
