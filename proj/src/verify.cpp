#include "ntil/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <string>
#include <unordered_map>

namespace ntil {

namespace {

std::string describe(const CollinearWitness& w) {
  std::ostringstream os;
  os << "collinear triple (" << w.a.x << "," << w.a.y << ") (" << w.b.x << "," << w.b.y << ") (" << w.c.x << ","
     << w.c.y << ")";
  return os.str();
}

std::vector<GridPoint> sorted_copy(std::span<const GridPoint> points) {
  std::vector<GridPoint> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::pair<Wide, Wide> steps_inside(GridPoint origin, ReducedDirection step, const Box& box) {
  Wide lo = std::numeric_limits<Coord>::min();
  Wide hi = std::numeric_limits<Coord>::max();
  auto clamp_axis = [&](Coord o, Coord s, Coord min, Coord max) {
    if (s == 0) {
      if (o < min || o > max) hi = lo - 1;
      return;
    }
    const Wide a = static_cast<Wide>(min) - o;
    const Wide b = static_cast<Wide>(max) - o;
    if (s > 0) {
      lo = std::max(lo, ceil_div(a, s));
      hi = std::min(hi, floor_div(b, s));
    } else {
      lo = std::max(lo, ceil_div(-b, -s));
      hi = std::min(hi, floor_div(-a, -s));
    }
  };
  clamp_axis(origin.x, step.dx, box.x_min, box.x_max);
  clamp_axis(origin.y, step.dy, box.y_min, box.y_max);
  return {lo, hi};
}

NotInGeneralPosition::NotInGeneralPosition(const CollinearWitness& w)
    : std::runtime_error("not in general position: " + describe(w)), witness_(w) {}

std::optional<CollinearWitness> verify_brute(std::span<const GridPoint> points) {
  const std::vector<GridPoint> pts = sorted_copy(points);
  const std::size_t k = pts.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      for (std::size_t l = j + 1; l < k; ++l) {
        if (collinear(pts[i], pts[j], pts[l])) return CollinearWitness{pts[i], pts[j], pts[l]};
      }
    }
  }
  return std::nullopt;
}

std::optional<CollinearWitness> verify_fast(std::span<const GridPoint> points) {
  const std::vector<GridPoint> pts = sorted_copy(points);
  const std::size_t k = pts.size();
  std::unordered_map<ReducedDirection, std::size_t> seen;
  seen.reserve(k);
  for (std::size_t i = 0; i + 2 < k; ++i) {
    seen.clear();
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto [it, inserted] = seen.try_emplace(direction(pts[i], pts[j]), j);
      if (!inserted) return CollinearWitness{pts[i], pts[it->second], pts[j]};
    }
  }
  return std::nullopt;
}

SaturationResult is_saturated(std::span<const GridPoint> points, const Box& region) {
  for (const GridPoint& p : points) {
    if (!region.contains(p)) throw std::invalid_argument("point outside saturation region");
  }
  if (auto w = verify_fast(points)) throw NotInGeneralPosition(*w);

  const Coord w = region.width();
  const Coord h = region.height();
  std::vector<bool> blocked(static_cast<std::size_t>(w * h), false);
  auto cell = [&](GridPoint p) { return static_cast<std::size_t>((p.x - region.x_min) * h + (p.y - region.y_min)); };

  for (const GridPoint& p : points) blocked[cell(p)] = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const ReducedDirection d = direction(points[i], points[j]);
      const GridPoint o = points[i];
      const auto [t_lo, t_hi] = steps_inside(o, d, region);
      for (Wide t = t_lo; t <= t_hi; ++t) {
        blocked[cell({static_cast<Coord>(o.x + t * d.dx), static_cast<Coord>(o.y + t * d.dy)})] = true;
      }
    }
  }

  SaturationResult out;
  for (Coord x = region.x_min; x <= region.x_max; ++x) {
    for (Coord y = region.y_min; y <= region.y_max; ++y) {
      if (!blocked[cell({x, y})]) out.addable.push_back({x, y});
    }
  }
  out.saturated = out.addable.empty();
  return out;
}

}  // namespace ntil
