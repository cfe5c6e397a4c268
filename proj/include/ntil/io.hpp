#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ntil/extensible.hpp"
#include "ntil/geometry.hpp"
#include "ntil/greedy.hpp"
#include "ntil/numtheory.hpp"

namespace ntil {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads "x<TAB>y" lines; blank lines and lines starting with '#' are skipped.
// Throws ParseError on malformed input or repeated points.
std::vector<GridPoint> read_points(std::istream& in);
std::vector<GridPoint> read_points_file(const std::string& path);

// One "x<TAB>y\n" per point, in the given order, after optional '#' comments.
void write_points(std::ostream& out, std::span<const GridPoint> points, std::span<const std::string> comments = {});

// Self-contained SVG scatter plot, y axis pointing up, viewBox fitted to the
// bounding box of the points.
std::string render_svg(std::span<const GridPoint> points, const std::string& title = "");

nlohmann::json to_json(const ConstructionConfig& cfg);
nlohmann::json to_json(const SquareRecord& rec);
nlohmann::json to_json(const ConstructionState& state, std::span<const Coord> grid_sizes);
nlohmann::json to_json(const GreedyVariant& v, Coord n, const GreedyResult& run);
nlohmann::json to_json(const Table1Report& report);
nlohmann::json to_json(std::span<const DensityRow> rows);
nlohmann::json to_json(const BoundCheckReport& r);

// Powers of two 2^lo .. 2^hi.
std::vector<Coord> power_grid(int lo, int hi);

}  // namespace ntil
