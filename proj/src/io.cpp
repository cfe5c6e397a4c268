#include "ntil/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <unordered_set>

namespace ntil {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

Coord parse_coord(std::string_view field, std::size_t line_no) {
  Coord v = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError(line_no, "bad integer '" + std::string(field) + "'");
  }
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string row_bound_name(RowBound rb) {
  switch (rb) {
    case RowBound::kStrict:
      return "strict";
    case RowBound::kWeak:
      return "weak";
    case RowBound::kNone:
      return "none";
  }
  return "none";
}

}  // namespace

std::vector<GridPoint> read_points(std::istream& in) {
  std::vector<GridPoint> pts;
  std::unordered_set<GridPoint> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(line_no, "expected two tab-separated integers");
    }
    const std::string_view view(line);
    const GridPoint p{parse_coord(view.substr(0, tab), line_no), parse_coord(view.substr(tab + 1), line_no)};
    if (!seen.insert(p).second) throw ParseError(line_no, "repeated point");
    pts.push_back(p);
  }
  return pts;
}

std::vector<GridPoint> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return read_points(in);
}

void write_points(std::ostream& out, std::span<const GridPoint> points, std::span<const std::string> comments) {
  for (const std::string& c : comments) out << "# " << c << '\n';
  for (const GridPoint& p : points) out << p.x << '\t' << p.y << '\n';
}

std::string render_svg(std::span<const GridPoint> points, const std::string& title) {
  Coord x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  if (!points.empty()) {
    x_min = x_max = points.front().x;
    y_min = y_max = points.front().y;
    for (const GridPoint& p : points) {
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
      y_min = std::min(y_min, p.y);
      y_max = std::max(y_max, p.y);
    }
  }
  const double extent = static_cast<double>(std::max<Coord>({x_max - x_min, y_max - y_min, 1}));
  const double r = std::max(0.4, extent / 300.0);
  const double pad = 2.0 * r;
  const double w = static_cast<double>(x_max - x_min) + 2.0 * pad;
  const double h = static_cast<double>(y_max - y_min) + 2.0 * pad;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h)
     << "\" width=\"800\" height=\"" << fmt(800.0 * h / w) << "\">\n";
  if (!title.empty()) os << "<title>" << xml_escape(title) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\" fill=\"white\"/>\n";
  os << "<g fill=\"black\">\n";
  for (const GridPoint& p : points) {
    // Flip y so that larger y is drawn higher.
    const double cx = static_cast<double>(p.x - x_min) + pad;
    const double cy = static_cast<double>(y_max - p.y) + pad;
    os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(r) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

nlohmann::json to_json(const ConstructionConfig& cfg) {
  return {{"eps", cfg.eps}, {"c", cfg.c}, {"n_min", cfg.effective_n_min()}, {"n_max", cfg.n_max}};
}

nlohmann::json to_json(const SquareRecord& rec) {
  return {{"n", rec.n},
          {"side", rec.square.side},
          {"top_left", {rec.square.top_left.x, rec.square.top_left.y}},
          {"p_n", rec.params.p},
          {"a_n", rec.params.a},
          {"b_n", rec.params.b},
          {"red_raw", rec.red_raw},
          {"blue_raw", rec.blue_raw},
          {"red_total", rec.red_total},
          {"blue_total", rec.blue_total},
          {"tally_sum", rec.tally_sum},
          {"selected_count", rec.selected_count},
          {"red_deleted", rec.red_deleted},
          {"blue_deleted", rec.blue_deleted},
          {"kept", rec.kept},
          {"red_bound", static_cast<double>(rec.red_bound)},
          {"blue_bound", static_cast<double>(rec.blue_bound)}};
}

nlohmann::json to_json(std::span<const DensityRow> rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const DensityRow& r : rows) out.push_back({{"N", r.grid}, {"count", r.count}, {"ratio", r.ratio}});
  return out;
}

nlohmann::json to_json(const ConstructionState& state, std::span<const Coord> grid_sizes) {
  nlohmann::json squares = nlohmann::json::array();
  for (const SquareRecord& rec : state.per_square) squares.push_back(to_json(rec));
  const std::vector<DensityRow> density = density_report(state.accepted, grid_sizes, state.config.eps);
  return {{"kind", "extensible"},
          {"config", to_json(state.config)},
          {"squares", squares},
          {"accepted", state.accepted.size()},
          {"density", to_json(density)}};
}

nlohmann::json to_json(const GreedyVariant& v, Coord n, const GreedyResult& run) {
  nlohmann::json checkpoints = nlohmann::json::array();
  for (Coord c : kTable1Checkpoints) {
    if (c <= n) checkpoints.push_back({{"n", c}, {"count", count_in_square(run.points, c)}});
  }
  const SlopePropertyResult slope = mod2lex_slope_property(run.points);
  return {{"kind", "greedy"},
          {"variant", v.name()},
          {"column_step", v.column_step},
          {"row_bound", row_bound_name(v.row_bound)},
          {"n", n},
          {"count", count_in_square(run.points, n)},
          {"placed", run.points.size()},
          {"checkpoints", checkpoints},
          {"skipped_columns", run.skipped_columns.size()},
          {"max_j_over_i", slope.max_ratio},
          {"all_below_two_thirds", slope.holds}};
}

nlohmann::json to_json(const Table1Report& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Table1Row& r : report.rows) {
    rows.push_back({{"variant", r.variant.name()},
                    {"checkpoints", r.checkpoints},
                    {"expected", r.expected},
                    {"observed", r.observed},
                    {"matches", r.matches()},
                    {"skipped_columns", r.skipped_columns.size()}});
  }
  auto names = [](const std::vector<RowBound>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (RowBound rb : v) out.push_back(row_bound_name(rb));
    return out;
  };
  return {{"kind", "table1"},
          {"rows", rows},
          {"lex_matching_row_bounds", names(report.lex_matches)},
          {"mod2_matching_row_bounds", names(report.mod2_matches)}};
}

nlohmann::json to_json(const BoundCheckReport& r) {
  return {{"n", r.n}, {"eps", r.eps}, {"lhs", static_cast<double>(r.lhs)}, {"rhs", static_cast<double>(r.rhs)},
          {"holds", r.holds}};
}

std::vector<Coord> power_grid(int lo, int hi) {
  std::vector<Coord> out;
  for (int k = lo; k <= hi; ++k) out.push_back(Coord{1} << k);
  return out;
}

}  // namespace ntil
