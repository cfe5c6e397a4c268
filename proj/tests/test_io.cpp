#include <random>
#include <regex>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "ntil/extensible.hpp"
#include "ntil/greedy.hpp"
#include "ntil/io.hpp"

using namespace ntil;

namespace {

std::size_t markers(const std::string& svg) {
  std::size_t n = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos; at = svg.find("<circle", at + 1)) ++n;
  return n;
}

}  // namespace

TEST(ReadPoints, ParsesCommentsAndBlanks) {
  std::istringstream in("# header\n\n1\t2\n-3\t4\n");
  EXPECT_EQ(read_points(in), (std::vector<GridPoint>{{1, 2}, {-3, 4}}));
}

TEST(ReadPoints, Errors) {
  for (const char* bad : {"1 2\n", "1\t\n", "x\t2\n", "1\t2\t3\n", "1\t2\n1\t2\n", "99999999999999999999\t1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(read_points(in), ParseError) << bad;
  }
  std::istringstream dup("1\t2\n3\t4\n1\t2\n");
  try {
    read_points(dup);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(read_points_file("/nonexistent/points.tsv"), ParseError);
}

TEST(Property, WriteReadRoundTrip) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Coord> c(-1'000'000, 1'000'000);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<GridPoint> uniq;
    while (uniq.size() < 100) uniq.insert({c(rng), c(rng)});
    std::vector<GridPoint> pts(uniq.begin(), uniq.end());
    std::shuffle(pts.begin(), pts.end(), rng);
    std::ostringstream out;
    const std::vector<std::string> comments = {"run", "seed 4"};
    write_points(out, pts, comments);
    std::istringstream in(out.str());
    ASSERT_EQ(read_points(in), pts);
  }
}

TEST(WritePoints, Format) {
  std::ostringstream out;
  const std::vector<GridPoint> pts = {{1, 2}, {3, -4}};
  const std::vector<std::string> comments = {"hello"};
  write_points(out, pts, comments);
  EXPECT_EQ(out.str(), "# hello\n1\t2\n3\t-4\n");
}

TEST(Svg, Markers) {
  const std::vector<GridPoint> one = {{1, 1}};
  const std::string svg1 = render_svg(one, "one");
  EXPECT_EQ(markers(svg1), 1u);
  EXPECT_NE(svg1.find("<svg"), std::string::npos);
  EXPECT_NE(svg1.find("</svg>"), std::string::npos);

  const std::string empty = render_svg({}, "");
  EXPECT_EQ(markers(empty), 0u);
  EXPECT_NE(empty.find("</svg>"), std::string::npos);

  const GreedyResult r = greedy_fast(500, kSLexLt);
  EXPECT_EQ(markers(render_svg(r.points, "greedy")), 424u);
  EXPECT_EQ(render_svg(r.points, "greedy"), render_svg(r.points, "greedy"));
}

TEST(Svg, EscapesTitle) {
  const std::string svg = render_svg({}, "a<b & c");
  EXPECT_EQ(svg.find("a<b"), std::string::npos);
  EXPECT_NE(svg.find("a&lt;b &amp; c"), std::string::npos);
}

TEST(Json, ReportsAreDeterministic) {
  ConstructionConfig cfg;
  cfg.n_max = 16;
  const auto grid = power_grid(13, 16);
  EXPECT_EQ(grid, (std::vector<Coord>{8192, 16384, 32768, 65536}));
  const nlohmann::json a = to_json(build(cfg), grid);
  const nlohmann::json b = to_json(build(cfg), grid);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["squares"].size(), 4u);
  EXPECT_FALSE(a.contains("seconds"));
  EXPECT_EQ(a["squares"][3]["p_n"], 41);
}

TEST(Json, BoundCheck) {
  BoundCheckReport r;
  r.n = 11;
  r.eps = 1.0;
  r.lhs = 1.5L;
  r.rhs = 2.0L;
  r.holds = true;
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["n"], 11);
  EXPECT_EQ(j["holds"], true);
}
