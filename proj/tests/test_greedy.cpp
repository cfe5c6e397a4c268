#include <random>

#include <gtest/gtest.h>

#include "ntil/greedy.hpp"
#include "ntil/verify.hpp"

using namespace ntil;

namespace {

const GreedyVariant kAll[] = {kLexStrict, kLexWeak, kMod2Strict, kMod2Weak, kLexUnbounded,
                              {2, RowBound::kNone}};

}  // namespace

TEST(Variant, NamesRoundTrip) {
  for (const GreedyVariant& v : kAll) EXPECT_EQ(GreedyVariant::parse(v.name()), v);
  EXPECT_EQ(GreedyVariant::parse("lexlt"), kSLexLt);
  EXPECT_EQ(GreedyVariant::parse("mod2lex"), kSMod2Lex);
  EXPECT_EQ(GreedyVariant::parse("lex"), kLexUnbounded);
  EXPECT_EQ(GreedyVariant::parse("bogus"), std::nullopt);
  EXPECT_EQ(kLexStrict.name(), "lex-strict");
  EXPECT_EQ(kMod2Weak.name(), "mod2-weak");
}

TEST(Greedy, Examples) {
  const std::vector<GridPoint> five = {{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 5}};
  EXPECT_EQ(greedy_oracle(5, kLexWeak).points, five);
  EXPECT_EQ(greedy_fast(5, kLexWeak).points, five);

  const GreedyResult strict = greedy_fast(2, kLexStrict);
  EXPECT_EQ(strict.points, (std::vector<GridPoint>{{2, 1}}));
  EXPECT_EQ(strict.skipped_columns, (std::vector<Coord>{1}));
}

TEST(Greedy, InvalidArguments) {
  EXPECT_THROW(greedy_fast(0, kLexWeak), std::invalid_argument);
  EXPECT_THROW(greedy_oracle(5, {3, RowBound::kWeak}), std::invalid_argument);
}

TEST(Greedy, PublishedCheckpoints) {
  const GreedyResult lex = greedy_fast(3000, kSLexLt);
  EXPECT_EQ(count_in_square(lex.points, 100), 81u);
  EXPECT_EQ(count_in_square(lex.points, 1000), 830u);
  EXPECT_EQ(count_in_square(lex.points, 3000), 2515u);
  const GreedyResult mod2 = greedy_fast(500, kSMod2Lex);
  EXPECT_EQ(count_in_square(mod2.points, 500), 250u);
}

TEST(BlockedGrid, MarkBeyond) {
  BlockedGrid g(10, 10);
  g.mark_beyond({1, 1}, {2, 2});
  for (Coord k = 3; k <= 10; ++k) EXPECT_TRUE(g.blocked({k, k}));
  EXPECT_FALSE(g.blocked({2, 2}));
  EXPECT_EQ(g.blocked_count(), 8u);

  BlockedGrid h(10, 10);
  h.mark_beyond({1, 10}, {3, 7});  // direction (2,-3): (5,4), (7,1)
  EXPECT_TRUE(h.blocked({5, 4}));
  EXPECT_TRUE(h.blocked({7, 1}));
  EXPECT_EQ(h.blocked_count(), 2u);

  // q above the grid: only the in-grid cells of the line are marked.
  BlockedGrid up(10, 5);
  up.mark_beyond({1, 9}, {2, 8});
  EXPECT_TRUE(up.blocked({5, 5}));
  EXPECT_TRUE(up.blocked({9, 1}));
  EXPECT_EQ(up.blocked_count(), 5u);

  EXPECT_THROW(g.mark_beyond({2, 2}, {2, 5}), std::invalid_argument);
}

TEST(BlockedGrid, FirstFreeAcrossWords) {
  BlockedGrid g(3, 200);
  for (Coord y = 1; y <= 150; ++y) g.block({2, y});
  EXPECT_EQ(g.first_free(2, 200), 151);
  EXPECT_EQ(g.first_free(2, 150), std::nullopt);
  EXPECT_EQ(g.first_free(1, 200), 1);
  EXPECT_EQ(g.first_free(3, 0), std::nullopt);
}

// Ordered output identity between the engines.
TEST(Property, EnginesAgree) {
  for (const GreedyVariant& v : {kLexStrict, kLexWeak, kMod2Strict, kMod2Weak}) {
    for (Coord n : {1, 2, 3, 7, 64, 65, 128, 257, 600}) {
      const GreedyResult a = greedy_fast(n, v), b = greedy_oracle(n, v);
      ASSERT_EQ(a.points, b.points) << v.name() << " n=" << n;
      ASSERT_EQ(a.skipped_columns, b.skipped_columns) << v.name() << " n=" << n;
    }
  }
  for (const GreedyVariant& v : {kLexUnbounded, GreedyVariant{2, RowBound::kNone}}) {
    for (Coord n : {1, 5, 40, 150}) ASSERT_EQ(greedy_fast(n, v).points, greedy_oracle(n, v).points) << v.name();
  }
}

TEST(Property, OutputsInGeneralPosition) {
  for (const GreedyVariant& v : kAll) {
    const GreedyResult r = greedy_fast(300, v);
    EXPECT_FALSE(verify_fast(r.points)) << v.name();
    EXPECT_FALSE(verify_brute(std::span(r.points).first(std::min<std::size_t>(r.points.size(), 120)))) << v.name();
  }
}

// Column i only looks at columns < i, so a longer run extends a shorter one.
TEST(Property, PrefixStable) {
  for (const GreedyVariant& v : {kLexStrict, kLexWeak, kMod2Weak, kLexUnbounded}) {
    const GreedyResult big = greedy_fast(400, v);
    for (Coord n : {50, 199, 300}) {
      const GreedyResult small = greedy_fast(n, v);
      ASSERT_LE(small.points.size(), big.points.size());
      ASSERT_TRUE(std::equal(small.points.begin(), small.points.end(), big.points.begin())) << v.name() << ' ' << n;
    }
  }
}

// Bounded greedy output is maximal within its admissible cells: every free
// cell at or below a placed point of its column would create a triple.
TEST(Property, EarlierCellsBlocked) {
  const GreedyResult r = greedy_oracle(120, kLexWeak);
  for (std::size_t k = 0; k < r.points.size(); ++k) {
    const GridPoint q = r.points[k];
    const std::span<const GridPoint> before(r.points.data(), k);
    for (Coord j = 1; j < q.y; ++j) {
      std::vector<GridPoint> trial(before.begin(), before.end());
      trial.push_back({q.x, j});
      ASSERT_TRUE(verify_brute(trial)) << q.x << ' ' << j;
    }
  }
}

TEST(Table1, SmallRun) {
  const Table1Report r = table1_check(GreedyEngine::kOracle, 500);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[0].checkpoints.size(), 5u);
  EXPECT_EQ(r.lex_matches, (std::vector<RowBound>{RowBound::kWeak}));
  EXPECT_EQ(r.mod2_matches, (std::vector<RowBound>{RowBound::kStrict, RowBound::kWeak}));
  ASSERT_FALSE(r.rows[0].skipped_columns.empty());
  EXPECT_EQ(r.rows[0].skipped_columns.front(), 1);
  EXPECT_TRUE(r.rows[3].skipped_columns.empty());
  EXPECT_THROW(table1_check(GreedyEngine::kFast, 99), std::invalid_argument);
}

TEST(SlopeProperty, Examples) {
  const std::vector<GridPoint> one = {{2, 1}};
  EXPECT_TRUE(mod2lex_slope_property(one).holds);
  const std::vector<GridPoint> bad = {{3, 2}};
  EXPECT_FALSE(mod2lex_slope_property(bad).holds);
}

// Column 48 is the one place up to 10^4 where the bound is attained with
// equality; every other point satisfies 3j < 2i.
TEST(SlopeProperty, EqualityAtColumn48) {
  const GreedyResult r = greedy_fast(800, kSMod2Lex);
  std::vector<GridPoint> offenders;
  for (const GridPoint& p : r.points) {
    if (3 * p.y >= 2 * p.x) offenders.push_back(p);
  }
  EXPECT_EQ(offenders, (std::vector<GridPoint>{{48, 32}}));
  const SlopePropertyResult s = mod2lex_slope_property(r.points);
  EXPECT_FALSE(s.holds);
  EXPECT_DOUBLE_EQ(s.max_ratio, 2.0 / 3.0);
  std::vector<GridPoint> rest = r.points;
  std::erase(rest, GridPoint{48, 32});
  EXPECT_TRUE(mod2lex_slope_property(rest).holds);
}
