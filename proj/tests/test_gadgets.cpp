#include <map>
#include <random>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "ntil/gadgets.hpp"
#include "ntil/numtheory.hpp"
#include "ntil/verify.hpp"

using namespace ntil;

TEST(ParabolaPoints, Examples) {
  EXPECT_EQ(parabola_points({5, 0, 0}), (std::vector<GridPoint>{{0, 0}, {1, 1}, {2, 4}, {3, 4}, {4, 1}}));
  EXPECT_EQ(parabola_points({5, 1, 0}), (std::vector<GridPoint>{{0, 1}, {1, 0}, {2, 1}, {3, 4}, {4, 4}}));
  EXPECT_EQ(parabola_points({2, 0, 1}), (std::vector<GridPoint>{{0, 1}, {1, 0}}));
}

TEST(ParabolaPoints, InvalidParams) {
  EXPECT_THROW(parabola_points({6, 0, 0}), std::invalid_argument);
  EXPECT_THROW(parabola_points({5, 5, 0}), std::invalid_argument);
  EXPECT_THROW(parabola_points({5, 0, -1}), std::invalid_argument);
}

TEST(FitParabola, Examples) {
  EXPECT_EQ(fit_parabola(7, {1, 2}, {3, 5}), (ParabolaParams{7, 3, 5}));
  EXPECT_EQ(fit_parabola(5, {0, 0}, {1, 1}), (ParabolaParams{5, 0, 0}));
  try {
    fit_parabola(5, {2, 3}, {2, 4});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "no unique parabola through a vertical pair");
  }
  EXPECT_THROW(fit_parabola(2, {0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(fit_parabola(7, {0, 0}, {1, 7}), std::invalid_argument);
}

// Every non-vertical pair lies on exactly one parabola; counted by brute
// enumeration of all p^2 parameter choices.
TEST(FitParabola, UniqueAndRoundTripExhaustive) {
  for (std::int64_t p : {5, 7, 11, 13}) {
    std::map<std::tuple<GridPoint, GridPoint>, std::vector<ParabolaParams>> through;
    for (std::int64_t a = 0; a < p; ++a) {
      for (std::int64_t b = 0; b < p; ++b) {
        const auto pts = parabola_points({p, a, b});
        for (std::size_t i = 0; i < pts.size(); ++i) {
          for (std::size_t j = i + 1; j < pts.size(); ++j) through[{pts[i], pts[j]}].push_back({p, a, b});
        }
      }
    }
    for (std::int64_t x0 = 0; x0 < p; ++x0) {
      for (std::int64_t x1 = x0 + 1; x1 < p; ++x1) {
        for (std::int64_t y0 = 0; y0 < p; ++y0) {
          for (std::int64_t y1 = 0; y1 < p; ++y1) {
            const GridPoint u{x0, y0}, v{x1, y1};
            const auto it = through.find({u, v});
            ASSERT_NE(it, through.end());
            ASSERT_EQ(it->second.size(), 1u);
            ASSERT_EQ(fit_parabola(p, u, v), it->second.front());
            ASSERT_EQ(fit_parabola(p, v, u), it->second.front());
          }
        }
      }
    }
  }
}

TEST(UniqueDifference, Examples) {
  EXPECT_TRUE(unique_difference_property({5, 0, 0}));
  EXPECT_TRUE(unique_difference_property({13, 4, 9}));
  EXPECT_TRUE(unique_difference_property({2, 0, 0}));
}

// Direct oracle: compare raw difference vectors of all pairs, up to sign.
TEST(UniqueDifference, MatchesPairwiseOracle) {
  std::mt19937_64 rng(5);
  for (std::int64_t p = 3; p <= 101; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    std::uniform_int_distribution<std::int64_t> r(0, p - 1);
    for (int k = 0; k < 10; ++k) {
      const ParabolaParams params{p, r(rng), r(rng)};
      const auto pts = parabola_points(params);
      std::set<std::pair<Coord, Coord>> diffs;
      bool unique = true;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          const Coord dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
          if (!diffs.insert({dx, dy}).second) unique = false;
        }
      }
      EXPECT_EQ(unique_difference_property(params), unique);
      EXPECT_TRUE(unique);
    }
  }
}

TEST(PlaceInSquare, Examples) {
  const SquareSpec sq{0, 10, {100, 50}};
  EXPECT_EQ(place_in_square({5, 0, 0}, sq),
            (std::vector<GridPoint>{{100, 50}, {101, 49}, {102, 46}, {103, 46}, {104, 49}}));
  const SquareSpec tight{0, 4, {0, 3}};
  EXPECT_THROW(place_in_square({5, 0, 0}, tight), std::invalid_argument);
}

TEST(PlaceInSquare, IdentityFrameIsReflection) {
  const ParabolaParams params{11, 3, 7};
  const SquareSpec sq{0, 11, {0, 10}};
  const auto raw = parabola_points(params);
  const auto placed = place_in_square(params, sq);
  ASSERT_EQ(raw.size(), placed.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    EXPECT_EQ(placed[i].x, raw[i].x);
    EXPECT_EQ(placed[i].y, 10 - raw[i].y);
  }
}

TEST(ModArithmetic, InverseAndFloor) {
  for (std::int64_t p : {5, 7, 101}) {
    for (std::int64_t v = 1; v < p; ++v) EXPECT_EQ(v * mod_inverse(v, p) % p, 1);
  }
  EXPECT_EQ(mod_floor(-3, 7), 4);
  EXPECT_EQ(mod_floor(10, 7), 3);
}

TEST(Property, ParabolasInGeneralPosition) {
  std::mt19937_64 rng(211);
  for (std::int64_t p = 2; p <= 211; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    std::uniform_int_distribution<std::int64_t> r(0, p - 1);
    for (int k = 0; k < 20; ++k) ASSERT_FALSE(verify_fast(parabola_points({p, r(rng), r(rng)}))) << p;
  }
}
