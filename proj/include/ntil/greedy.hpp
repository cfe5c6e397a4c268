#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ntil/geometry.hpp"

namespace ntil {

// Which rows column i may use: j < i, j <= i, or any positive j.
enum class RowBound { kStrict, kWeak, kNone };

struct GreedyVariant {
  int column_step = 1;  // 1: every column, 2: even columns only
  RowBound row_bound = RowBound::kStrict;

  // Explicit names: lex-strict, lex-weak, lex-none, mod2-strict, mod2-weak, mod2-none.
  std::string name() const;
  // Also accepts the construction aliases lexlt (S_lex<), mod2lex (S_mod2lex)
  // and lex (unbounded S_lex).
  static std::optional<GreedyVariant> parse(std::string_view name);

  friend constexpr bool operator==(const GreedyVariant&, const GreedyVariant&) = default;
};

inline constexpr GreedyVariant kLexStrict{1, RowBound::kStrict};
inline constexpr GreedyVariant kLexWeak{1, RowBound::kWeak};
inline constexpr GreedyVariant kMod2Strict{2, RowBound::kStrict};
inline constexpr GreedyVariant kMod2Weak{2, RowBound::kWeak};
inline constexpr GreedyVariant kLexUnbounded{1, RowBound::kNone};

// j <= i reproduces the published S_lex< counts; j < i undercounts by one
// because column 1 then has no admissible row. Both bounds reproduce the
// S_mod2lex counts, so the same convention is used for both families.
inline constexpr RowBound kDefaultRowBound = RowBound::kWeak;
inline constexpr GreedyVariant kSLexLt{1, kDefaultRowBound};
inline constexpr GreedyVariant kSMod2Lex{2, kDefaultRowBound};

struct GreedyResult {
  std::vector<GridPoint> points;       // placement order
  std::vector<Coord> skipped_columns;  // columns with no admissible row
};

// Direct engine: every candidate cell is tested against all placed points.
GreedyResult greedy_oracle(Coord n, GreedyVariant variant);

// Bitmap engine: placing a point marks every cell to its right on each line
// through it and an earlier point. Output is identical to greedy_oracle.
GreedyResult greedy_fast(Coord n, GreedyVariant variant);

// One bit per cell of [1, columns] x [1, rows], column-major.
class BlockedGrid {
 public:
  BlockedGrid(Coord columns, Coord rows);

  Coord columns() const { return columns_; }
  Coord rows() const { return rows_; }
  bool blocked(GridPoint cell) const;
  void block(GridPoint cell);
  // Marks the cells of line(p, q) with x > q.x that lie inside the grid.
  // Requires p.x < q.x.
  void mark_beyond(GridPoint p, GridPoint q);
  // First unblocked row in [1, max_row] of column x, if any.
  std::optional<Coord> first_free(Coord x, Coord max_row) const;
  std::size_t blocked_count() const;

 private:
  std::size_t index(Coord x, Coord y) const {
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(rows_) + static_cast<std::size_t>(y - 1);
  }

  Coord columns_;
  Coord rows_;
  std::vector<std::uint64_t> bits_;
};

// |points inside [1, n]^2|
std::size_t count_in_square(std::span<const GridPoint> points, Coord n);

enum class GreedyEngine { kFast, kOracle };

inline const std::vector<Coord> kTable1Checkpoints = {100, 200, 300, 400, 500, 1000, 2000, 3000, 4000, 5000, 10000};
inline const std::vector<std::size_t> kTable1SLexLt = {81, 166, 254, 340, 424, 830, 1678, 2515, 3353, 4197, 8385};
inline const std::vector<std::size_t> kTable1Mod2 = {50, 100, 150, 200, 250, 500, 1000, 1500, 2000, 2500, 5000};

struct Table1Row {
  GreedyVariant variant;
  std::vector<Coord> checkpoints;
  std::vector<std::size_t> expected;
  std::vector<std::size_t> observed;
  std::vector<Coord> skipped_columns;
  double seconds = 0.0;

  bool matches() const { return expected == observed; }
};

struct Table1Report {
  std::vector<Table1Row> rows;  // lex-strict, lex-weak, mod2-strict, mod2-weak
  std::vector<RowBound> lex_matches;   // row bounds reproducing the S_lex< row
  std::vector<RowBound> mod2_matches;  // row bounds reproducing the S_mod2lex row
};

// Runs all four bounded variants up to max(checkpoints <= n_max) and compares
// against the published counts. Checkpoints above n_max are dropped.
Table1Report table1_check(GreedyEngine engine, Coord n_max = 10000);

struct SlopePropertyResult {
  bool holds = true;       // 3j < 2i for every point
  double max_ratio = 0.0;  // max j/i
};

SlopePropertyResult mod2lex_slope_property(std::span<const GridPoint> points);

}  // namespace ntil
