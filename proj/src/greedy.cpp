#include "ntil/greedy.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace ntil {

std::string GreedyVariant::name() const {
  const std::string base = column_step == 2 ? "mod2" : "lex";
  switch (row_bound) {
    case RowBound::kStrict:
      return base + "-strict";
    case RowBound::kWeak:
      return base + "-weak";
    case RowBound::kNone:
      return base + "-none";
  }
  return base;
}

std::optional<GreedyVariant> GreedyVariant::parse(std::string_view name) {
  if (name == "lexlt") return kSLexLt;
  if (name == "mod2lex") return kSMod2Lex;
  if (name == "lex") return kLexUnbounded;
  for (int step : {1, 2}) {
    for (RowBound rb : {RowBound::kStrict, RowBound::kWeak, RowBound::kNone}) {
      const GreedyVariant v{step, rb};
      if (v.name() == name) return v;
    }
  }
  return std::nullopt;
}

namespace {

// Highest admissible row for column i, or 0 when unbounded.
Coord row_limit(RowBound rb, Coord i) {
  switch (rb) {
    case RowBound::kStrict:
      return i - 1;
    case RowBound::kWeak:
      return i;
    case RowBound::kNone:
      return 0;
  }
  return 0;
}

void check_args(Coord n, GreedyVariant v) {
  if (n < 1) throw std::invalid_argument("greedy grid size must be positive");
  if (v.column_step != 1 && v.column_step != 2) throw std::invalid_argument("column step must be 1 or 2");
}

// True iff c is collinear with no two placed points. All placed points lie in
// columns left of c, so two of them are collinear with c exactly when they
// share a reduced direction from c.
bool admissible(GridPoint c, std::span<const GridPoint> placed, std::unordered_set<ReducedDirection>& seen) {
  seen.clear();
  for (const GridPoint& p : placed) {
    if (!seen.insert(direction(p, c)).second) return false;
  }
  return true;
}

}  // namespace

GreedyResult greedy_oracle(Coord n, GreedyVariant variant) {
  check_args(n, variant);
  GreedyResult out;
  std::unordered_set<ReducedDirection> seen;
  for (Coord i = variant.column_step; i <= n; i += variant.column_step) {
    const Coord limit = row_limit(variant.row_bound, i);
    bool placed = false;
    for (Coord j = 1; variant.row_bound == RowBound::kNone || j <= limit; ++j) {
      seen.reserve(out.points.size());
      if (admissible({i, j}, out.points, seen)) {
        out.points.push_back({i, j});
        placed = true;
        break;
      }
    }
    if (!placed) out.skipped_columns.push_back(i);
  }
  return out;
}

BlockedGrid::BlockedGrid(Coord columns, Coord rows)
    : columns_(columns), rows_(rows), bits_((static_cast<std::size_t>(columns) * static_cast<std::size_t>(rows) + 63) / 64, 0) {
  if (columns < 1 || rows < 1) throw std::invalid_argument("blocked grid must be nonempty");
}

bool BlockedGrid::blocked(GridPoint cell) const {
  const std::size_t k = index(cell.x, cell.y);
  return (bits_[k >> 6] >> (k & 63)) & 1U;
}

void BlockedGrid::block(GridPoint cell) {
  const std::size_t k = index(cell.x, cell.y);
  bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
}

void BlockedGrid::mark_beyond(GridPoint p, GridPoint q) {
  if (p.x >= q.x) throw std::invalid_argument("mark_beyond expects p left of q");
  const ReducedDirection d = direction(p, q);
  Coord t_hi = (columns_ - q.x) / d.dx;
  Coord t_lo = 1;
  if (d.dy > 0) {
    if (q.y > rows_) return;
    t_hi = std::min(t_hi, (rows_ - q.y) / d.dy);
    if (q.y < 1) t_lo = std::max(t_lo, static_cast<Coord>(ceil_div(1 - q.y, d.dy)));
  } else if (d.dy < 0) {
    if (q.y < 1) return;
    t_hi = std::min(t_hi, (q.y - 1) / -d.dy);
    if (q.y > rows_) t_lo = std::max(t_lo, static_cast<Coord>(ceil_div(q.y - rows_, -d.dy)));
  } else if (q.y < 1 || q.y > rows_) {
    return;
  }
  const std::ptrdiff_t stride = static_cast<std::ptrdiff_t>(d.dx) * rows_ + d.dy;
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(index(q.x + t_lo * d.dx, q.y + t_lo * d.dy));
  for (Coord t = t_lo; t <= t_hi; ++t, k += stride) {
    bits_[static_cast<std::size_t>(k) >> 6] |= std::uint64_t{1} << (k & 63);
  }
}

std::optional<Coord> BlockedGrid::first_free(Coord x, Coord max_row) const {
  max_row = std::min(max_row, rows_);
  if (max_row < 1) return std::nullopt;
  std::size_t k = index(x, 1);
  const std::size_t end = k + static_cast<std::size_t>(max_row);
  while (k < end) {
    const std::size_t word = k >> 6;
    const unsigned offset = k & 63;
    std::uint64_t free_bits = ~bits_[word] >> offset;
    const std::size_t span = std::min<std::size_t>(64 - offset, end - k);
    if (span < 64) free_bits &= (std::uint64_t{1} << span) - 1;
    if (free_bits != 0) return static_cast<Coord>(k + std::countr_zero(free_bits) - index(x, 1)) + 1;
    k += span;
  }
  return std::nullopt;
}

std::size_t BlockedGrid::blocked_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

GreedyResult greedy_fast(Coord n, GreedyVariant variant) {
  check_args(n, variant);
  BlockedGrid grid(n, n);
  GreedyResult out;
  std::unordered_set<ReducedDirection> seen;
  for (Coord i = variant.column_step; i <= n; i += variant.column_step) {
    const Coord limit = row_limit(variant.row_bound, i);
    std::optional<Coord> j = grid.first_free(i, variant.row_bound == RowBound::kNone ? n : limit);
    if (!j && variant.row_bound == RowBound::kNone) {
      // Every cell of the bitmap column is blocked; continue above it directly.
      for (Coord r = n + 1;; ++r) {
        if (admissible({i, r}, out.points, seen)) {
          j = r;
          break;
        }
      }
    }
    if (!j) {
      out.skipped_columns.push_back(i);
      continue;
    }
    const GridPoint q{i, *j};
    for (const GridPoint& p : out.points) grid.mark_beyond(p, q);
    out.points.push_back(q);
  }
  return out;
}

std::size_t count_in_square(std::span<const GridPoint> points, Coord n) {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [n](const GridPoint& p) {
    return p.x >= 1 && p.x <= n && p.y >= 1 && p.y <= n;
  }));
}

Table1Report table1_check(GreedyEngine engine, Coord n_max) {
  std::vector<Coord> checkpoints;
  std::vector<std::size_t> lex_expected, mod2_expected;
  for (std::size_t k = 0; k < kTable1Checkpoints.size(); ++k) {
    if (kTable1Checkpoints[k] > n_max) continue;
    checkpoints.push_back(kTable1Checkpoints[k]);
    lex_expected.push_back(kTable1SLexLt[k]);
    mod2_expected.push_back(kTable1Mod2[k]);
  }
  if (checkpoints.empty()) throw std::invalid_argument("table1_check needs n_max >= 100");
  const Coord n = checkpoints.back();

  Table1Report report;
  for (const GreedyVariant& v : {kLexStrict, kLexWeak, kMod2Strict, kMod2Weak}) {
    const auto start = std::chrono::steady_clock::now();
    GreedyResult run = engine == GreedyEngine::kFast ? greedy_fast(n, v) : greedy_oracle(n, v);
    Table1Row row;
    row.variant = v;
    row.checkpoints = checkpoints;
    row.expected = v.column_step == 1 ? lex_expected : mod2_expected;
    for (Coord c : checkpoints) row.observed.push_back(count_in_square(run.points, c));
    row.skipped_columns = std::move(run.skipped_columns);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (row.matches()) (v.column_step == 1 ? report.lex_matches : report.mod2_matches).push_back(v.row_bound);
    report.rows.push_back(std::move(row));
  }
  return report;
}

SlopePropertyResult mod2lex_slope_property(std::span<const GridPoint> points) {
  SlopePropertyResult out;
  for (const GridPoint& p : points) {
    if (3 * static_cast<Wide>(p.y) >= 2 * static_cast<Wide>(p.x)) out.holds = false;
    if (p.x != 0) out.max_ratio = std::max(out.max_ratio, static_cast<double>(p.y) / static_cast<double>(p.x));
  }
  return out;
}

}  // namespace ntil
