#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ntil/gadgets.hpp"
#include "ntil/geometry.hpp"
#include "ntil/square.hpp"

namespace ntil {

// Squares Q_n of side floor(2^n / (c n^(1+eps))) with top-left corner
// (2^n, floor(2^n / n^eps)), for n_min <= n <= n_max.
struct ConstructionConfig {
  double eps = 0.5;
  double c = 24.0;
  int n_min = 0;  // 0 selects first_viable_index(eps, c)
  int n_max = 20;

  // Throws std::invalid_argument unless 0 < eps < 1, c >= 12/eps and the
  // squares stay inside the 2^21 coordinate cap.
  void validate() const;
  int effective_n_min() const;
};

inline constexpr int kMaxIndex = 21;
inline constexpr Coord kMinParabolaSide = 7;

Coord square_side(int n, double eps, double c);
Coord square_top(int n, double eps);

// Square geometry without any admissibility checks; side may be < 1.
SquareSpec square_geometry(int n, double eps, double c);

// Smallest n >= 2 whose square side is at least 7, so that the largest
// prime below the side is at least 5.
int first_viable_index(double eps, double c);

// Throws std::invalid_argument("square empty at this n") when side < 1 and
// when n is below the configured starting index.
SquareSpec square_spec(int n, const ConstructionConfig& cfg);

// Exact rational with positive denominator.
struct Rational {
  Wide num = 0;
  Wide den = 1;

  static Rational slope(GridPoint from, GridPoint to);
  long double to_long_double() const { return static_cast<long double>(num) / static_cast<long double>(den); }

  friend bool operator==(const Rational& l, const Rational& r) { return l.num * r.den == r.num * l.den; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    return l.num * r.den <=> r.num * l.den;
  }
};

struct SeparationReport {
  bool holds = true;
  int triples_checked = 0;
  std::vector<std::array<int, 3>> violations;  // (m, n, k)
};

// For every nonempty m < n < k in [n_lo, n_hi], checks that both bottom
// corners of Q_n lie strictly above each of the 16 lines joining a corner of
// Q_m to a corner of Q_k. That suffices for no line to meet Q_m, Q_n and Q_k.
SeparationReport check_three_square_separation(const ConstructionConfig& cfg, int n_lo, int n_hi);

struct SlopeInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& s) const { return lo <= s && s <= hi; }
  Rational width() const;
};

// Range of slopes of lines meeting both Q_m and Q_n (m < n). In the regime
// of the construction lo is the slope of A_m D_n and hi the slope of D_m A_n,
// with A the top-left and D the bottom-right lattice corner.
SlopeInterval slope_interval(int m, int n, const ConstructionConfig& cfg);

struct WidthCheck {
  bool ok = false;
  long double width = 0.0L;
  long double bound = 0.0L;  // 11 / (c n^(1+eps))
};

WidthCheck slope_interval_width_check(int m, int n, const ConstructionConfig& cfg);
bool slope_interval_width_ok(int m, int n, const ConstructionConfig& cfg);

using PointPair = std::pair<GridPoint, GridPoint>;  // first < second

struct SquareRecord {
  int n = 0;
  SquareSpec square;
  ParabolaParams params;
  std::int64_t red_raw = 0;          // red lattice points anywhere in Q_n
  std::int64_t blue_raw = 0;         // blue pairs anywhere in Q_n
  std::int64_t red_total = 0;        // red points a placed parabola can reach
  std::int64_t blue_total = 0;       // blue pairs a placed parabola can reach
  std::int64_t tally_sum = 0;        // sum of all incidence counts
  std::int64_t selected_count = 0;   // incidence count of the chosen (a, b)
  std::int64_t red_deleted = 0;
  std::int64_t blue_deleted = 0;
  std::int64_t kept = 0;
  long double red_bound = 0.0L;      // report-only asymptotic bound on |red|
  long double blue_bound = 0.0L;     // report-only asymptotic bound on |blue|
  std::vector<GridPoint> points;     // accepted points of this square
};

struct ConstructionState {
  ConstructionConfig config;
  std::vector<GridPoint> accepted;
  std::vector<SquareRecord> per_square;
};

// Lattice points of `target` on a line through two points of one group.
// Sorted, unique.
std::vector<GridPoint> red_points(std::span<const std::vector<GridPoint>> groups, const SquareSpec& target);

// Pairs {u, v} of lattice points of `target`, not both in `red`, collinear
// with one of `sources`. Every source must lie strictly left of the target.
// Sorted, unique.
std::vector<PointPair> blue_pairs(std::span<const GridPoint> sources, const SquareSpec& target,
                                  std::span<const GridPoint> red);

// Lattice points of Q_n on a line through two accepted points of one earlier
// square. Sorted.
std::vector<GridPoint> enumerate_red(const ConstructionState& state, int n);

// Pairs {u, v} of lattice points of Q_n, not both red, collinear with some
// accepted point of an earlier square. Sorted, unique.
std::vector<PointPair> enumerate_blue(const ConstructionState& state, int n, std::span<const GridPoint> red);

struct IncidenceTally {
  std::int64_t p = 0;
  std::vector<std::int64_t> counts;  // index a * p + b
  std::int64_t red_total = 0;
  std::int64_t blue_total = 0;

  std::int64_t at(std::int64_t a, std::int64_t b) const { return counts[static_cast<std::size_t>(a * p + b)]; }
  std::int64_t sum() const;
};

// counts[(a, b)] = red points on parabola (a, b) placed in `square` plus blue
// pairs with both points on it. Red points and pairs outside the p x p
// placement box are not counted.
IncidenceTally tally_incidences(std::span<const GridPoint> red, std::span<const PointPair> blue, std::int64_t p,
                                const SquareSpec& square);

// argmin of counts, lexicographically smallest (a, b) on ties.
ParabolaParams select_params(const IncidenceTally& tally);

// Places the parabola, deletes red points on it, then repeatedly deletes the
// surviving point covering the most surviving blue pairs (ties: smallest
// point) until no blue pair survives. Appends the survivors to the state and
// re-verifies general position; a failure there throws NotInGeneralPosition.
SquareRecord& prune_and_commit(ConstructionState& state, int n, const ParabolaParams& params,
                               std::span<const GridPoint> red, std::span<const PointPair> blue);

ConstructionState build(const ConstructionConfig& cfg);

// 16 * 2^(2n) / (c^3 n^(3+3 eps)) * n
long double red_point_bound(int n, const ConstructionConfig& cfg);
// 8 * 2^(3n) / (c^4 n^(3+4 eps))
long double blue_pair_bound(int n, const ConstructionConfig& cfg);

struct DensityRow {
  Coord grid = 0;
  std::size_t count = 0;
  double ratio = 0.0;  // count / (N / ln^(1+eps) N)
};

std::vector<DensityRow> density_report(std::span<const GridPoint> points, std::span<const Coord> grid_sizes,
                                       double eps);

}  // namespace ntil
