#include "ntil/extensible.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ntil/numtheory.hpp"
#include "ntil/verify.hpp"

namespace ntil {

namespace {

// Slack for c >= 12/eps, so that e.g. eps = 0.3, c = 40 is accepted although
// 12/0.3 rounds above 40 in binary floating point.
constexpr double kRelTolerance = 1e-12;

long double pow2(int n) { return std::ldexp(1.0L, n); }

std::array<GridPoint, 4> corners(const SquareSpec& q) {
  return {q.top_left, q.top_right(), q.bottom_left(), q.bottom_right()};
}

}  // namespace

void ConstructionConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  if (!(c >= 12.0 / eps * (1.0 - kRelTolerance))) throw std::invalid_argument("c must be at least 12/eps");
  if (n_min < 0) throw std::invalid_argument("n_min must be non-negative");
  if (n_max > kMaxIndex) throw std::invalid_argument("n_max exceeds the 2^21 coordinate cap");
  if (n_min != 0 && square_side(n_min, eps, c) < kMinParabolaSide) {
    throw std::invalid_argument("square at n_min is too small for a parabola with p >= 5");
  }
}

int ConstructionConfig::effective_n_min() const { return n_min != 0 ? n_min : first_viable_index(eps, c); }

Coord square_side(int n, double eps, double c) {
  if (n < 1) return 0;
  const long double v = pow2(n) / (static_cast<long double>(c) * std::pow(static_cast<long double>(n), 1.0L + eps));
  return static_cast<Coord>(std::floor(v));
}

Coord square_top(int n, double eps) {
  return static_cast<Coord>(std::floor(pow2(n) / std::pow(static_cast<long double>(n), static_cast<long double>(eps))));
}

SquareSpec square_geometry(int n, double eps, double c) {
  return {n, square_side(n, eps, c), {static_cast<Coord>(pow2(n)), square_top(n, eps)}};
}

int first_viable_index(double eps, double c) {
  for (int n = 2; n <= 62; ++n) {
    if (square_side(n, eps, c) >= kMinParabolaSide) return n;
  }
  throw std::invalid_argument("no viable square index below 2^62");
}

SquareSpec square_spec(int n, const ConstructionConfig& cfg) {
  if (n < cfg.effective_n_min()) throw std::invalid_argument("square index below n_min");
  SquareSpec q = square_geometry(n, cfg.eps, cfg.c);
  if (q.side < 1) throw std::invalid_argument("square empty at this n");
  return q;
}

Rational Rational::slope(GridPoint from, GridPoint to) {
  Wide num = static_cast<Wide>(to.y) - from.y;
  Wide den = static_cast<Wide>(to.x) - from.x;
  if (den == 0) throw std::invalid_argument("vertical slope");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

SeparationReport check_three_square_separation(const ConstructionConfig& cfg, int n_lo, int n_hi) {
  std::vector<SquareSpec> squares;
  for (int n = std::max(n_lo, 1); n <= n_hi; ++n) {
    SquareSpec q = square_geometry(n, cfg.eps, cfg.c);
    if (q.side >= 1) squares.push_back(q);
  }
  SeparationReport report;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t j = i + 1; j < squares.size(); ++j) {
      for (std::size_t k = j + 1; k < squares.size(); ++k) {
        ++report.triples_checked;
        bool ok = true;
        for (const GridPoint& a : corners(squares[i])) {
          for (const GridPoint& b : corners(squares[k])) {
            for (const GridPoint& probe : {squares[j].bottom_left(), squares[j].bottom_right()}) {
              // a is left of b, so a positive cross product puts probe above line ab.
              if (cross(a, b, probe) <= 0) ok = false;
            }
          }
        }
        if (!ok) {
          report.holds = false;
          report.violations.push_back({squares[i].n, squares[j].n, squares[k].n});
        }
      }
    }
  }
  return report;
}

Rational SlopeInterval::width() const { return {hi.num * lo.den - lo.num * hi.den, hi.den * lo.den}; }

SlopeInterval slope_interval(int m, int n, const ConstructionConfig& cfg) {
  if (m >= n) throw std::invalid_argument("slope_interval requires m < n");
  const SquareSpec qm = square_geometry(m, cfg.eps, cfg.c);
  const SquareSpec qn = square_geometry(n, cfg.eps, cfg.c);
  if (qm.side < 1 || qn.side < 1) throw std::invalid_argument("square empty at this n");
  // Slope is monotone in each endpoint coordinate, so the extremes over two
  // boxes are attained at corners.
  std::optional<SlopeInterval> out;
  for (const GridPoint& a : corners(qm)) {
    for (const GridPoint& b : corners(qn)) {
      const Rational s = Rational::slope(a, b);
      if (!out) {
        out = SlopeInterval{s, s};
      } else {
        out->lo = std::min(out->lo, s);
        out->hi = std::max(out->hi, s);
      }
    }
  }
  return *out;
}

WidthCheck slope_interval_width_check(int m, int n, const ConstructionConfig& cfg) {
  const Rational w = slope_interval(m, n, cfg).width();
  WidthCheck out;
  out.width = w.to_long_double();
  out.bound = 11.0L / (static_cast<long double>(cfg.c) * std::pow(static_cast<long double>(n), 1.0L + cfg.eps));
  out.ok = static_cast<long double>(w.num) < out.bound * static_cast<long double>(w.den);
  return out;
}

bool slope_interval_width_ok(int m, int n, const ConstructionConfig& cfg) {
  return slope_interval_width_check(m, n, cfg).ok;
}

std::vector<GridPoint> red_points(std::span<const std::vector<GridPoint>> groups, const SquareSpec& target) {
  std::vector<GridPoint> red;
  const Box box = target.box();
  for (const std::vector<GridPoint>& pts : groups) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        const ReducedDirection d = direction(pts[i], pts[j]);
        const auto [t_lo, t_hi] = steps_inside(pts[i], d, box);
        for (Wide t = t_lo; t <= t_hi; ++t) {
          red.push_back({static_cast<Coord>(pts[i].x + t * d.dx), static_cast<Coord>(pts[i].y + t * d.dy)});
        }
      }
    }
  }
  std::sort(red.begin(), red.end());
  red.erase(std::unique(red.begin(), red.end()), red.end());
  return red;
}

std::vector<PointPair> blue_pairs(std::span<const GridPoint> sources, const SquareSpec& target,
                                  std::span<const GridPoint> red) {
  std::vector<PointPair> blue;
  const Box box = target.box();
  const std::unordered_set<GridPoint> red_set(red.begin(), red.end());
  std::vector<GridPoint> on_line;

  for (const GridPoint& s : sources) {
    if (s.x >= target.left()) throw std::invalid_argument("blue source must lie left of the target square");
    // The slopes from s into the box form the interval spanned by its corners.
    Rational lo = Rational::slope(s, target.top_left), hi = lo;
    for (const GridPoint& corner : corners(target)) {
      const Rational r = Rational::slope(s, corner);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    // Two lattice points of the target on a line with primitive direction
    // (dx, dy) differ by a multiple of dx, hence dx < side.
    for (Coord dx = 1; dx < target.side; ++dx) {
      const Wide dy_lo = ceil_div(lo.num * dx, lo.den);
      const Wide dy_hi = floor_div(hi.num * dx, hi.den);
      for (Wide dyw = dy_lo; dyw <= dy_hi; ++dyw) {
        const Coord dy = static_cast<Coord>(dyw);
        if (gcd(dx, dy) != 1) continue;
        const auto [t_lo, t_hi] = steps_inside(s, {dx, dy}, box);
        if (t_hi - t_lo < 1) continue;
        on_line.clear();
        for (Wide t = t_lo; t <= t_hi; ++t) {
          on_line.push_back({static_cast<Coord>(s.x + t * dx), static_cast<Coord>(s.y + t * dy)});
        }
        for (std::size_t a = 0; a < on_line.size(); ++a) {
          const bool a_red = red_set.contains(on_line[a]);
          for (std::size_t b = a + 1; b < on_line.size(); ++b) {
            if (a_red && red_set.contains(on_line[b])) continue;
            blue.emplace_back(on_line[a], on_line[b]);
          }
        }
      }
    }
  }
  std::sort(blue.begin(), blue.end());
  blue.erase(std::unique(blue.begin(), blue.end()), blue.end());
  return blue;
}

std::vector<GridPoint> enumerate_red(const ConstructionState& state, int n) {
  const SquareSpec q = square_spec(n, state.config);
  std::vector<std::vector<GridPoint>> groups;
  for (const SquareRecord& rec : state.per_square) {
    if (rec.n < n) groups.push_back(rec.points);
  }
  return red_points(groups, q);
}

std::vector<PointPair> enumerate_blue(const ConstructionState& state, int n, std::span<const GridPoint> red) {
  const SquareSpec q = square_spec(n, state.config);
  std::vector<GridPoint> sources;
  for (const SquareRecord& rec : state.per_square) {
    if (rec.n < n) sources.insert(sources.end(), rec.points.begin(), rec.points.end());
  }
  return blue_pairs(sources, q, red);
}

std::int64_t IncidenceTally::sum() const {
  std::int64_t total = 0;
  for (std::int64_t v : counts) total += v;
  return total;
}

IncidenceTally tally_incidences(std::span<const GridPoint> red, std::span<const PointPair> blue, std::int64_t p,
                                const SquareSpec& square) {
  if (p > square.side) throw std::invalid_argument("parabola does not fit in square");
  IncidenceTally tally;
  tally.p = p;
  tally.counts.assign(static_cast<std::size_t>(p * p), 0);
  // Raw parabola frame: x' = x - left, y' = top - y, both in [0, p-1].
  auto to_raw = [&](GridPoint g) -> std::optional<GridPoint> {
    const GridPoint r{g.x - square.left(), square.top() - g.y};
    if (r.x < 0 || r.x >= p || r.y < 0 || r.y >= p) return std::nullopt;
    return r;
  };
  for (const GridPoint& g : red) {
    const auto r = to_raw(g);
    if (!r) continue;
    ++tally.red_total;
    for (std::int64_t a = 0; a < p; ++a) {
      const std::int64_t d = r->x - a;
      const std::int64_t b = mod_floor(r->y - (d * d) % p, p);
      ++tally.counts[static_cast<std::size_t>(a * p + b)];
    }
  }
  for (const auto& [u, v] : blue) {
    const auto ru = to_raw(u);
    const auto rv = to_raw(v);
    if (!ru || !rv || ru->x == rv->x) continue;
    ++tally.blue_total;
    const ParabolaParams fit = fit_parabola(p, *ru, *rv);
    ++tally.counts[static_cast<std::size_t>(fit.a * p + fit.b)];
  }
  return tally;
}

ParabolaParams select_params(const IncidenceTally& tally) {
  const auto it = std::min_element(tally.counts.begin(), tally.counts.end());
  const auto idx = static_cast<std::int64_t>(it - tally.counts.begin());
  return {tally.p, idx / tally.p, idx % tally.p};
}

SquareRecord& prune_and_commit(ConstructionState& state, int n, const ParabolaParams& params,
                               std::span<const GridPoint> red, std::span<const PointPair> blue) {
  const SquareSpec square = square_spec(n, state.config);
  const std::vector<GridPoint> placed = place_in_square(params, square);
  const auto p = static_cast<std::size_t>(params.p);
  // placed[k] sits in column left + k.
  auto slot = [&](GridPoint g) -> std::optional<std::size_t> {
    const Coord k = g.x - square.left();
    if (k < 0 || k >= params.p || placed[static_cast<std::size_t>(k)] != g) return std::nullopt;
    return static_cast<std::size_t>(k);
  };

  SquareRecord rec;
  rec.n = n;
  rec.square = square;
  rec.params = params;

  std::vector<bool> alive(p, true);
  for (const GridPoint& g : red) {
    if (auto k = slot(g)) {
      alive[*k] = false;
      ++rec.red_deleted;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : blue) {
    const auto ku = slot(u);
    const auto kv = slot(v);
    if (ku && kv && alive[*ku] && alive[*kv]) edges.emplace_back(*ku, *kv);
  }
  std::vector<std::int64_t> degree(p, 0);
  for (;;) {
    std::fill(degree.begin(), degree.end(), 0);
    for (const auto& [a, b] : edges) {
      if (alive[a] && alive[b]) {
        ++degree[a];
        ++degree[b];
      }
    }
    // max_element returns the first maximum, i.e. the smallest column.
    const auto it = std::max_element(degree.begin(), degree.end());
    if (*it == 0) break;
    alive[static_cast<std::size_t>(it - degree.begin())] = false;
    ++rec.blue_deleted;
  }

  for (std::size_t k = 0; k < p; ++k) {
    if (alive[k]) rec.points.push_back(placed[k]);
  }
  rec.kept = static_cast<std::int64_t>(rec.points.size());
  rec.red_bound = red_point_bound(n, state.config);
  rec.blue_bound = blue_pair_bound(n, state.config);

  state.accepted.insert(state.accepted.end(), rec.points.begin(), rec.points.end());
  state.per_square.push_back(std::move(rec));
  if (auto w = verify_fast(state.accepted)) throw NotInGeneralPosition(*w);
  return state.per_square.back();
}

ConstructionState build(const ConstructionConfig& cfg) {
  cfg.validate();
  ConstructionState state;
  state.config = cfg;
  for (int n = cfg.effective_n_min(); n <= cfg.n_max; ++n) {
    const SquareSpec square = square_spec(n, cfg);
    const std::optional<std::int64_t> p = prev_prime(square.side);
    if (!p || *p < 5) throw std::invalid_argument("square too small for a parabola with p >= 5");
    const std::vector<GridPoint> red = enumerate_red(state, n);
    const std::vector<PointPair> blue = enumerate_blue(state, n, red);
    const IncidenceTally tally = tally_incidences(red, blue, *p, square);
    const ParabolaParams params = select_params(tally);
    SquareRecord& rec = prune_and_commit(state, n, params, red, blue);
    rec.red_raw = static_cast<std::int64_t>(red.size());
    rec.blue_raw = static_cast<std::int64_t>(blue.size());
    rec.red_total = tally.red_total;
    rec.blue_total = tally.blue_total;
    rec.tally_sum = tally.sum();
    rec.selected_count = tally.at(params.a, params.b);
  }
  return state;
}

long double red_point_bound(int n, const ConstructionConfig& cfg) {
  const long double c = cfg.c;
  const long double nn = n;
  return 16.0L * pow2(2 * n) / (c * c * c * std::pow(nn, 3.0L + 3.0L * cfg.eps)) * nn;
}

long double blue_pair_bound(int n, const ConstructionConfig& cfg) {
  const long double c = cfg.c;
  return 8.0L * pow2(3 * n) / (c * c * c * c * std::pow(static_cast<long double>(n), 3.0L + 4.0L * cfg.eps));
}

std::vector<DensityRow> density_report(std::span<const GridPoint> points, std::span<const Coord> grid_sizes,
                                       double eps) {
  std::vector<DensityRow> rows;
  for (Coord N : grid_sizes) {
    DensityRow row;
    row.grid = N;
    row.count = static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [N](const GridPoint& g) {
      return g.x >= 1 && g.x <= N && g.y >= 1 && g.y <= N;
    }));
    const double ln = std::log(static_cast<double>(N));
    const double scale = N >= 2 ? static_cast<double>(N) / std::pow(ln, 1.0 + eps) : 0.0;
    row.ratio = scale > 0.0 ? static_cast<double>(row.count) / scale : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ntil
