// ntil: generate, verify, measure and plot lattice point sets in general position.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ntil/extensible.hpp"
#include "ntil/gadgets.hpp"
#include "ntil/greedy.hpp"
#include "ntil/io.hpp"
#include "ntil/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string points_path = "-";
  std::string report_path;
  bool timings = false;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const Output& o, const std::vector<ntil::GridPoint>& points, const std::vector<std::string>& comments,
          nlohmann::json report, double seconds) {
  std::ostringstream tsv;
  ntil::write_points(tsv, points, comments);
  write_text(o.points_path, tsv.str());
  if (!o.report_path.empty()) {
    if (o.timings) report["seconds"] = seconds;
    write_text(o.report_path, report.dump(2) + "\n");
  }
}

std::vector<ntil::GridPoint> load(const std::string& path) {
  if (path == "-") return ntil::read_points(std::cin);
  return ntil::read_points_file(path);
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void print_witness(const ntil::CollinearWitness& w) {
  std::cout << "COLLINEAR " << w.a.x << ' ' << w.a.y << ' ' << w.b.x << ' ' << w.b.y << ' ' << w.c.x << ' '
            << w.c.y << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point sets in general position on the integer grid"};
  app.require_subcommand(1);

  Output out;
  auto add_output = [&out](CLI::App* cmd) {
    cmd->add_option("-o,--out", out.points_path, "TSV output path ('-' for stdout)");
    cmd->add_option("--report", out.report_path, "JSON run report path");
    cmd->add_flag("--timings", out.timings, "include wall-clock seconds in the report");
  };

  // gen
  CLI::App* gen = app.add_subcommand("gen", "generate a point set");
  gen->require_subcommand(1);

  ntil::ParabolaParams parabola;
  CLI::App* gen_parabola = gen->add_subcommand("parabola", "modular parabola y = (x-a)^2 + b mod p on [0,p-1]^2");
  gen_parabola->add_option("--p", parabola.p, "prime modulus")->required();
  gen_parabola->add_option("--a", parabola.a, "horizontal shift")->default_val(0);
  gen_parabola->add_option("--b", parabola.b, "vertical shift")->default_val(0);
  add_output(gen_parabola);

  std::string variant_name = "lexlt";
  ntil::Coord greedy_n = 0;
  std::string greedy_engine = "fast";
  CLI::App* gen_greedy = gen->add_subcommand("greedy", "lexicographic greedy construction on [1,n]^2");
  gen_greedy->add_option("--variant", variant_name,
                         "lexlt, mod2lex, lex, or an explicit lex|mod2 - strict|weak|none");
  gen_greedy->add_option("--n", greedy_n, "grid size")->required();
  gen_greedy->add_option("--engine", greedy_engine, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
  add_output(gen_greedy);

  ntil::ConstructionConfig cfg;
  CLI::App* gen_ext = gen->add_subcommand("extensible", "parabolas in squares along x / log^eps x");
  gen_ext->add_option("--eps", cfg.eps, "exponent eps in (0,1)")->default_val(0.5);
  gen_ext->add_option("--c", cfg.c, "square shrink factor, at least 12/eps")->default_val(24.0);
  gen_ext->add_option("--n-min", cfg.n_min, "first square index (0: smallest with side >= 7)")->default_val(0);
  gen_ext->add_option("--n-max", cfg.n_max, "last square index (<= 21)")->default_val(20);
  add_output(gen_ext);

  // verify
  std::string in_path;
  std::string verify_engine = "fast";
  CLI::App* verify = app.add_subcommand("verify", "check that a point set has no collinear triple");
  verify->add_option("file", in_path, "TSV point file ('-' for stdin)")->required();
  verify->add_option("--engine", verify_engine, "fast or brute")->check(CLI::IsMember({"fast", "brute"}));

  // density
  std::vector<ntil::Coord> grids;
  double density_eps = 0.5;
  bool density_json = false;
  CLI::App* density = app.add_subcommand("density", "count points in [1,N]^2 and normalize by N / ln^(1+eps) N");
  density->add_option("file", in_path, "TSV point file ('-' for stdin)")->required();
  density->add_option("--grids", grids, "comma-separated grid sizes")->delimiter(',')->required();
  density->add_option("--eps", density_eps, "normalization exponent")->default_val(0.5);
  density->add_flag("--json", density_json, "print JSON instead of a table");

  // plot
  std::string svg_path;
  std::string svg_title;
  CLI::App* plot = app.add_subcommand("plot", "SVG scatter plot of a point set");
  plot->add_option("file", in_path, "TSV point file ('-' for stdin)")->required();
  plot->add_option("-o,--out", svg_path, "SVG output path ('-' for stdout)")->required();
  plot->add_option("--title", svg_title, "plot title");

  // table1
  std::string table_engine = "fast";
  ntil::Coord table_n = 10000;
  std::string table_report;
  CLI::App* table1 = app.add_subcommand("table1", "reproduce the greedy density table");
  table1->add_option("--engine", table_engine, "fast or oracle")->check(CLI::IsMember({"fast", "oracle"}));
  table1->add_option("--n-max", table_n, "largest checkpoint to run")->default_val(10000);
  table1->add_option("--report", table_report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();

    if (*gen_parabola) {
      const std::vector<ntil::GridPoint> pts = ntil::parabola_points(parabola);
      const nlohmann::json report = {{"kind", "parabola"},
                                     {"p", parabola.p},
                                     {"a", parabola.a},
                                     {"b", parabola.b},
                                     {"count", pts.size()},
                                     {"unique_difference", ntil::unique_difference_property(parabola)}};
      if (auto w = ntil::verify_fast(pts)) {
        print_witness(*w);
        return kExitVerifyFailed;
      }
      emit(out, pts,
           {"parabola p=" + std::to_string(parabola.p) + " a=" + std::to_string(parabola.a) +
            " b=" + std::to_string(parabola.b)},
           report, elapsed(start));
      return kExitOk;
    }

    if (*gen_greedy) {
      const auto variant = ntil::GreedyVariant::parse(variant_name);
      if (!variant) throw UsageError("unknown greedy variant '" + variant_name + "'");
      const ntil::GreedyResult run =
          greedy_engine == "oracle" ? ntil::greedy_oracle(greedy_n, *variant) : ntil::greedy_fast(greedy_n, *variant);
      if (auto w = ntil::verify_fast(run.points)) {
        print_witness(*w);
        return kExitVerifyFailed;
      }
      // Unbounded variants may place points above row n; the TSV holds [1,n]^2 only.
      std::vector<ntil::GridPoint> inside;
      for (const ntil::GridPoint& p : run.points) {
        if (p.y <= greedy_n) inside.push_back(p);
      }
      emit(out, inside, {"greedy " + variant->name() + " n=" + std::to_string(greedy_n)},
           ntil::to_json(*variant, greedy_n, run), elapsed(start));
      return kExitOk;
    }

    if (*gen_ext) {
      const ntil::ConstructionState state = ntil::build(cfg);
      const auto grid = ntil::power_grid(cfg.effective_n_min(), std::max(cfg.n_max, cfg.effective_n_min()));
      std::ostringstream head;
      head << "extensible eps=" << cfg.eps << " c=" << cfg.c << " n_min=" << cfg.effective_n_min()
           << " n_max=" << cfg.n_max;
      emit(out, state.accepted, {head.str()}, ntil::to_json(state, grid), elapsed(start));
      return kExitOk;
    }

    if (*verify) {
      const std::vector<ntil::GridPoint> pts = load(in_path);
      const auto w = verify_engine == "brute" ? ntil::verify_brute(pts) : ntil::verify_fast(pts);
      if (w) {
        print_witness(*w);
        return kExitVerifyFailed;
      }
      std::cout << "OK " << pts.size() << " points\n";
      return kExitOk;
    }

    if (*density) {
      const std::vector<ntil::GridPoint> pts = load(in_path);
      const auto rows = ntil::density_report(pts, grids, density_eps);
      if (density_json) {
        std::cout << ntil::to_json(rows).dump(2) << '\n';
      } else {
        std::cout << "N\tcount\tratio\n";
        for (const ntil::DensityRow& r : rows) {
          char ratio[32];
          std::snprintf(ratio, sizeof ratio, "%.6g", r.ratio);
          std::cout << r.grid << '\t' << r.count << '\t' << ratio << '\n';
        }
      }
      return kExitOk;
    }

    if (*plot) {
      const std::vector<ntil::GridPoint> pts = load(in_path);
      write_text(svg_path, ntil::render_svg(pts, svg_title));
      return kExitOk;
    }

    if (*table1) {
      const ntil::Table1Report report =
          ntil::table1_check(table_engine == "oracle" ? ntil::GreedyEngine::kOracle : ntil::GreedyEngine::kFast, table_n);
      for (const ntil::Table1Row& r : report.rows) {
        std::cout << r.variant.name() << (r.matches() ? "  match " : "  MISMATCH") << "  observed:";
        for (std::size_t v : r.observed) std::cout << ' ' << v;
        std::cout << '\n';
      }
      if (!table_report.empty()) write_text(table_report, ntil::to_json(report).dump(2) + "\n");
      return report.lex_matches.empty() || report.mod2_matches.empty() ? kExitVerifyFailed : kExitOk;
    }
  } catch (const ntil::NotInGeneralPosition& e) {
    std::cerr << "error: " << e.what() << '\n';
    print_witness(e.witness());
    return kExitVerifyFailed;
  } catch (const ntil::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
