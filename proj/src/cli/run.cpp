#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hyperplate/cli.hpp"
#include "hyperplate/errors.hpp"
#include "hyperplate/geometry.hpp"
#include "hyperplate/oracle.hpp"
#include "hyperplate/tones.hpp"

namespace hyperplate::cli {

namespace {

using geometry::SpaceForm;

struct Options {
  int dim = 2;
  double kappa = 1.0;
  std::optional<double> radius;
  std::optional<double> alpha;
  std::optional<double> total;
  double from = 0.1;
  double to = 2.0;
  int steps = 10;
  int grid = 512;
  Format format = Format::Text;
  std::string out_path;
};

std::string num(double x) { return format_number(x); }

SpaceForm space_form(const Options& o) {
  if (o.dim < 2) throw DomainError("--dim must be at least 2");
  if (!(o.kappa >= 0.0) || !std::isfinite(o.kappa)) throw DomainError("--kappa must be >= 0");
  return SpaceForm(o.dim, o.kappa);
}

double need_radius(const Options& o) {
  if (!o.radius) throw DomainError("--radius is required");
  if (!(*o.radius > 0.0) || !std::isfinite(*o.radius)) throw DomainError("--radius must be > 0");
  return *o.radius;
}

Table tone_cmd(const Options& o) {
  const auto sf = space_form(o);
  const double L = need_radius(o);
  if (sf.kappa > 0.0 && sf.n != 2 && sf.n != 3)
    throw DomainError("curved tones need --dim 2 or 3");
  const auto r = tones::fundamental_tone(sf, L);
  Table t{{"n", "kappa", "radius", "lambda", "gamma", "gamma_fourth_root", "excess", "bracket_lo",
           "bracket_hi", "residual", "iterations", "method"},
          {},
          true};
  t.rows.push_back({std::to_string(sf.n), num(sf.kappa), num(L), num(r.lambda), num(r.gamma),
                    num(r.lambda), num(r.excess), num(r.bracket_lo), num(r.bracket_hi),
                    num(r.residual), std::to_string(r.iterations), tones::to_string(r.method)});
  return t;
}

Table twoball_cmd(const Options& o) {
  const auto sf = space_form(o);
  if (!(sf.kappa > 0.0)) throw DomainError("twoball needs --kappa > 0");
  if (sf.n != 2 && sf.n != 3) throw DomainError("twoball needs --dim 2 or 3");
  if (!o.alpha) throw DomainError("--alpha is required");
  double total;
  if (o.total) {
    total = *o.total;
  } else if (o.radius) {
    total = geometry::tilde_of_radius(sf.kappa, need_radius(o));
  } else {
    throw DomainError("one of --total or --radius is required");
  }
  if (!(total > 0.0)) throw DomainError("total tilde radius must be > 0");
  if (!(*o.alpha >= 0.0) || *o.alpha > total) throw DomainError("--alpha must lie in [0, total]");
  const auto cfg = geometry::TwoBallConfig::from_alpha(sf, *o.alpha, total);
  const auto r = tones::two_ball_tone(sf, cfg);
  Table t{{"n", "kappa", "alpha", "beta", "total_tilde", "lambda", "gamma", "gamma_fourth_root",
           "excess", "bracket_lo", "bracket_hi", "residual", "iterations", "method"},
          {},
          true};
  t.rows.push_back({std::to_string(sf.n), num(sf.kappa), num(cfg.alpha), num(cfg.beta),
                    num(cfg.total_tilde), num(r.lambda), num(r.gamma), num(r.lambda),
                    num(r.excess), num(r.bracket_lo), num(r.bracket_hi), num(r.residual),
                    std::to_string(r.iterations), tones::to_string(r.method)});
  return t;
}

Table threshold_cmd(const Options& o) {
  const auto sf = space_form(o);
  if (!(sf.kappa > 0.0)) throw DomainError("threshold needs --kappa > 0");
  if (sf.n != 2 && sf.n != 3) throw DomainError("threshold needs --dim 2 or 3");
  const auto th = tones::threshold_radius(sf);
  Table t{{"n", "kappa", "radius", "volume_cap"}, {}, true};
  t.rows.push_back({std::to_string(sf.n), num(sf.kappa), num(th.radius), num(th.volume_cap)});
  return t;
}

Table table1_cmd() {
  Table t{{"n", "L", "algebraic", "asymptotic", "abs_diff"}, {}, false};
  for (int n : {2, 3}) {
    const SpaceForm sf(n, 1.0);
    for (double L : {0.7, 0.1, 0.05, 0.003}) {
      const double alg = tones::fundamental_tone(sf, L).lambda;
      const double asy = std::pow(tones::tone_asymptotic_small(sf, L), 0.25);
      t.rows.push_back({std::to_string(n), num(L), num(alg), num(asy), num(std::fabs(alg - asy))});
    }
  }
  return t;
}

Table table2_cmd() {
  Table t{{"L", "algebraic_minus_one", "approximate_minus_one", "lambda"}, {}, false};
  const SpaceForm sf(3, 1.0);
  for (double L : {50.0, 100.0, 5000.0, 100000.0}) {
    const auto r = tones::fundamental_tone(sf, L);
    t.rows.push_back(
        {num(L), num(r.excess), num(tones::tone_asymptotic_large_3d_excess(1.0, L)), num(r.lambda)});
  }
  return t;
}

Table scan_cmd(const Options& o) {
  const auto sf = space_form(o);
  if (!(sf.kappa > 0.0)) throw DomainError("scan needs --kappa > 0");
  if (sf.n != 2 && sf.n != 3) throw DomainError("scan needs --dim 2 or 3");
  if (!(o.from > 0.0) || !(o.to >= o.from)) throw DomainError("scan needs 0 < --from <= --to");
  if (o.steps < 1) throw DomainError("--steps must be at least 1");
  Table t{{"L", "lambda", "gamma", "g1", "holds"}, {}, false};
  for (int i = 0; i <= o.steps; ++i) {
    const double L = o.steps == 0 ? o.from : o.from + (o.to - o.from) * i / o.steps;
    const auto g = tones::sharpness_gap(sf, L);
    t.rows.push_back({num(L), num(g.lam), num(std::pow(g.lam, 4)), num(g.g1), g.holds ? "true" : "false"});
  }
  return t;
}

Table oracle_cmd(const Options& o) {
  const auto sf = space_form(o);
  const double L = need_radius(o);
  if (sf.n != 2 && sf.n != 3) throw DomainError("oracle needs --dim 2 or 3");
  if (o.grid < 16) throw DomainError("--grid must be at least 16");
  const auto grid = oracle::RadialGrid::make(sf, L, o.grid);
  const double plate = oracle::fd_plate_tone(sf, L, grid);
  const double membrane = oracle::fd_membrane_tone(sf, L, grid);
  const auto tone = tones::fundamental_tone(sf, L);
  const double g1 = sf.kappa > 0.0 ? tones::pole_g(sf, 1, geometry::tilde_of_radius(sf.kappa, L))
                                   : specfun::bessel_first_zero(sf.nu()) / L;
  Table t{{"n", "kappa", "radius", "grid", "fd_plate_gamma", "tone_gamma", "plate_rel_gap",
           "fd_membrane", "g1_squared", "membrane_rel_gap"},
          {},
          true};
  t.rows.push_back({std::to_string(sf.n), num(sf.kappa), num(L), std::to_string(o.grid),
                    num(plate), num(tone.gamma), num(std::fabs(plate - tone.gamma) / tone.gamma),
                    num(membrane), num(g1 * g1), num(std::fabs(membrane - g1 * g1) / (g1 * g1))});
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clamped-plate fundamental tones on hyperbolic space forms", "hyperplate"};
  app.require_subcommand(1, 1);
  Options o;
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", o.out_path, "write output to this file instead of stdout");
  };
  auto space = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "dimension n");
    sub->add_option("--kappa", o.kappa, "curvature scale (sectional curvature -kappa^2)");
  };

  auto* tone = app.add_subcommand("tone", "fundamental tone of a geodesic ball");
  space(tone);
  tone->add_option("--radius", o.radius, "geodesic radius L");
  common(tone);

  auto* twoball = app.add_subcommand("twoball", "two-ball minimization value");
  space(twoball);
  twoball->add_option("--alpha", o.alpha, "tilde radius of the smaller ball");
  twoball->add_option("--total", o.total, "tilde radius of the ball carrying the total volume");
  twoball->add_option("--radius", o.radius, "geodesic radius carrying the total volume");
  common(twoball);

  auto* threshold = app.add_subcommand("threshold", "largest radius where the comparison holds");
  space(threshold);
  common(threshold);

  auto* table1 = app.add_subcommand("table1", "algebraic vs small-radius asymptotic tones");
  common(table1);
  auto* table2 = app.add_subcommand("table2", "large-radius tones in dimension 3");
  common(table2);

  auto* scan = app.add_subcommand("scan", "sweep the radius, reporting the comparison gap");
  space(scan);
  scan->add_option("--from", o.from, "first radius");
  scan->add_option("--to", o.to, "last radius");
  scan->add_option("--steps", o.steps, "number of intervals");
  common(scan);

  auto* orc = app.add_subcommand("oracle", "finite-difference cross-check");
  space(orc);
  orc->add_option("--radius", o.radius, "geodesic radius L");
  orc->add_option("--grid", o.grid, "number of grid intervals");
  common(orc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    Table t;
    if (*tone) t = tone_cmd(o);
    else if (*twoball) t = twoball_cmd(o);
    else if (*threshold) t = threshold_cmd(o);
    else if (*table1) t = table1_cmd();
    else if (*table2) t = table2_cmd();
    else if (*scan) t = scan_cmd(o);
    else t = oracle_cmd(o);

    if (o.out_path.empty()) {
      render(t, o.format, out);
    } else {
      std::ofstream file(o.out_path);
      if (!file) {
        err << "error: cannot open " << o.out_path << '\n';
        return 1;
      }
      render(t, o.format, file);
    }
    return 0;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace hyperplate::cli
