#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "minksurf/association.hpp"
#include "minksurf/config.hpp"
#include "minksurf/export.hpp"
#include "minksurf/validate.hpp"

namespace fs = std::filesystem;
using namespace minksurf;

namespace {

// Exit codes: 0 success, 1 failed invariant / false verdict, 2 config or
// grid errors, 3 regularity failure, 4 quadrature failure.
template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DisallowedFunction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GridMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RegularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const QuadratureNoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

struct ScenarioArgs {
  std::string config_path;
  std::string example_id;
  std::string grid;    // "NUxNV"
  std::string domain;  // "umin,umax,vmin,vmax"
  double h = 1e-3;
  int jobs = 0;
  std::string out_dir = ".";

  void attach(CLI::App* cmd, const std::string& prefix = "") {
    cmd->set_help_flag("--help", "print usage");
    const std::string dash = prefix.empty() ? "--" : "--" + prefix + "-";
    auto* config_opt = cmd->add_option(dash + "config", config_path, "scenario config (JSON)");
    auto* example_opt =
        cmd->add_option(dash + "example", example_id, "built-in example id (ex36, ex37, ex38)");
    config_opt->excludes(example_opt);
    if (prefix.empty()) {
      cmd->add_option("--grid", grid, "override grid as NUxNV");
      cmd->add_option("--domain", domain, "override domain as umin,umax,vmin,vmax");
      cmd->add_option("--h", h, "finite-difference step")->check(CLI::PositiveNumber);
      cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
      cmd->add_option("--out", out_dir, "output directory");
    }
  }

  ScenarioConfig load() const {
    ScenarioConfig cfg;
    if (!example_id.empty()) {
      const auto id = example_from_string(example_id);
      if (!id) throw ConfigError("unknown example '" + example_id + "'");
      cfg = ScenarioConfig::for_example(*id);
    } else if (!config_path.empty()) {
      cfg = ScenarioConfig::from_file(config_path);
    } else {
      throw ConfigError("one of --config or --example is required");
    }
    if (!grid.empty()) {
      int nu = 0, nv = 0;
      if (std::sscanf(grid.c_str(), "%dx%d", &nu, &nv) != 2 || nu < 2 || nv < 2)
        throw ConfigError("--grid expects NUxNV with both at least 2");
      cfg.nu = nu;
      cfg.nv = nv;
    }
    if (!domain.empty()) {
      double b[4];
      if (std::sscanf(domain.c_str(), "%lf,%lf,%lf,%lf", &b[0], &b[1], &b[2], &b[3]) != 4)
        throw ConfigError("--domain expects umin,umax,vmin,vmax");
      cfg.domain = DomainRect{b[0], b[1], b[2], b[3]};
      if (!cfg.domain.nondegenerate()) throw ConfigError("--domain rectangle is degenerate");
      cfg.w0 = {0.5 * (b[0] + b[1]), 0.5 * (b[2] + b[3])};
    }
    return cfg;
  }

  std::string stem() const {
    if (!example_id.empty()) return example_id;
    if (!config_path.empty()) return fs::path(config_path).stem().string();
    return "surface";
  }
};

std::string theta_tag(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", theta);
  return buf;
}

int cmd_sample(const ScenarioArgs& args, const std::optional<double>& theta_flag) {
  const ScenarioConfig cfg = args.load();
  const SurfaceData sd = cfg.build_surface();
  const std::vector<double> thetas =
      theta_flag ? std::vector<double>{*theta_flag} : cfg.thetas;
  fs::create_directories(args.out_dir);
  for (const double theta : thetas) {
    const SampledSurface surf = sample_grid(sd, theta, cfg.nu, cfg.nv, args.jobs);
    const CurvatureField field = curvature_field(sd, theta, cfg.nu, cfg.nv, args.h, args.jobs);
    const std::string base = args.stem() + "_theta" + theta_tag(theta);
    const fs::path obj_path = fs::path(args.out_dir) / (base + ".obj");
    const fs::path csv_path = fs::path(args.out_dir) / (base + ".csv");
    {
      std::ofstream obj(obj_path);
      write_obj(obj, surf, default_drop_axis(theta));
    }
    {
      std::ofstream csv(csv_path);
      write_csv(csv, surf, field);
    }
    std::cout << "wrote " << obj_path.string() << " and " << csv_path.string() << "\n";
  }
  return 0;
}

int cmd_check(const ScenarioArgs& args) {
  const ScenarioConfig cfg = args.load();
  const SurfaceData sd = cfg.build_surface();
  CheckOptions opts = CheckOptions::from_config(cfg);
  opts.fd_step = args.h;
  opts.jobs = args.jobs;
  const ValidationReport report = run_checks(sd, opts);

  for (const CheckResult& r : report.results) {
    std::printf("%-26s %s  worst=%.6e  tol=%.1e  %s\n", r.name.c_str(),
                r.pass ? "pass" : "FAIL", r.worst_value, r.tolerance, r.detail.c_str());
  }
  if (!report.planar.empty()) {
    std::printf("planar points:\n");
    for (const PlanarPoint& p : report.planar)
      std::printf("  w = (%.10g, %.10g)  |a'| = %.3e%s\n", p.w.real(), p.w.imag(),
                  p.abs_a_deriv, p.refined ? "" : "  [unrefined]");
  } else {
    std::printf("planar points: none%s\n",
                report.flatness == Flatness::FullyPlanar ? " (fully planar family)" : "");
  }

  fs::create_directories(args.out_dir);
  const fs::path report_path = fs::path(args.out_dir) / (args.stem() + "_report.jsonl");
  std::ofstream out(report_path);
  write_report_jsonl(out, report.results);
  for (const ExportRequest& req : cfg.outputs)
    if (req.kind == ExportRequest::Kind::Report) {
      std::ofstream extra(req.path);
      write_report_jsonl(extra, report.results);
    }
  std::cout << "report: " << report_path.string() << "\n";
  return report.all_pass() ? 0 : 1;
}

int cmd_planar(const ScenarioArgs& args) {
  const ScenarioConfig cfg = args.load();
  // Root scanning needs only a', not a regular metric, so parse directly.
  const expr::HolomorphicFn a = expr::HolomorphicFn::from_source(cfg.a_expr);
  const std::vector<PlanarPoint> roots =
      planar_points(a, cfg.domain, std::max(cfg.nu, 33), std::max(cfg.nv, 33),
                    cfg.tolerance("planar", kPlanarTol));
  if (roots.empty()) {
    std::cout << "no planar points\n";
  } else {
    for (const PlanarPoint& p : roots)
      std::printf("w = (%.10g, %.10g)  |a'| = %.3e%s\n", p.w.real(), p.w.imag(), p.abs_a_deriv,
                  p.refined ? "" : "  [unrefined]");
  }
  return 0;
}

int cmd_pair(const ScenarioArgs& args, const ScenarioArgs& y_args) {
  const ScenarioConfig cfg_x = args.load();
  const ScenarioConfig cfg_y = y_args.load();
  // Shared patch around the X domain center, grid pitch = h.
  const int half = 10;
  const double cu = 0.5 * (cfg_x.domain.u_min + cfg_x.domain.u_max);
  const double cv = 0.5 * (cfg_x.domain.v_min + cfg_x.domain.v_max);
  const DomainRect patch{cu - half * args.h, cu + half * args.h, cv - half * args.h,
                         cv + half * args.h};
  const auto patch_surface = [&](const ScenarioConfig& cfg) {
    return SurfaceData::create(expr::HolomorphicFn::from_source(cfg.a_expr),
                               expr::HolomorphicFn::from_source(cfg.mu_expr), patch,
                               Complex(cu, cv), RVec4{cfg.p}, RVec4{cfg.q});
  };
  const int n = 2 * half + 1;
  const SampledSurface x = sample_grid(patch_surface(cfg_x), 0.0, n, n, args.jobs);
  const SampledSurface y = sample_grid(patch_surface(cfg_y), std::numbers::pi, n, n, args.jobs);
  const PairTolerances tol{cfg_x.tolerance("pair", 1e-5), cfg_x.tolerance("pair_slice", 1e-8)};
  const PairReport report = pair_check(x, y, args.h, tol);

  std::printf("residual Y3_w - X0_w   : %.6e\n", report.max_residuals[0]);
  std::printf("residual Y1_w + i X2_w : %.6e\n", report.max_residuals[1]);
  std::printf("residual Y2_w - i X1_w : %.6e\n", report.max_residuals[2]);
  std::printf("slice deviation X3 / Y0: %.3e / %.3e\n", report.x_slice_deviation,
              report.y_slice_deviation);
  std::printf("grid spacing %.3e, verdict: %s\n", report.grid_spacing,
              report.verdict ? "associated pair" : "NOT an associated pair");
  return report.verdict ? 0 : 1;
}

int cmd_examples_list() {
  for (const ExampleId id : {ExampleId::Ex36, ExampleId::Ex37, ExampleId::Ex38}) {
    const ExampleScenario ex = make_example(id);
    const DomainRect& d = ex.data.domain();
    std::printf("%-5s a = %-24s mu = %-20s domain [%g, %g] x [%g, %g]\n    %s\n",
                ex.id.c_str(), ex.a_expr.c_str(), ex.mu_expr.c_str(), d.u_min, d.u_max, d.v_min,
                d.v_max, ex.description.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta-family of spacelike minimal surfaces: sampling and validation"};
  // --h is the finite-difference step, so help lives on --help alone.
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  ScenarioArgs sample_args, check_args, planar_args, pair_args;
  ScenarioArgs pair_y_args;
  std::optional<double> theta_flag;

  CLI::App* sample = app.add_subcommand("sample", "sample a family member, write OBJ + CSV");
  sample_args.attach(sample);
  double theta_value = 0.0;
  CLI::Option* theta_opt = sample->add_option("--theta", theta_value, "family parameter");

  CLI::App* check = app.add_subcommand("check", "run the full validation report");
  check_args.attach(check);

  CLI::App* planar = app.add_subcommand("planar", "scan for zeros of a'");
  planar_args.attach(planar);

  CLI::App* pair = app.add_subcommand("pair", "check the associated-pair equations");
  pair_args.attach(pair);
  pair_y_args.attach(pair, "y");

  CLI::App* examples = app.add_subcommand("examples", "built-in example data");
  examples->add_subcommand("list", "list example ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (sample->parsed()) {
    if (theta_opt->count() > 0) theta_flag = theta_value;
    return guarded([&] { return cmd_sample(sample_args, theta_flag); });
  }
  if (check->parsed()) return guarded([&] { return cmd_check(check_args); });
  if (planar->parsed()) return guarded([&] { return cmd_planar(planar_args); });
  if (pair->parsed()) return guarded([&] { return cmd_pair(pair_args, pair_y_args); });
  if (examples->parsed()) return guarded([&] { return cmd_examples_list(); });
  return 2;
}
