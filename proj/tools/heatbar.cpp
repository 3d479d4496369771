// heatbar: transient conduction in a two-material bar.
//
//   heatbar <mode> --config <file> [--out <dir>] [--modes N] [--dx v] [--dt v] [--tmax v]
//
// Exit codes: 0 ok, 2 config error, 3 numerical failure, 4 I/O error.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

#include "heatbar/config.hpp"
#include "heatbar/csv.hpp"
#include "heatbar/validate.hpp"

namespace {

using namespace heatbar;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::string header_for(const RunConfig& cfg, std::string_view extra = {}) {
  std::string h = std::string(kVersion) + "\n" + echo(cfg);
  for (const auto& w : cfg.warnings) h += "warning: " + w + "\n";
  if (!extra.empty()) h += std::string(extra) + "\n";
  if (!h.empty() && h.back() == '\n') h.pop_back();
  return h;
}

void report_written(const std::filesystem::path& p) { std::cout << "wrote " << p.string() << "\n"; }

int run_steady(const RunConfig& cfg) {
  const SteadySolution s = solve_steady(cfg.problem);
  const BarProblem& p = cfg.problem;
  std::cout << std::setprecision(10) << "mu=" << s.mu << " Q=" << s.Q << " D=" << s.D << "\n"
            << "U(0)=" << eval_steady(s, 0.0) << " U(l)=" << eval_steady(s, p.interface)
            << " U(L)=" << eval_steady(s, p.length) << "\n";
  report_written(emit_csv(steady_profile_table(s, cfg.steady_dx), header_for(cfg), cfg.out_dir));
  return 0;
}

int run_eigen(const RunConfig& cfg) {
  const AnalyticSolution sol = make_analytic_solution(cfg.problem, cfg.modes, cfg.coefficients);
  const ParameterizationConstants c = parameterization_constants(cfg.problem);
  std::cout << std::setprecision(6) << "alpha*l=" << c.alpha_l << " k*alpha=" << c.k_alpha
            << " k2/h=" << c.robin_slope << " (reciprocal parameterization: " << c.reciprocal_alpha_l
            << ", " << c.reciprocal_k_alpha << ", " << c.reciprocal_robin_slope << ")\n";
  double worst = 0.0;
  for (const auto& m : sol.modes) worst = std::max(worst, m.residual);
  std::cout << sol.modes.size() << " eigenvalues, max residual " << worst << "\n";
  report_written(emit_csv(eigenvalue_table(sol), header_for(cfg), cfg.out_dir));
  return 0;
}

std::vector<double> sample_times(double tmax, double interval) {
  std::vector<double> t;
  const std::size_t n = steps_for(tmax, interval);
  for (std::size_t i = 0; i <= n; ++i) t.push_back(std::min(tmax, static_cast<double>(i) * interval));
  return t;
}

int run_analytic(const RunConfig& cfg) {
  const AnalyticSolution sol = make_analytic_solution(cfg.problem, cfg.modes, cfg.coefficients);
  const std::vector<double> probes = cfg.probe_positions();
  const std::vector<double> times = sample_times(cfg.tmax, cfg.record_interval);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(times.size()), static_cast<Eigen::Index>(probes.size()));
  for (std::size_t i = 0; i < times.size(); ++i)
    for (std::size_t j = 0; j < probes.size(); ++j)
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval_solution(sol, probes[j], times[i]);

  const std::string note =
      "note: t=0 rows are diagnostic only (series not uniformly convergent at t=0)\n"
      "coefficients: " + std::string(to_string(sol.method)) +
      ", tail estimate at t=" + format_double(cfg.record_interval) + " s: " +
      format_double(truncation_tail_estimate(sol, cfg.record_interval));
  report_written(emit_csv(probe_series_table(times, values, probe_columns(cfg.problem, probes)),
                          header_for(cfg, note), cfg.out_dir));

  const GridSpec grid = make_grid(cfg.problem, cfg.dx, cfg.dt, false);
  const Eigen::VectorXd x = grid.positions();
  const std::vector<double> snaps = sample_times(cfg.tmax, cfg.snapshot_interval);
  std::vector<Eigen::VectorXd> fields;
  for (double t : snaps) fields.push_back(eval_solution(sol, x, t));
  report_written(emit_csv(space_time_table(snaps, x, fields), header_for(cfg, note), cfg.out_dir));
  return 0;
}

int run_fdm(const RunConfig& cfg) {
  const GridSpec grid = make_grid(cfg.problem, cfg.dx, cfg.dt);
  RunOptions ro;
  ro.probes = cfg.probe_positions();
  ro.record_interval = cfg.record_interval;
  ro.snapshot_interval = cfg.snapshot_interval;
  ro.closure = cfg.closure;
  const FdmRun out = run(cfg.problem, grid, cfg.tmax, ro);
  std::string extra;
  for (const auto& w : out.warnings) {
    std::cerr << "warning: " << w << "\n";
    extra += "warning: " + w + "\n";
  }
  const StabilityCheck stab = check_stability(cfg.problem, grid.dx, grid.dt);
  extra += "stability threshold " + format_double(stab.threshold) + ", margin " + format_double(stab.margin);
  std::cout << out.final_state.steps << " steps to t=" << out.final_state.time << " s\n";
  report_written(emit_csv(probe_series_table(out.times, out.probe_values, probe_columns(cfg.problem, ro.probes)),
                          header_for(cfg, extra), cfg.out_dir));
  report_written(emit_csv(space_time_table(out.snapshot_times, grid.positions(), out.snapshots),
                          header_for(cfg, extra), cfg.out_dir));
  return 0;
}

int run_compare(const RunConfig& cfg) {
  const GridSpec grid = make_grid(cfg.problem, cfg.dx, cfg.dt);
  CompareOptions opts;
  opts.tolerance = cfg.tolerance;
  opts.method = cfg.coefficients;
  opts.closure = cfg.closure;
  const ComparisonReport r = compare_profiles(cfg.problem, cfg.times, cfg.modes, grid, opts);
  const std::string text = format_report(r);
  std::cout << text;
  const auto report_path = cfg.out_dir / "comparison_report.txt";
  write_text(report_path, text);
  report_written(report_path);
  report_written(emit_csv(comparison_table(r), header_for(cfg), cfg.out_dir));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transient heat conduction in a two-material bar"};
  std::string mode_name;
  std::string config_path;
  heatbar::ConfigOverrides overrides;
  std::string out_dir;
  std::size_t modes = 0;
  double dx = 0.0, dt = 0.0, tmax = 0.0;

  app.add_option("mode", mode_name, "steady | eigen | analytic | fdm | compare")->required();
  app.add_option("--config", config_path, "key=value configuration file")->required();
  auto* out_opt = app.add_option("--out", out_dir, "output directory");
  auto* modes_opt = app.add_option("--modes", modes, "number of series modes");
  auto* dx_opt = app.add_option("--dx", dx, "spatial step, m");
  auto* dt_opt = app.add_option("--dt", dt, "time step, s");
  auto* tmax_opt = app.add_option("--tmax", tmax, "simulated time, s");
  app.set_version_flag("--version", std::string(heatbar::kVersion));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    overrides.mode = heatbar::parse_mode(mode_name);
    if (*out_opt) overrides.out_dir = out_dir;
    if (*modes_opt) overrides.modes = modes;
    if (*dx_opt) overrides.dx = dx;
    if (*dt_opt) overrides.dt = dt;
    if (*tmax_opt) overrides.tmax = tmax;
    const heatbar::RunConfig cfg = heatbar::parse_config(config_path, overrides);
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
    switch (cfg.mode) {
      case heatbar::Mode::kSteady: return run_steady(cfg);
      case heatbar::Mode::kEigen: return run_eigen(cfg);
      case heatbar::Mode::kAnalytic: return run_analytic(cfg);
      case heatbar::Mode::kFdm: return run_fdm(cfg);
      case heatbar::Mode::kCompare: return run_compare(cfg);
    }
  } catch (const heatbar::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const heatbar::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const heatbar::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
