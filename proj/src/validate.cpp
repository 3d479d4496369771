#include "heatbar/validate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "heatbar/format.hpp"

namespace heatbar {

DiscrepancyNorms discrepancy(const Eigen::Ref<const Eigen::VectorXd>& a,
                             const Eigen::Ref<const Eigen::VectorXd>& b, double dx) {
  const Eigen::ArrayXd e = (a - b).array().abs();
  DiscrepancyNorms d;
  d.linf = e.size() > 0 ? e.maxCoeff() : 0.0;
  if (e.size() > 1) {
    const Eigen::Index n = e.size();
    const double sq = e.square().sum() - 0.5 * (e[0] * e[0] + e[n - 1] * e[n - 1]);
    d.l2 = std::sqrt(sq * dx);
  }
  return d;
}

ParameterizationConstants parameterization_constants(const BarProblem& p) {
  const DerivedRatios r = derived_ratios(p);
  ParameterizationConstants c;
  c.alpha_l = r.alpha * p.interface;
  c.k_alpha = r.kratio * r.alpha;
  c.robin_slope = p.right.k / p.h;
  c.reciprocal_alpha_l = p.interface / r.alpha;
  c.reciprocal_k_alpha = 1.0 / (r.kratio * r.alpha);
  c.reciprocal_robin_slope = p.left.k / p.h;
  return c;
}

EigenAudit audit_eigen(const BarProblem& p, std::size_t count) {
  EigenAudit audit;
  audit.constants = parameterization_constants(p);
  for (const Eigenmode& m : find_eigenvalues(p, count)) {
    const UnshiftedCoefficientCheck u = check_unshifted_coefficients(p, m);
    audit.rows.push_back({m.index, m.lambda, m.branch, m.residual, u.flux_residual_k_alpha,
                          u.flux_residual_l_alpha, m.on_jump_point});
    audit.max_residual = std::max(audit.max_residual, m.residual);
  }
  return audit;
}

std::vector<CoefficientRow> compare_coefficients(const BarProblem& p, std::size_t count) {
  const SteadySolution s = solve_steady(p);
  std::vector<CoefficientRow> rows;
  for (const Eigenmode& m : find_eigenvalues(p, count)) {
    rows.push_back({m.index, m.lambda, coefficient_closed_form(s, m), coefficient_quadrature(s, m),
                    coefficient_weighted(s, m)});
  }
  return rows;
}

double mode_pde_residual(const AnalyticSolution& sol, std::size_t i, double x, double t) {
  const BarProblem& p = sol.steady.problem;
  const Eigenmode& m = sol.modes.at(i);
  const bool left = x <= p.interface;
  const double c = sol.amplitudes[i];
  const double rate = sol.decay_rate(i);
  auto shape = [&](double y) {
    if (left) return std::sin(m.lambda1 * y);
    const double s = m.lambda * (y - p.interface);
    return m.A * std::sin(s) + m.B * std::cos(s);
  };
  auto u = [&](double y, double tau) { return c * shape(y) * std::exp(-rate * tau); };

  const double wavenumber = left ? m.lambda1 : m.lambda;
  const double hx = 1e-3 / wavenumber;
  const double ht = 1e-3 / rate;
  const double uxx = (u(x + hx, t) - 2.0 * u(x, t) + u(x - hx, t)) / (hx * hx);
  const double ut = (u(x, t + ht) - u(x, t - ht)) / (2.0 * ht);
  const double diffusivity = left ? p.left.alpha2 : p.right.alpha2;
  const double amp = left ? 1.0 : std::max(1.0, std::hypot(m.A, m.B));
  const double scale = rate * std::abs(c) * amp * std::exp(-rate * t);
  if (scale == 0.0) return 0.0;
  return std::abs(diffusivity * uxx - ut) / scale;
}

double ComparisonReport::worst_linf() const {
  double worst = 0.0;
  for (const auto& prof : profiles) worst = std::max(worst, prof.linf);
  return worst;
}

std::string describe(const BarProblem& p) {
  std::ostringstream os;
  os << "problem.L=" << format_double(p.length) << "\nproblem.l=" << format_double(p.interface)
     << "\nproblem.h=" << format_double(p.h) << "\nproblem.F=" << format_double(p.source)
     << "\nproblem.Ta=" << format_double(p.ambient) << "\nproblem.left=" << p.left.name
     << "\nproblem.left.k=" << format_double(p.left.k)
     << "\nproblem.left.alpha2=" << format_double(p.left.alpha2)
     << "\nproblem.right=" << p.right.name << "\nproblem.right.k=" << format_double(p.right.k)
     << "\nproblem.right.alpha2=" << format_double(p.right.alpha2) << "\n";
  return os.str();
}

ComparisonReport compare_profiles(const BarProblem& p, const std::vector<double>& t_values,
                                  std::size_t mode_count, const GridSpec& grid,
                                  const CompareOptions& opts) {
  if (t_values.empty()) throw ConfigError("compare_profiles: no comparison times");
  for (double t : t_values) {
    if (t < kMinComparisonTime) {
      throw ConfigError("compare_profiles: comparison times must be >= 60 s (got " +
                        std::to_string(t) + ")");
    }
  }
  ComparisonReport report;
  report.config = describe(p);
  report.tolerance = opts.tolerance;
  report.mode_count = mode_count;
  report.method = opts.method;
  report.grid = grid;

  const AnalyticSolution sol = make_analytic_solution(p, mode_count, opts.method);
  RunOptions ro;
  ro.capture_times = t_values;
  ro.closure = opts.closure;
  const double t_max = *std::max_element(t_values.begin(), t_values.end());
  FdmRun fdm = run(p, grid, t_max, ro);
  for (auto& w : fdm.warnings) report.notes.push_back("warning: " + w);

  const Eigen::VectorXd x = grid.positions();
  const Eigen::VectorXd steady = eval_steady(sol.steady, x);
  for (std::size_t i = 0; i < fdm.captures.size(); ++i) {
    ProfileComparison pc;
    pc.t = fdm.capture_times[i];
    pc.x = x;
    pc.analytic = eval_solution(sol, x, pc.t);
    pc.fdm = fdm.captures[i];
    pc.steady = steady;
    const DiscrepancyNorms d = discrepancy(pc.analytic, pc.fdm, grid.dx);
    pc.linf = d.linf;
    pc.l2 = d.l2;
    pc.linf_fdm_steady = discrepancy(pc.fdm, steady, grid.dx).linf;
    pc.tail_estimate = truncation_tail_estimate(sol, pc.t);
    report.profiles.push_back(std::move(pc));
  }
  std::sort(report.profiles.begin(), report.profiles.end(),
            [](const auto& a, const auto& b) { return a.t < b.t; });

  if (opts.audit_count > 0) report.eigen = audit_eigen(p, opts.audit_count);
  if (opts.coefficient_rows > 0) report.coefficients = compare_coefficients(p, opts.coefficient_rows);

  const ParameterizationConstants& c = report.eigen.constants;
  std::ostringstream note;
  note << std::setprecision(6) << "eigen equation constants: symbolic alpha*l=" << c.alpha_l
       << " k*alpha=" << c.k_alpha << " k2/h=" << c.robin_slope
       << "; reciprocal alpha*l=" << c.reciprocal_alpha_l << " k*alpha=" << c.reciprocal_k_alpha
       << " k1/h=" << c.reciprocal_robin_slope;
  report.notes.push_back(note.str());
  if (!report.eigen.rows.empty()) {
    double k_alpha = 0.0;
    double l_alpha = 0.0;
    for (const auto& row : report.eigen.rows) {
      k_alpha = std::max(k_alpha, row.flux_residual_k_alpha);
      l_alpha = std::max(l_alpha, row.flux_residual_l_alpha);
    }
    std::ostringstream os;
    os << std::setprecision(3) << "unshifted cosine coefficient: k*alpha variant flux residual "
       << k_alpha << ", l*alpha variant flux residual " << l_alpha << " -> "
       << (k_alpha <= l_alpha ? "k*alpha satisfies flux continuity"
                              : "l*alpha satisfies flux continuity");
    report.notes.push_back(os.str());
  }
  return report;
}

double steady_consistency(const BarProblem& p, double t_long, const GridSpec& grid,
                          InterfaceClosure closure) {
  if (t_long < kMinSteadyTime) throw ConfigError("steady_consistency: t_long must be >= 10 h");
  RunOptions ro;
  ro.closure = closure;
  const FdmRun fdm = run(p, grid, t_long, ro);
  const Eigen::VectorXd steady = eval_steady(solve_steady(p), grid.positions());
  return discrepancy(fdm.final_state.temps, steady, grid.dx).linf;
}

std::string format_report(const ComparisonReport& r) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "# comparison report\n[config]\n" << r.config;
  os << "grid.dx=" << r.grid.dx << "\ngrid.dt=" << r.grid.dt << "\nseries.modes=" << r.mode_count
     << "\nseries.coefficients=" << to_string(r.method) << "\ntolerance=" << r.tolerance << "\n";
  os << "[profiles]\n";
  for (const auto& pc : r.profiles) {
    os << "t=" << pc.t << " s (" << pc.t / 3600.0 << " h): linf(analytic,fdm)=" << pc.linf
       << " l2=" << pc.l2 << " linf(fdm,steady)=" << pc.linf_fdm_steady
       << " tail_estimate=" << pc.tail_estimate << " -> "
       << (pc.linf <= r.tolerance ? "within tolerance" : "EXCEEDS tolerance") << "\n";
  }
  if (!r.eigen.rows.empty()) {
    os << "[eigen]\nmax_residual=" << r.eigen.max_residual << "\n";
    os << "n lambda branch residual flux_k_alpha flux_l_alpha\n";
    os << std::setprecision(12);
    for (const auto& row : r.eigen.rows) {
      os << row.n << " " << row.lambda << " " << row.branch << " " << std::setprecision(3)
         << row.residual << " " << row.flux_residual_k_alpha << " " << row.flux_residual_l_alpha
         << (row.on_jump_point ? " on_jump_point" : "") << std::setprecision(12) << "\n";
    }
  }
  if (!r.coefficients.empty()) {
    os << "[coefficients]\nn lambda closed_form quadrature weighted\n" << std::setprecision(10);
    for (const auto& row : r.coefficients) {
      os << row.n << " " << row.lambda << " " << row.closed_form << " " << row.quadrature << " "
         << row.weighted << "\n";
    }
  }
  os << "[notes]\n";
  for (const auto& n : r.notes) os << n << "\n";
  return os.str();
}

}  // namespace heatbar
