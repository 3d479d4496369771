// Acceptance gate: one PASS/FAIL line per criterion, indented detail lines below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "heatbar/fdm.hpp"
#include "heatbar/series.hpp"
#include "heatbar/steady.hpp"
#include "heatbar/validate.hpp"

using namespace heatbar;

namespace {

int failures = 0;

void verdict(int id, const char* name, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, name);
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class... Args>
void detail(const char* fmt, Args... args) {
  std::printf("       ");
  std::printf(fmt, args...);
  std::printf("\n");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Material mat(const char* name) { return *find_material(builtin_materials(), name); }

BarProblem long_bar() { return make_problem(5.0, 2.0, mat("Fe"), mat("Pb"), 10.0, 150.0, 20.0); }

BarProblem fe_pb(const char* left = "Fe", const char* right = "Pb", double l = 0.3) {
  return make_problem(1.0, l, mat(left), mat(right), 10.0, 100.0, 25.0);
}

// Independent bisection for -(k/h) lambda = tan(lambda L) on ((m - 1/2) pi/L, m pi/L).
std::vector<double> classical_roots(double L, double k, double h, int count) {
  std::vector<double> roots;
  for (int m = 1; m <= count; ++m) {
    double a = (m - 0.5) * std::numbers::pi / L * (1.0 + 1e-15);
    double b = m * std::numbers::pi / L;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      (std::tan(mid * L) + (k / h) * mid < 0.0 ? a : b) = mid;
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const BarProblem p = long_bar();
  const auto modes = find_eigenvalues(p, 20);
  bool ok = modes.size() == 20;
  double worst = 0.0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const ModeResidual r = verify_mode(p, modes[i]);
    worst = std::max(worst, r.max());
    if (i > 0 && !(modes[i].lambda > modes[i - 1].lambda)) ok = false;
  }
  const double secs = seconds_since(t0);
  ok = ok && worst < 1e-8 && secs < 1.0;
  verdict(1, "eigen residual suite (Fe-Pb, L=5, l=2, 20 modes)", ok);
  detail("max normalized residual %.3g (< 1e-8), lambda_1=%.10g, lambda_20=%.10g, %.3f s (< 1 s)",
         worst, modes.front().lambda, modes.back().lambda, secs);
}

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const BarProblem p = fe_pb("Fe", "Fe");
  const auto roots = classical_roots(p.length, p.right.k, p.h, 100);
  const auto modes = find_eigenvalues(p, 100);
  double worst_rel = 0.0;
  for (std::size_t i = 0; i < 20; ++i) {
    worst_rel = std::max(worst_rel, std::abs(modes[i].lambda - roots[i]) / roots[i]);
  }

  // Classical single-material series with hand-integrated (0, L) coefficients.
  const double c = p.h / (p.right.k + p.h * p.length);
  const double t = 3600.0;
  const AnalyticSolution sol = make_analytic_solution(p, 100);
  double worst_u = 0.0;
  for (int j = 0; j <= 100; ++j) {
    const double x = j / 100.0;
    double u = p.source - (p.source - p.ambient) * c * x;
    for (double lam : roots) {
      const double sL = std::sin(lam * p.length), cL = std::cos(lam * p.length);
      const double num = (1.0 - cL) / lam - c * (sL - lam * p.length * cL) / (lam * lam);
      const double den = p.length / 2.0 - std::sin(2.0 * lam * p.length) / (4.0 * lam);
      u += (p.ambient - p.source) * num / den * std::sin(lam * x) *
           std::exp(-lam * lam * p.right.alpha2 * t);
    }
    worst_u = std::max(worst_u, std::abs(eval_solution(sol, x, t) - u));
  }
  const double secs = seconds_since(t0);
  verdict(2, "homogeneous-reduction oracle (Fe|Fe)", worst_rel < 1e-9 && worst_u < 1e-6 && secs < 5.0);
  detail("eigenvalues vs classical bisection: max relative diff %.3g (< 1e-9)", worst_rel);
  detail("solution vs classical series at t=1 h: max |diff| %.3g C (< 1e-6), %.3f s (< 5 s)",
         worst_u, secs);
}

void criterion3() {
  const BarProblem p = fe_pb();
  const SteadySolution s = solve_steady(p);
  // Exact rationals: U(l) = 100 - 75*10*(2555/3171)*0.3/73, U(L) = 100 - 75*10*(2555/3171)*(0.7/35 + 0.3/73).
  const double ul = 100.0 - 75.0 * 10.0 * (2555.0 / 3171.0) * 0.3 / 73.0;
  const double uL = 100.0 - 75.0 * 10.0 * (2555.0 / 3171.0) * (0.7 / 35.0 + 0.3 / 73.0);
  const double el = std::abs(eval_steady(s, p.interface) - ul) / ul;
  const double eL = std::abs(eval_steady(s, p.length) - uL) / uL;
  const bool origin = eval_steady(s, 0.0) == 100.0;

  const BarProblem half = fe_pb("Fe", "Pb", 0.5);
  const SteadySolution sh = solve_steady(half);
  const double half_l = std::abs(eval_steady(sh, 0.5) - interface_temperature_half(half)) /
                        std::abs(interface_temperature_half(half));
  const double half_L = std::abs(eval_steady(sh, 1.0) - right_end_temperature_half(half)) /
                        std::abs(right_end_temperature_half(half));
  const double swap = std::abs(eval_steady(sh, 1.0) - eval_steady(solve_steady(swapped(half)), 1.0));
  verdict(3, "steady-state closed form (Fe-Pb, L=1, l=0.3)",
          origin && el < 1e-12 && eL < 1e-12 && half_l < 1e-12 && half_L < 1e-12 && swap < 1e-12);
  detail("U(0)=%.17g exact=%s; U(l)=%.15g rel %.2g; U(L)=%.15g rel %.2g", eval_steady(s, 0.0),
         origin ? "yes" : "no", eval_steady(s, p.interface), el, eval_steady(s, p.length), eL);
  detail("l=L/2: half-form rel diffs %.2g, %.2g; swap |U_AB(L)-U_BA(L)| = %.2g (< 1e-12)", half_l,
         half_L, swap);
}

struct Criterion4 {
  bool analytic_fdm_ok = false;
};

Criterion4 criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const BarProblem p = fe_pb();
  const GridSpec g = make_grid(p, 0.01, 0.1);
  CompareOptions opts;
  opts.audit_count = 0;
  opts.coefficient_rows = 0;
  const ComparisonReport r = compare_profiles(p, {3600.0, 54000.0}, 100, g, opts);
  const double a1 = r.profiles[0].linf;
  const double a15 = r.profiles[1].linf;
  const double s15 = r.profiles[1].linf_fdm_steady;
  const double series_gap = (r.profiles[1].analytic - r.profiles[1].steady).cwiseAbs().maxCoeff();
  const double secs = seconds_since(t0);
  verdict(4, "oracle triangle on the default grid (Fe-Pb L=1 l=0.3, dx=0.01, dt=0.1, N=100)",
          a1 <= 0.5 && a15 <= 0.5 && s15 <= 0.5);
  detail("analytic-FDM Linf t=1h: %.3g C (<= 0.5) %s", a1, a1 <= 0.5 ? "ok" : "FAIL");
  detail("analytic-FDM Linf t=15h: %.3g C (<= 0.5) %s", a15, a15 <= 0.5 ? "ok" : "FAIL");
  detail("FDM-steady Linf t=15h: %.3g C (<= 0.5) %s", s15, s15 <= 0.5 ? "ok" : "FAIL");
  detail("series-steady Linf t=15h: %.3g C; slowest mode lambda_1^2 alpha_2^2 t = %.3g",
         series_gap,
         std::pow(find_eigenvalues(p, 1)[0].lambda, 2) * p.right.alpha2 * 54000.0);
  detail("coefficients: %s; runtime %.2f s", std::string(to_string(r.method)).c_str(), secs);

  // Same triangle with the (0, l) quadrature coefficients, for reference only.
  CompareOptions q = opts;
  q.method = CoefficientMethod::kQuadrature;
  const ComparisonReport rq = compare_profiles(p, {3600.0}, 100, g, q);
  detail("info: with (0,l) quadrature coefficients analytic-FDM Linf t=1h = %.4g C",
         rq.profiles[0].linf);
  return {a1 <= 0.5 && a15 <= 0.5};
}

void criterion5() {
  bool ok = true;
  const BarProblem fe = fe_pb();
  const StabilityCheck base = check_stability(fe, 0.01, 0.1);
  ok = ok && std::abs(base.threshold - 5e-4) < 1e-18;
  double min_margin = std::numeric_limits<double>::infinity();
  for (const Material& m : builtin_materials()) {
    const StabilityCheck c = check_stability(make_problem(1.0, 0.3, m, m, 10.0, 100.0, 25.0), 0.01, 0.1);
    ok = ok && c.stable();
    min_margin = std::min(min_margin, c.margin);
  }
  const BarProblem ag = fe_pb("Ag", "Ag");
  bool rejected = false;
  try {
    (void)make_grid(ag, 0.01, 0.5);
  } catch (const ConfigError&) {
    rejected = true;
  }
  const GridSpec unstable = make_grid(ag, 0.01, 0.5, false);
  const FtcsScheme scheme(ag, unstable);
  Eigen::VectorXd u = Eigen::VectorXd::Constant(unstable.nodes, ag.ambient), v;
  u[0] = ag.source;
  std::size_t tripped_at = 0;
  try {
    for (std::size_t n = 1; n <= 1000; ++n) {
      tripped_at = n;
      scheme.step_into(u, v);
      u.swap(v);
    }
    tripped_at = 0;
  } catch (const NumericalError&) {
  }
  ok = ok && rejected && tripped_at > 0;
  verdict(5, "stability guard", ok);
  detail("threshold %.3g, all 7 materials stable (smallest margin %.4g), Ag dt=0.5 rejected: %s",
         base.threshold, min_margin, rejected ? "yes" : "no");
  detail("guard bypassed: divergence detected at step %zu (<= 1000)", tripped_at);
}

void criterion6() {
  auto probe_run = [](const BarProblem& p, double t_end) {
    RunOptions o;
    o.probes = {p.interface, p.length};
    o.record_interval = 10.0;
    return run(p, make_grid(p), t_end, o);
  };
  const BarProblem p = fe_pb();
  const FdmRun r = probe_run(p, 54000.0);
  bool ordered = true, monotone = true;
  int unresolved = 0;  // samples where both probes still read exactly Ta in double precision
  for (Eigen::Index i = 1; i < r.probe_values.rows(); ++i) {
    const double ul = r.probe_values(i, 0), uL = r.probe_values(i, 1);
    if (ul == p.ambient) {
      ++unresolved;
      ordered = ordered && uL == p.ambient;
    } else {
      ordered = ordered && ul > uL;
    }
    monotone = monotone && r.probe_values(i, 0) >= r.probe_values(i - 1, 0) &&
               r.probe_values(i, 1) >= r.probe_values(i - 1, 1);
  }
  auto time_to_95 = [&](const BarProblem& q) -> double {
    const FdmRun rr = probe_run(q, 30.0 * 3600.0);
    const double target = q.ambient + 0.95 * (eval_steady(solve_steady(q), q.interface) - q.ambient);
    for (Eigen::Index i = 0; i < rr.probe_values.rows(); ++i) {
      if (rr.probe_values(i, 0) >= target) return rr.times[static_cast<std::size_t>(i)];
    }
    return std::numeric_limits<double>::infinity();
  };
  const double ag_pb = time_to_95(fe_pb("Ag", "Pb"));
  const double pb_ag = time_to_95(fe_pb("Pb", "Ag"));
  verdict(6, "qualitative figure claims", ordered && monotone && ag_pb < pb_ag);
  detail("Fe-Pb L=1 l=0.3, %ld samples every 10 s: U(l,t) > U(L,t): %s (%d early samples with both "
         "probes still exactly Ta); probes non-decreasing: %s",
         static_cast<long>(r.probe_values.rows() - 1), ordered ? "yes" : "no", unresolved,
         monotone ? "yes" : "no");
  detail("time to 95%% of steady interface rise: Ag-Pb %.0f s, Pb-Ag %.0f s", ag_pb, pb_ag);
}

bool criterion7() {
  const BarProblem p = fe_pb();
  const SteadySolution s = solve_steady(p);
  const auto modes = find_eigenvalues(p, 100);
  const AnalyticSolution sol = make_analytic_solution(s, modes, CoefficientMethod::kWeighted);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ux(0.0, p.length), ut(60.0, 54000.0);
  std::uniform_int_distribution<std::size_t> ui(0, 19);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t i = ui(rng);
    worst = std::max(worst, mode_pde_residual(sol, i, ux(rng), ut(rng)));
  }
  const std::vector<Eigenmode> first25(modes.begin(), modes.begin() + 25);
  auto recon = [&](CoefficientMethod m) {
    return std::pair{reconstruction_error(make_analytic_solution(s, first25, m)).left,
                     reconstruction_error(make_analytic_solution(s, modes, m)).left};
  };
  const auto [w25, w100] = recon(CoefficientMethod::kWeighted);
  const auto [q25, q100] = recon(CoefficientMethod::kQuadrature);
  const bool ok = worst < 1e-6 && w100 < w25;
  verdict(7, "series self-consistency", ok);
  detail("per-mode PDE residual at 20 random points: max %.3g (< 1e-6)", worst);
  detail("reconstruction error on (0,l), weighted coefficients: N=25 %.4g, N=100 %.4g", w25, w100);
  detail("info: same with (0,l) quadrature coefficients: N=25 %.4g, N=100 %.4g", q25, q100);
  return ok;
}

void criterion8(bool c4_pipeline, bool c7) {
  const auto rows = compare_coefficients(long_bar(), 10);
  std::printf("       n  lambda          closed_form      quadrature       weighted\n");
  for (const auto& r : rows) {
    std::printf("       %-2zu %-15.10g %-16.10g %-16.10g %-16.10g\n", r.n, r.lambda, r.closed_form,
                r.quadrature, r.weighted);
  }
  const bool ok = rows.size() == 10 && c4_pipeline && c7;
  verdict(8, "coefficient comparison report (Fe-Pb, L=5, l=2, n=1..10)", ok);
  detail("table produced: %s; series pipeline passes analytic-FDM clauses of 4: %s, 7: %s",
         rows.size() == 10 ? "yes" : "no", c4_pipeline ? "yes" : "no", c7 ? "yes" : "no");
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    const Criterion4 c4 = criterion4();
    criterion5();
    criterion6();
    const bool c7 = criterion7();
    criterion8(c4.analytic_fdm_ok, c7);
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
