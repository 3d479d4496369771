#include "heatbar/series.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "heatbar/quadrature.hpp"

namespace heatbar {

namespace {

constexpr double kQuadratureTolerance = 1e-10;

void check_domain(const AnalyticSolution& sol, double x, double t) {
  const double L = sol.steady.problem.length;
  if (!(x >= 0.0 && x <= L) || !(t >= 0.0)) {
    std::ostringstream os;
    os << "series evaluation outside domain: x=" << x << " (need [0, " << L << "]), t=" << t
       << " (need >= 0)";
    throw ConfigError(os.str());
  }
}

double amplitude_scale(const SteadySolution& s) {
  return std::max(std::abs(s.problem.source - s.problem.ambient), 1.0) * s.problem.length;
}

}  // namespace

std::string_view to_string(CoefficientMethod m) {
  switch (m) {
    case CoefficientMethod::kWeighted: return "weighted";
    case CoefficientMethod::kQuadrature: return "quadrature";
    case CoefficientMethod::kClosedForm: return "closed_form";
  }
  return "unknown";
}

CoefficientMethod parse_coefficient_method(std::string_view name) {
  if (name == "weighted") return CoefficientMethod::kWeighted;
  if (name == "quadrature") return CoefficientMethod::kQuadrature;
  if (name == "closed_form") return CoefficientMethod::kClosedForm;
  throw ConfigError("unknown coefficient method '" + std::string(name) +
                    "' (expected weighted, quadrature or closed_form)");
}

double coefficient_closed_form(const SteadySolution& s, const Eigenmode& m) {
  const BarProblem& p = s.problem;
  const double l = p.interface;
  const double a = m.lambda1;
  const double al = a * l;
  const double den = al - std::sin(al) * std::cos(al);
  if (std::abs(den) < 1e-14) throw NumericalError("coefficient_closed_form: degenerate denominator");
  const double mu_h_k2 = s.mu * p.h / p.right.k;
  const double num = -std::sin(al) / a * mu_h_k2 + std::cos(al) * (-1.0 + mu_h_k2 * l) + 1.0;
  return 2.0 * (p.ambient - p.source) * num / den;
}

double coefficient_quadrature(const SteadySolution& s, const Eigenmode& m) {
  const BarProblem& p = s.problem;
  const double l = p.interface;
  const double abs_tol = 1e-13 * amplitude_scale(s);
  const auto num = integrate(
      [&](double x) { return (p.ambient - eval_steady(s, x)) * std::sin(m.lambda1 * x); }, 0.0, l,
      kQuadratureTolerance, abs_tol);
  const auto den = integrate(
      [&](double x) {
        const double v = std::sin(m.lambda1 * x);
        return v * v;
      },
      0.0, l, kQuadratureTolerance, 1e-300);
  return num.value / den.value;
}

double coefficient_weighted(const SteadySolution& s, const Eigenmode& m) {
  const BarProblem& p = s.problem;
  const double l = p.interface;
  const double w1 = p.left.heat_capacity();
  const double w2 = p.right.heat_capacity();
  const double abs_tol = 1e-13 * amplitude_scale(s);
  auto perturbation = [&](double x) {
    return (p.ambient - eval_steady(s, x)) * mode_shape(p, m, x);
  };
  auto square = [&](double x) {
    const double v = mode_shape(p, m, x);
    return v * v;
  };
  // The right-branch integrals start just past l so mode_shape and
  // eval_steady use their right-hand formulas throughout.
  const double lr = std::nextafter(l, p.length);
  const double num = w1 * integrate(perturbation, 0.0, l, kQuadratureTolerance, abs_tol).value +
                     w2 * integrate(perturbation, lr, p.length, kQuadratureTolerance, abs_tol).value;
  const double den = w1 * integrate(square, 0.0, l, kQuadratureTolerance, 1e-300).value +
                     w2 * integrate(square, lr, p.length, kQuadratureTolerance, 1e-300).value;
  return num / den;
}

double coefficient(const SteadySolution& s, const Eigenmode& m, CoefficientMethod method) {
  switch (method) {
    case CoefficientMethod::kWeighted: return coefficient_weighted(s, m);
    case CoefficientMethod::kQuadrature: return coefficient_quadrature(s, m);
    case CoefficientMethod::kClosedForm: return coefficient_closed_form(s, m);
  }
  throw ConfigError("unknown coefficient method");
}

AnalyticSolution make_analytic_solution(const SteadySolution& s, std::vector<Eigenmode> modes,
                                        CoefficientMethod method) {
  AnalyticSolution sol{s, std::move(modes), {}, method};
  sol.amplitudes.reserve(sol.modes.size());
  for (const Eigenmode& m : sol.modes) {
    const double c = coefficient(s, m, method);
    if (!std::isfinite(c)) {
      throw NumericalError("non-finite amplitude for mode " + std::to_string(m.index));
    }
    sol.amplitudes.push_back(c);
  }
  return sol;
}

AnalyticSolution make_analytic_solution(const BarProblem& p, std::size_t mode_count,
                                        CoefficientMethod method) {
  std::vector<Eigenmode> modes;
  if (mode_count > 0) modes = find_eigenvalues(p, mode_count);
  return make_analytic_solution(solve_steady(p), std::move(modes), method);
}

double eval_transient(const AnalyticSolution& sol, double x, double t) {
  check_domain(sol, x, t);
  const BarProblem& p = sol.steady.problem;
  double sum = 0.0;
  for (std::size_t i = 0; i < sol.modes.size(); ++i) {
    sum += sol.amplitudes[i] * mode_shape(p, sol.modes[i], x) * std::exp(-sol.decay_rate(i) * t);
  }
  return sum;
}

double eval_solution(const AnalyticSolution& sol, double x, double t) {
  return eval_steady(sol.steady, x) + eval_transient(sol, x, t);
}

Eigen::VectorXd eval_solution(const AnalyticSolution& sol,
                              const Eigen::Ref<const Eigen::VectorXd>& xs, double t) {
  return xs.unaryExpr([&](double x) { return eval_solution(sol, x, t); });
}

double truncation_tail_estimate(const AnalyticSolution& sol, double t) {
  const std::size_t n = sol.modes.size();
  if (n == 0) return t > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  if (t <= 0.0) return std::numeric_limits<double>::infinity();
  const Eigenmode& last = sol.modes.back();
  const double amp = std::max(1.0, std::hypot(last.A, last.B));
  const double last_term = std::abs(sol.amplitudes.back()) * amp * std::exp(-sol.decay_rate(n - 1) * t);
  const double spacing = n > 1 ? (last.lambda - sol.modes.front().lambda) / double(n - 1)
                               : sol.modes.front().lambda;
  const double q = std::exp(-2.0 * last.lambda * spacing * sol.steady.problem.right.alpha2 * t);
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return last_term * q / (1.0 - q);
}

ReconstructionError reconstruction_error(const AnalyticSolution& sol, std::size_t intervals) {
  const BarProblem& p = sol.steady.problem;
  auto l2 = [&](double a, double b) {
    const double h = (b - a) / static_cast<double>(intervals);
    double acc = 0.0;
    for (std::size_t i = 0; i <= intervals; ++i) {
      const double x = i == intervals ? b : a + h * static_cast<double>(i);
      const double e = eval_solution(sol, x, 0.0) - p.ambient;
      acc += (i == 0 || i == intervals ? 0.5 : 1.0) * e * e;
    }
    return std::sqrt(acc * h);
  };
  // Start the right interval just past l so it samples the right branch.
  return {l2(0.0, p.interface), l2(std::nextafter(p.interface, p.length), p.length)};
}

}  // namespace heatbar
