#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "heatbar/eigenproblem.hpp"
#include "heatbar/steady.hpp"

namespace heatbar {

/// How the Fourier amplitudes C_n are obtained.
///
/// kWeighted projects Ta - U^S onto each mode over the whole bar with the
/// heat-capacity weight rho*c = k/alpha2 of each segment, under which the
/// composite modes are orthogonal. kQuadrature evaluates the ratio
/// int_0^l (Ta - U^S) sin(alpha lambda x) / int_0^l sin^2(alpha lambda x)
/// numerically; kClosedForm is the closed-form expression for that ratio as
/// published, kept for comparison.
enum class CoefficientMethod { kWeighted, kQuadrature, kClosedForm };

[[nodiscard]] std::string_view to_string(CoefficientMethod m);
/// Throws ConfigError on an unknown name.
[[nodiscard]] CoefficientMethod parse_coefficient_method(std::string_view name);

[[nodiscard]] double coefficient_closed_form(const SteadySolution& s, const Eigenmode& m);
[[nodiscard]] double coefficient_quadrature(const SteadySolution& s, const Eigenmode& m);
[[nodiscard]] double coefficient_weighted(const SteadySolution& s, const Eigenmode& m);
[[nodiscard]] double coefficient(const SteadySolution& s, const Eigenmode& m,
                                 CoefficientMethod method);

/// U(x,t) = U^S(x) + sum_n C_n X_n(x) exp(-lambda_n^2 alpha2^2 t), truncated.
struct AnalyticSolution {
  SteadySolution steady;
  std::vector<Eigenmode> modes;
  std::vector<double> amplitudes;  ///< C_n, aligned with modes
  CoefficientMethod method = CoefficientMethod::kWeighted;

  [[nodiscard]] std::size_t truncation() const { return modes.size(); }
  [[nodiscard]] double decay_rate(std::size_t i) const {
    return modes[i].lambda * modes[i].lambda * steady.problem.right.alpha2;
  }
};

inline constexpr std::size_t kDefaultModeCount = 100;

/// Finds `mode_count` eigenvalues (zero allowed: steady field only) and
/// attaches amplitudes.
[[nodiscard]] AnalyticSolution make_analytic_solution(
    const BarProblem& p, std::size_t mode_count = kDefaultModeCount,
    CoefficientMethod method = CoefficientMethod::kWeighted);

[[nodiscard]] AnalyticSolution make_analytic_solution(const SteadySolution& s,
                                                      std::vector<Eigenmode> modes,
                                                      CoefficientMethod method);

/// Transient perturbation phi(x, t); x == l uses the left branch.
[[nodiscard]] double eval_transient(const AnalyticSolution& sol, double x, double t);

[[nodiscard]] double eval_solution(const AnalyticSolution& sol, double x, double t);

[[nodiscard]] Eigen::VectorXd eval_solution(const AnalyticSolution& sol,
                                            const Eigen::Ref<const Eigen::VectorXd>& xs,
                                            double t);

/// Heuristic size of the discarded tail at time t, extrapolating the last
/// retained term geometrically. +inf at t = 0.
[[nodiscard]] double truncation_tail_estimate(const AnalyticSolution& sol, double t);

/// The series does not converge uniformly at t = 0; values there are diagnostics.
[[nodiscard]] inline bool is_diagnostic_time(double t) { return t <= 0.0; }

struct ReconstructionError {
  double left = 0.0;   ///< || U(., 0) - Ta ||_2 over (0, l)
  double right = 0.0;  ///< same over (l, L)
};

[[nodiscard]] ReconstructionError reconstruction_error(const AnalyticSolution& sol,
                                                       std::size_t intervals = 1000);

}  // namespace heatbar
