#pragma once

#include <Eigen/Core>

#include "heatbar/core.hpp"

namespace heatbar {

/// Piecewise-linear steady field
///
///   U(x) = F - Q mu x / k1                 0 <= x <= l
///   U(x) = F - Q mu ((x - l)/k2 + l/k1)    l <  x <= L
///
/// with Q = (F - Ta) h, D = k1 k2 + k1 h L + (k2 - k1) h l and mu = k1 k2 / D.
struct SteadySolution {
  BarProblem problem;
  double mu = 0.0;
  double Q = 0.0;
  double D = 0.0;

  [[nodiscard]] double left_slope() const { return -Q * mu / problem.left.k; }
  [[nodiscard]] double right_slope() const { return -Q * mu / problem.right.k; }
};

[[nodiscard]] SteadySolution solve_steady(const BarProblem& p);

/// Steady temperature at x in [0, L]; x == l takes the left branch.
[[nodiscard]] double eval_steady(const SteadySolution& s, double x);

[[nodiscard]] Eigen::VectorXd eval_steady(const SteadySolution& s,
                                          const Eigen::Ref<const Eigen::VectorXd>& xs);

/// Interface temperature when l = L/2, from the reduced closed form.
[[nodiscard]] double interface_temperature_half(const BarProblem& p);

/// Free-end temperature when l = L/2; symmetric in (k1, k2).
[[nodiscard]] double right_end_temperature_half(const BarProblem& p);

}  // namespace heatbar
