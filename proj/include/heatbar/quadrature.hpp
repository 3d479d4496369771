#pragma once

#include <functional>

namespace heatbar {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Converged when the summed error estimate is below
/// max(abs_tol, rel_tol * |integral|). Throws NumericalError otherwise.
[[nodiscard]] QuadratureResult integrate(const std::function<double(double)>& f, double a,
                                         double b, double rel_tol = 1e-10,
                                         double abs_tol = 1e-300, int max_intervals = 4000);

}  // namespace heatbar
