#pragma once

#include <cstddef>
#include <vector>

#include "heatbar/core.hpp"

namespace heatbar {

/// Discontinuity structure of
///
///   f(x) = atan(tan(alpha l x) / (k alpha)) + (L - l) x,
///
/// which jumps down by pi at x_n = (n - 1/2) pi / (alpha l), n = 1, 2, ...
struct BranchLayout {
  DerivedRatios ratios;
  double l = 0.0;
  double L = 0.0;
  double robin_slope = 0.0;  ///< k2 / h
  std::vector<double> jump_points;

  [[nodiscard]] double alpha_l() const { return ratios.alpha * l; }
  [[nodiscard]] double k_alpha() const { return ratios.kratio * ratios.alpha; }
  [[nodiscard]] double gap() const;
};

/// Layout holding the first `jump_count` discontinuities.
[[nodiscard]] BranchLayout make_branch_layout(const BarProblem& p, std::size_t jump_count);

/// Number of jump points strictly below x.
[[nodiscard]] std::size_t jumps_below(const BranchLayout& layout, double x);

/// Throws NumericalError when x is within 1e-12 (relative) of a jump point.
[[nodiscard]] double f_eval(const BranchLayout& layout, double x);

/// f(x) - atan(-(k2/h) x). Roots of the eigenvalue equation are the points
/// where this equals a positive multiple of pi.
[[nodiscard]] double branch_function(const BranchLayout& layout, double x);

/// Continuous, strictly increasing lift of branch_function: the wrapped value
/// plus pi for every jump point passed. Zero at x = 0; the m-th eigenvalue is
/// the unique point where it equals m pi. Finite at jump points.
[[nodiscard]] double branch_phase(const BranchLayout& layout, double x);

struct EigenEquationSides {
  double lhs = 0.0;  ///< -(k2/h) x
  double rhs = 0.0;  ///< (tan(alpha l x) + k alpha tan((L-l)x)) / (k alpha - tan tan)
};

/// Both sides of the eigenvalue equation; throws NumericalError at singular points.
[[nodiscard]] EigenEquationSides eig_lhs_rhs(const BarProblem& p, double x);

/// One separated mode. X1(x) = sin(lambda1 x) on [0, l] (unit amplitude),
/// X2(x) = A sin(lambda (x - l)) + B cos(lambda (x - l)) on [l, L].
struct Eigenmode {
  std::size_t index = 0;  ///< 1-based
  double lambda = 0.0;    ///< right-segment wavenumber, 1/m
  double lambda1 = 0.0;   ///< alpha * lambda
  double A = 0.0;
  double B = 0.0;
  double residual = 0.0;
  std::size_t branch = 0;          ///< continuity interval of f containing lambda (0-based)
  bool on_jump_point = false;      ///< root coincides with a discontinuity of f
};

/// Interface-matched mode at wavenumber lambda (need not be an eigenvalue).
[[nodiscard]] Eigenmode assemble_mode(const BarProblem& p, std::size_t index, double lambda);

/// Value of the mode shape at x in [0, L].
[[nodiscard]] double mode_shape(const BarProblem& p, const Eigenmode& m, double x);

struct ModeResidual {
  double origin = 0.0;            ///< |X1(0)|
  double value_continuity = 0.0;  ///< |X1(l) - X2(l)| / amp
  double flux_continuity = 0.0;   ///< |k1 X1'(l) - k2 X2'(l)| / ((k1 lambda1 + k2 lambda) amp)
  double robin = 0.0;             ///< |k2 X2'(L) + h X2(L)| / ((k2 lambda + h) amp)
  [[nodiscard]] double max() const;
};

[[nodiscard]] ModeResidual verify_mode(const BarProblem& p, const Eigenmode& m);

/// Interface residuals of the right-segment coefficients written in the
/// unshifted basis A' sin(lambda x) + B' cos(lambda x), for two candidate
/// cosine coefficients: one with a k*alpha factor and one with an l*alpha factor.
struct UnshiftedCoefficientCheck {
  double A = 0.0;
  double B_k_alpha = 0.0;
  double B_l_alpha = 0.0;
  double value_residual_k_alpha = 0.0;
  double flux_residual_k_alpha = 0.0;
  double value_residual_l_alpha = 0.0;
  double flux_residual_l_alpha = 0.0;
};

[[nodiscard]] UnshiftedCoefficientCheck check_unshifted_coefficients(const BarProblem& p,
                                                                     const Eigenmode& m);

struct EigenSearchOptions {
  std::size_t extra_jump_points = 5;  ///< initial range covers count + this many jumps
  double extension_factor = 2.0;
  bool allow_extension = true;
  std::size_t initial_jump_points = 0;  ///< overrides the count-based range when nonzero
};

/// The `count` smallest positive eigenvalues, ascending, with assembled modes.
[[nodiscard]] std::vector<Eigenmode> find_eigenvalues(const BarProblem& p, std::size_t count,
                                                      const EigenSearchOptions& opts = {});

}  // namespace heatbar
