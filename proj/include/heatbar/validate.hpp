#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "heatbar/fdm.hpp"
#include "heatbar/series.hpp"

namespace heatbar {

inline constexpr double kDefaultAgreementTolerance = 0.5;  // °C
inline constexpr double kMinComparisonTime = 60.0;         // s
inline constexpr double kMinSteadyTime = 10.0 * 3600.0;    // s

/// Analytic and FDM fields on the FDM nodes at one time.
struct ProfileComparison {
  double t = 0.0;
  Eigen::VectorXd x;
  Eigen::VectorXd analytic;
  Eigen::VectorXd fdm;
  Eigen::VectorXd steady;
  double linf = 0.0;          ///< max |analytic - fdm|
  double l2 = 0.0;            ///< trapezoidal L2 norm of analytic - fdm, °C sqrt(m)
  double linf_fdm_steady = 0.0;
  double tail_estimate = 0.0;
};

/// Max and trapezoidal L2 norm of a - b on a uniform grid of spacing dx.
struct DiscrepancyNorms {
  double linf = 0.0;
  double l2 = 0.0;
};
[[nodiscard]] DiscrepancyNorms discrepancy(const Eigen::Ref<const Eigen::VectorXd>& a,
                                           const Eigen::Ref<const Eigen::VectorXd>& b, double dx);

struct EigenAuditRow {
  std::size_t n = 0;
  double lambda = 0.0;
  std::size_t branch = 0;
  double residual = 0.0;               ///< verify_mode max
  double flux_residual_k_alpha = 0.0;  ///< unshifted basis, k*alpha cosine coefficient
  double flux_residual_l_alpha = 0.0;  ///< unshifted basis, l*alpha cosine coefficient
  bool on_jump_point = false;
};

/// The eigenvalue equation's constants under two parameterizations: the
/// symbolic one implemented here (alpha = alpha2/alpha1, k = k1/k2, slope k2/h)
/// and the reciprocal one (alpha1/alpha2, k2/k1, slope k1/h).
struct ParameterizationConstants {
  double alpha_l = 0.0;
  double k_alpha = 0.0;
  double robin_slope = 0.0;
  double reciprocal_alpha_l = 0.0;
  double reciprocal_k_alpha = 0.0;
  double reciprocal_robin_slope = 0.0;
};

struct EigenAudit {
  std::vector<EigenAuditRow> rows;
  ParameterizationConstants constants;
  double max_residual = 0.0;
};

[[nodiscard]] ParameterizationConstants parameterization_constants(const BarProblem& p);
[[nodiscard]] EigenAudit audit_eigen(const BarProblem& p, std::size_t count);

struct CoefficientRow {
  std::size_t n = 0;
  double lambda = 0.0;
  double closed_form = 0.0;
  double quadrature = 0.0;
  double weighted = 0.0;
};

[[nodiscard]] std::vector<CoefficientRow> compare_coefficients(const BarProblem& p,
                                                               std::size_t count);

/// Relative heat-equation residual of one summand of the series at (x, t),
/// from centered finite differences: |alpha^2 u_xx - u_t| / (rate |C| amp e^{-rate t}).
/// The branch formula of the side containing x is used across the stencil.
[[nodiscard]] double mode_pde_residual(const AnalyticSolution& sol, std::size_t i, double x,
                                       double t);

struct CompareOptions {
  double tolerance = kDefaultAgreementTolerance;
  CoefficientMethod method = CoefficientMethod::kWeighted;
  InterfaceClosure closure = InterfaceClosure::kHalfCell;
  std::size_t audit_count = 20;
  std::size_t coefficient_rows = 10;
};

struct ComparisonReport {
  std::string config;
  double tolerance = 0.0;
  std::size_t mode_count = 0;
  CoefficientMethod method = CoefficientMethod::kWeighted;
  GridSpec grid;
  std::vector<ProfileComparison> profiles;
  EigenAudit eigen;
  std::vector<CoefficientRow> coefficients;
  std::vector<std::string> notes;

  [[nodiscard]] double worst_linf() const;
  [[nodiscard]] bool within_tolerance() const { return worst_linf() <= tolerance; }
};

/// Analytic vs FDM on the FDM nodes at each t (all t >= 60 s).
[[nodiscard]] ComparisonReport compare_profiles(const BarProblem& p,
                                                const std::vector<double>& t_values,
                                                std::size_t mode_count, const GridSpec& grid,
                                                const CompareOptions& opts = {});

/// Max |FDM(t_long) - U^S| over the grid; t_long >= 10 h.
[[nodiscard]] double steady_consistency(const BarProblem& p, double t_long, const GridSpec& grid,
                                        InterfaceClosure closure = InterfaceClosure::kHalfCell);

/// One-line-per-fact text rendering of a report. No timestamps.
[[nodiscard]] std::string format_report(const ComparisonReport& r);

/// key=value echo of a problem, used in report and CSV headers.
[[nodiscard]] std::string describe(const BarProblem& p);

}  // namespace heatbar
