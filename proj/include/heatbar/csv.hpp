#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "heatbar/fdm.hpp"
#include "heatbar/series.hpp"
#include "heatbar/validate.hpp"

namespace heatbar {

enum class CsvKind { kSteadyProfile, kEigenvalues, kProbeSeries, kSpaceTimeField, kComparison };

[[nodiscard]] std::string_view to_string(CsvKind k);

struct CsvTable {
  CsvKind kind = CsvKind::kSteadyProfile;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// x,U sampled every `dx` from 0 to L inclusive.
[[nodiscard]] CsvTable steady_profile_table(const SteadySolution& s, double dx);

/// n,lambda,lambda1,A,B,C,residual,branch
[[nodiscard]] CsvTable eigenvalue_table(const AnalyticSolution& sol);

/// t_hours followed by one column per probe (U_at_l, U_at_L for the default probes).
[[nodiscard]] CsvTable probe_series_table(const std::vector<double>& times_s,
                                          const Eigen::MatrixXd& values,
                                          const std::vector<std::string>& probe_columns);

/// Long format t,x,U (t in hours), one row per (snapshot, node).
[[nodiscard]] CsvTable space_time_table(const std::vector<double>& times_s,
                                        const Eigen::VectorXd& x,
                                        const std::vector<Eigen::VectorXd>& fields);

/// t,x,analytic,fdm,abs_diff,steady (t in seconds).
[[nodiscard]] CsvTable comparison_table(const ComparisonReport& r);

/// Column names for probe positions; l and L get the short names.
[[nodiscard]] std::vector<std::string> probe_columns(const BarProblem& p,
                                                     const std::vector<double>& probes);

/// Comment header ('# ' per line), column row, then rows in shortest
/// round-trip decimal form, '\n' line endings.
[[nodiscard]] std::string format_csv(const CsvTable& t, std::string_view header);

/// Writes `<dir>/<kind>.csv`; throws IoError if the file cannot be written.
std::filesystem::path emit_csv(const CsvTable& t, std::string_view header,
                               const std::filesystem::path& dir);

/// Writes text to a file, creating parent directories. Throws IoError.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace heatbar
