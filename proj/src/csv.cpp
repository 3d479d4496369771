#include "heatbar/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "heatbar/config.hpp"

namespace heatbar {

std::string_view to_string(CsvKind k) {
  switch (k) {
    case CsvKind::kSteadyProfile: return "steady_profile";
    case CsvKind::kEigenvalues: return "eigenvalues";
    case CsvKind::kProbeSeries: return "probe_series";
    case CsvKind::kSpaceTimeField: return "space_time_field";
    case CsvKind::kComparison: return "comparison";
  }
  return "unknown";
}

CsvTable steady_profile_table(const SteadySolution& s, double dx) {
  CsvTable t{CsvKind::kSteadyProfile, {"x", "U"}, {}};
  const double L = s.problem.length;
  const auto n = static_cast<long>(std::llround(L / dx));
  for (long i = 0; i <= n; ++i) {
    const double x = i == n ? L : std::min(L, static_cast<double>(i) * dx);
    t.rows.push_back({x, eval_steady(s, x)});
  }
  return t;
}

CsvTable eigenvalue_table(const AnalyticSolution& sol) {
  CsvTable t{CsvKind::kEigenvalues, {"n", "lambda", "lambda1", "A", "B", "C", "residual", "branch"}, {}};
  for (std::size_t i = 0; i < sol.modes.size(); ++i) {
    const Eigenmode& m = sol.modes[i];
    t.rows.push_back({static_cast<double>(m.index), m.lambda, m.lambda1, m.A, m.B,
                      sol.amplitudes[i], m.residual, static_cast<double>(m.branch)});
  }
  return t;
}

CsvTable probe_series_table(const std::vector<double>& times_s, const Eigen::MatrixXd& values,
                            const std::vector<std::string>& probe_columns) {
  CsvTable t{CsvKind::kProbeSeries, {"t_hours"}, {}};
  t.columns.insert(t.columns.end(), probe_columns.begin(), probe_columns.end());
  for (std::size_t i = 0; i < times_s.size(); ++i) {
    std::vector<double> row{times_s[i] / 3600.0};
    for (Eigen::Index c = 0; c < values.cols(); ++c) row.push_back(values(static_cast<Eigen::Index>(i), c));
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable space_time_table(const std::vector<double>& times_s, const Eigen::VectorXd& x,
                          const std::vector<Eigen::VectorXd>& fields) {
  CsvTable t{CsvKind::kSpaceTimeField, {"t", "x", "U"}, {}};
  for (std::size_t i = 0; i < times_s.size(); ++i) {
    for (Eigen::Index j = 0; j < x.size(); ++j) t.rows.push_back({times_s[i] / 3600.0, x[j], fields[i][j]});
  }
  return t;
}

CsvTable comparison_table(const ComparisonReport& r) {
  CsvTable t{CsvKind::kComparison, {"t", "x", "analytic", "fdm", "abs_diff", "steady"}, {}};
  for (const auto& pc : r.profiles) {
    for (Eigen::Index j = 0; j < pc.x.size(); ++j) {
      t.rows.push_back({pc.t, pc.x[j], pc.analytic[j], pc.fdm[j],
                        std::abs(pc.analytic[j] - pc.fdm[j]), pc.steady[j]});
    }
  }
  return t;
}

std::vector<std::string> probe_columns(const BarProblem& p, const std::vector<double>& probes) {
  std::vector<std::string> cols;
  for (double x : probes) {
    if (x == p.interface) {
      cols.push_back("U_at_l");
    } else if (x == p.length) {
      cols.push_back("U_at_L");
    } else {
      cols.push_back("U_at_" + format_double(x));
    }
  }
  return cols;
}

std::string format_csv(const CsvTable& t, std::string_view header) {
  std::string out;
  std::size_t pos = 0;
  while (pos < header.size()) {
    const auto nl = header.find('\n', pos);
    const auto line = header.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    out += "# ";
    out += line;
    out += '\n';
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::filesystem::path emit_csv(const CsvTable& t, std::string_view header,
                               const std::filesystem::path& dir) {
  const std::filesystem::path path = dir / (std::string(to_string(t.kind)) + ".csv");
  write_text(path, format_csv(t, header));
  return path;
}

}  // namespace heatbar
