#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heatbar/core.hpp"
#include "heatbar/fdm.hpp"
#include "heatbar/format.hpp"
#include "heatbar/series.hpp"

namespace heatbar {

inline constexpr std::string_view kVersion = "heatbar 0.1.0";

enum class Mode { kSteady, kEigen, kAnalytic, kFdm, kCompare };

[[nodiscard]] std::string_view to_string(Mode m);
[[nodiscard]] Mode parse_mode(std::string_view s);
[[nodiscard]] std::string_view to_string(InterfaceClosure c);
[[nodiscard]] InterfaceClosure parse_closure(std::string_view s);

/// Named material, optionally with inline constants that win over the table.
struct MaterialRef {
  std::string name;
  std::optional<double> k;
  std::optional<double> alpha2;
};

struct RunConfig {
  Mode mode = Mode::kCompare;
  BarProblem problem;
  MaterialRef left;
  MaterialRef right;
  std::string materials_file;

  double dx = kDefaultDx;
  double dt = kDefaultDt;
  double tmax = 15.0 * 3600.0;
  double record_interval = 60.0;
  double snapshot_interval = 600.0;
  InterfaceClosure closure = InterfaceClosure::kHalfCell;

  std::size_t modes = kDefaultModeCount;
  CoefficientMethod coefficients = CoefficientMethod::kWeighted;
  std::vector<double> times = {3600.0, 15.0 * 3600.0};

  std::vector<double> probes;  ///< empty: {l, L}
  double steady_dx = 0.001;
  double tolerance = 0.5;
  std::filesystem::path out_dir = ".";

  std::vector<std::string> warnings;

  [[nodiscard]] std::vector<double> probe_positions() const;
};

/// Raw key=value entries with their source line numbers.
struct ConfigEntries {
  std::map<std::string, std::pair<std::string, int>> values;
  std::string source = "<string>";
};

/// Flat `key = value` text; '#' starts a comment; blank lines ignored.
/// Throws ConfigError (malformed line, duplicate or unknown key) with location.
[[nodiscard]] ConfigEntries read_config_entries(std::string_view text,
                                                std::string_view source = "<string>");

/// Material lines `name,k,alpha2` (SI), '#' comments. Throws ConfigError.
[[nodiscard]] std::vector<Material> parse_materials(std::string_view text,
                                                    std::string_view source = "<string>");

/// Command-line values that override the file.
struct ConfigOverrides {
  std::optional<Mode> mode;
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::size_t> modes;
  std::optional<double> dx;
  std::optional<double> dt;
  std::optional<double> tmax;
};

/// Builds and validates a RunConfig from entries. `base_dir` resolves a
/// relative materials.file. Throws ConfigError / IoError.
[[nodiscard]] RunConfig build_config(const ConfigEntries& entries,
                                     const ConfigOverrides& overrides = {},
                                     const std::filesystem::path& base_dir = ".");

[[nodiscard]] RunConfig parse_config_text(std::string_view text,
                                          const ConfigOverrides& overrides = {},
                                          const std::filesystem::path& base_dir = ".");

/// Reads a config file; unreadable files raise IoError.
[[nodiscard]] RunConfig parse_config(const std::filesystem::path& path,
                                     const ConfigOverrides& overrides = {});

/// Canonical key=value rendering; parse_config_text(echo(c)) reproduces c.
[[nodiscard]] std::string echo(const RunConfig& c);

}  // namespace heatbar
