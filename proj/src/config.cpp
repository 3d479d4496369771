#include "heatbar/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace heatbar {

namespace {

const std::set<std::string, std::less<>>& known_keys() {
  static const std::set<std::string, std::less<>> keys = {
      "mode",
      "problem.L",
      "problem.l",
      "problem.h",
      "problem.F",
      "problem.Ta",
      "problem.left",
      "problem.left.k",
      "problem.left.alpha2",
      "problem.right",
      "problem.right.k",
      "problem.right.alpha2",
      "materials.file",
      "grid.dx",
      "grid.dt",
      "grid.tmax",
      "grid.record_interval",
      "grid.snapshot_interval",
      "grid.closure",
      "series.modes",
      "series.coefficients",
      "series.times",
      "output.dir",
      "output.probes",
      "output.steady_dx",
      "compare.tolerance",
  };
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string location(std::string_view source, int line) {
  return std::string(source) + ":" + std::to_string(line);
}

double to_double(std::string_view text, const std::string& where) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
    throw ConfigError(where + ": expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::size_t to_count(std::string_view text, const std::string& where) {
  const std::string_view t = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(where + ": expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> to_list(std::string_view text, const std::string& where) {
  std::vector<double> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(to_double(rest.substr(0, comma), where));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s;
}

Material resolve_material(const MaterialRef& ref, std::span<const Material> table,
                          const char* side, std::vector<std::string>& warnings) {
  Material m;
  if (!ref.name.empty()) {
    if (auto found = find_material(table, ref.name)) {
      m = *found;
    } else if (!(ref.k && ref.alpha2)) {
      throw ConfigError(std::string("unknown material '") + ref.name + "' for " + side +
                        " side");
    }
  } else if (!(ref.k && ref.alpha2)) {
    throw ConfigError(std::string("missing material for ") + side +
                      " side (set problem." + side + " or both inline constants)");
  }
  m.name = ref.name.empty() ? std::string("custom_") + side : ref.name;
  if (ref.k) {
    if (m.k != 0.0 && m.k != *ref.k) {
      warnings.push_back(std::string(side) + " material '" + m.name +
                         "': inline k overrides the table value");
    }
    m.k = *ref.k;
  }
  if (ref.alpha2) {
    if (m.alpha2 != 0.0 && m.alpha2 != *ref.alpha2) {
      warnings.push_back(std::string(side) + " material '" + m.name +
                         "': inline alpha2 overrides the table value");
    }
    m.alpha2 = *ref.alpha2;
  }
  return m;
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::kSteady: return "steady";
    case Mode::kEigen: return "eigen";
    case Mode::kAnalytic: return "analytic";
    case Mode::kFdm: return "fdm";
    case Mode::kCompare: return "compare";
  }
  return "unknown";
}

Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::kSteady, Mode::kEigen, Mode::kAnalytic, Mode::kFdm, Mode::kCompare}) {
    if (to_string(m) == s) return m;
  }
  throw ConfigError("unknown mode '" + std::string(s) +
                    "' (expected steady, eigen, analytic, fdm or compare)");
}

std::string_view to_string(InterfaceClosure c) {
  return c == InterfaceClosure::kHalfCell ? "half_cell" : "algebraic";
}

InterfaceClosure parse_closure(std::string_view s) {
  if (s == "half_cell") return InterfaceClosure::kHalfCell;
  if (s == "algebraic") return InterfaceClosure::kAlgebraic;
  throw ConfigError("unknown interface closure '" + std::string(s) +
                    "' (expected half_cell or algebraic)");
}

std::vector<double> RunConfig::probe_positions() const {
  if (!probes.empty()) return probes;
  return {problem.interface, problem.length};
}

ConfigEntries read_config_entries(std::string_view text, std::string_view source) {
  ConfigEntries entries;
  entries.source = std::string(source);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(location(source, line_no) + ": expected 'key = value', got '" +
                        std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!known_keys().contains(key)) {
      throw ConfigError(location(source, line_no) + ": unknown key '" + key + "'");
    }
    if (entries.values.contains(key)) {
      throw ConfigError(location(source, line_no) + ": duplicate key '" + key + "'");
    }
    entries.values.emplace(key, std::make_pair(value, line_no));
  }
  return entries;
}

std::vector<Material> parse_materials(std::string_view text, std::string_view source) {
  std::vector<Material> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = location(source, line_no);
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw ConfigError(where + ": expected 'name,k,alpha2'");
    }
    Material m{std::string(trim(line.substr(0, c1))),
               to_double(line.substr(c1 + 1, c2 - c1 - 1), where),
               to_double(line.substr(c2 + 1), where)};
    if (m.name.empty()) throw ConfigError(where + ": empty material name");
    if (m.k <= 0.0 || m.alpha2 <= 0.0) {
      throw ConfigError(where + ": material constants must be positive");
    }
    out.push_back(std::move(m));
  }
  return out;
}

RunConfig build_config(const ConfigEntries& entries, const ConfigOverrides& overrides,
                       const std::filesystem::path& base_dir) {
  RunConfig c;
  auto get = [&](const std::string& key) -> const std::pair<std::string, int>* {
    auto it = entries.values.find(key);
    return it == entries.values.end() ? nullptr : &it->second;
  };
  auto where = [&](const std::string& key) {
    const auto* e = get(key);
    return location(entries.source, e ? e->second : 0) + " (" + key + ")";
  };
  auto number = [&](const std::string& key, double fallback) {
    const auto* e = get(key);
    return e ? to_double(e->first, where(key)) : fallback;
  };
  auto required = [&](const std::string& key) {
    if (!get(key)) throw ConfigError(entries.source + ": missing required key '" + key + "'");
    return to_double(get(key)->first, where(key));
  };
  auto optional_number = [&](const std::string& key) -> std::optional<double> {
    if (!get(key)) return std::nullopt;
    return to_double(get(key)->first, where(key));
  };

  if (const auto* e = get("mode")) c.mode = parse_mode(e->first);
  if (overrides.mode) c.mode = *overrides.mode;

  if (const auto* e = get("problem.left")) c.left.name = e->first;
  if (const auto* e = get("problem.right")) c.right.name = e->first;
  c.left.k = optional_number("problem.left.k");
  c.left.alpha2 = optional_number("problem.left.alpha2");
  c.right.k = optional_number("problem.right.k");
  c.right.alpha2 = optional_number("problem.right.alpha2");

  std::vector<Material> table = builtin_materials();
  if (const auto* e = get("materials.file")) {
    c.materials_file = e->first;
    std::filesystem::path path = e->first;
    if (path.is_relative()) path = base_dir / path;
    std::ifstream in(path);
    if (!in) throw IoError("cannot read materials file '" + path.string() + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    for (Material& m : parse_materials(ss.str(), path.string())) {
      auto it = std::find_if(table.begin(), table.end(),
                             [&](const Material& t) { return t.name == m.name; });
      if (it != table.end()) {
        c.warnings.push_back("materials file redefines '" + m.name + "'");
        *it = std::move(m);
      } else {
        table.push_back(std::move(m));
      }
    }
  }

  const Material left = resolve_material(c.left, table, "left", c.warnings);
  const Material right = resolve_material(c.right, table, "right", c.warnings);
  c.problem = make_problem(required("problem.L"), required("problem.l"), left, right,
                           required("problem.h"), required("problem.F"), required("problem.Ta"));

  c.dx = overrides.dx.value_or(number("grid.dx", c.dx));
  c.dt = overrides.dt.value_or(number("grid.dt", c.dt));
  c.tmax = overrides.tmax.value_or(number("grid.tmax", c.tmax));
  c.record_interval = number("grid.record_interval", c.record_interval);
  c.snapshot_interval = number("grid.snapshot_interval", c.snapshot_interval);
  if (const auto* e = get("grid.closure")) c.closure = parse_closure(e->first);
  if (!(c.dx > 0.0) || !(c.dt > 0.0)) throw ConfigError("grid.dx and grid.dt must be > 0");
  if (!(c.tmax > 0.0)) throw ConfigError("grid.tmax must be > 0");

  if (const auto* e = get("series.modes")) c.modes = to_count(e->first, where("series.modes"));
  if (overrides.modes) c.modes = *overrides.modes;
  if (const auto* e = get("series.coefficients")) c.coefficients = parse_coefficient_method(e->first);
  if (const auto* e = get("series.times")) c.times = to_list(e->first, where("series.times"));
  for (double t : c.times) {
    if (t < 0.0) throw ConfigError(where("series.times") + ": times must be >= 0");
  }

  if (const auto* e = get("output.probes")) c.probes = to_list(e->first, where("output.probes"));
  for (double x : c.probes) {
    if (x < 0.0 || x > c.problem.length) {
      throw ConfigError(where("output.probes") + ": probe outside [0, L]");
    }
  }
  c.steady_dx = number("output.steady_dx", c.steady_dx);
  if (!(c.steady_dx > 0.0)) throw ConfigError("output.steady_dx must be > 0");
  c.tolerance = number("compare.tolerance", c.tolerance);
  if (const auto* e = get("output.dir")) c.out_dir = e->first;
  if (overrides.out_dir) c.out_dir = *overrides.out_dir;
  return c;
}

RunConfig parse_config_text(std::string_view text, const ConfigOverrides& overrides,
                            const std::filesystem::path& base_dir) {
  return build_config(read_config_entries(text), overrides, base_dir);
}

RunConfig parse_config(const std::filesystem::path& path, const ConfigOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return build_config(read_config_entries(ss.str(), path.string()), overrides,
                      path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

std::string echo(const RunConfig& c) {
  const BarProblem& p = c.problem;
  std::ostringstream os;
  auto kv = [&](std::string_view key, const std::string& value) {
    os << key << " = " << value << "\n";
  };
  kv("mode", std::string(to_string(c.mode)));
  kv("problem.L", format_double(p.length));
  kv("problem.l", format_double(p.interface));
  kv("problem.h", format_double(p.h));
  kv("problem.F", format_double(p.source));
  kv("problem.Ta", format_double(p.ambient));
  // Resolved constants are echoed inline so the echo stands alone.
  kv("problem.left", p.left.name);
  kv("problem.left.k", format_double(p.left.k));
  kv("problem.left.alpha2", format_double(p.left.alpha2));
  kv("problem.right", p.right.name);
  kv("problem.right.k", format_double(p.right.k));
  kv("problem.right.alpha2", format_double(p.right.alpha2));
  kv("grid.dx", format_double(c.dx));
  kv("grid.dt", format_double(c.dt));
  kv("grid.tmax", format_double(c.tmax));
  kv("grid.record_interval", format_double(c.record_interval));
  kv("grid.snapshot_interval", format_double(c.snapshot_interval));
  kv("grid.closure", std::string(to_string(c.closure)));
  kv("series.modes", std::to_string(c.modes));
  kv("series.coefficients", std::string(to_string(c.coefficients)));
  kv("series.times", join(c.times));
  if (!c.probes.empty()) kv("output.probes", join(c.probes));
  kv("output.steady_dx", format_double(c.steady_dx));
  kv("output.dir", c.out_dir.string());
  kv("compare.tolerance", format_double(c.tolerance));
  return os.str();
}

}  // namespace heatbar
