#include "heatbar/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace heatbar {

StabilityCheck check_stability(const BarProblem& p, double dx, double dt) {
  if (!(dx > 0.0) || !(dt > 0.0)) throw ConfigError("grid steps must satisfy dx > 0, dt > 0");
  StabilityCheck c;
  c.threshold = dx * dx / (2.0 * dt);
  c.max_diffusivity = std::max(p.left.alpha2, p.right.alpha2);
  c.margin = c.threshold / c.max_diffusivity;
  return c;
}

Eigen::VectorXd GridSpec::positions() const {
  Eigen::VectorXd x(nodes);
  for (Eigen::Index j = 0; j < nodes; ++j) x[j] = static_cast<double>(j) * dx;
  return x;
}

GridSpec make_grid(const BarProblem& p, double dx, double dt, bool require_stable) {
  const StabilityCheck stab = check_stability(p, dx, dt);
  if (require_stable && !stab.stable()) {
    std::ostringstream os;
    os << "unstable grid: max diffusivity " << stab.max_diffusivity
       << " >= dx^2/(2 dt) = " << stab.threshold;
    throw ConfigError(os.str());
  }
  const double cells = std::round(p.length / dx);
  if (cells < 2.0 || std::abs(cells * dx - p.length) > 1e-12 * std::max(1.0, p.length)) {
    std::ostringstream os;
    os << "dx=" << dx << " does not divide L=" << p.length << " into a whole number of cells";
    throw ConfigError(os.str());
  }
  GridSpec g;
  g.dx = dx;
  g.dt = dt;
  g.nodes = static_cast<Eigen::Index>(cells) + 1;
  g.interface_index = static_cast<Eigen::Index>(std::round(p.interface / dx));
  g.snap_distance = std::abs(static_cast<double>(g.interface_index) * dx - p.interface);
  if (g.interface_index < 1 || g.interface_index > g.last() - 1) {
    throw ConfigError("interface does not fall on an interior grid node; refine dx");
  }
  return g;
}

std::string snap_warning(const BarProblem& p, const GridSpec& g) {
  if (g.snap_distance <= 1e-12) return {};
  std::ostringstream os;
  os.precision(17);
  os << "interface l=" << p.interface << " snapped to node " << g.interface_index << " (x="
     << static_cast<double>(g.interface_index) * g.dx << ", distance " << g.snap_distance << ")";
  return os.str();
}

FdmState init_state(const BarProblem& p, const GridSpec& grid) {
  if (!check_stability(p, grid.dx, grid.dt).stable()) {
    throw ConfigError("init_state: grid violates the stability bound");
  }
  FdmState s{grid, 0.0, 0, Eigen::VectorXd::Constant(grid.nodes, p.ambient)};
  s.temps[0] = p.source;
  return s;
}

FtcsScheme::FtcsScheme(const BarProblem& p, const GridSpec& grid, InterfaceClosure closure)
    : problem_(p), grid_(grid), closure_(closure) {
  const double inv_dx2 = 1.0 / (grid.dx * grid.dx);
  r_.resize(grid.nodes);
  for (Eigen::Index j = 0; j < grid.nodes; ++j) {
    const double alpha2 = j < grid.interface_index ? p.left.alpha2 : p.right.alpha2;
    r_[j] = alpha2 * grid.dt * inv_dx2;
  }
  const double capacity = 0.5 * (p.left.heat_capacity() + p.right.heat_capacity());
  interface_left_ = p.left.k * grid.dt * inv_dx2 / capacity;
  interface_right_ = p.right.k * grid.dt * inv_dx2 / capacity;
  robin_ = 2.0 * grid.dx * p.h / p.right.k;
  limit_ = 10.0 * (std::abs(p.source) + std::abs(p.ambient));
  homogeneous_ = is_homogeneous(p);
}

void FtcsScheme::step_into(const Eigen::VectorXd& in, Eigen::VectorXd& out) const {
  const Eigen::Index J = grid_.last();
  const Eigen::Index jl = grid_.interface_index;
  out.resize(in.size());

  out[0] = problem_.source;
  const Eigen::Index n = J - 1;
  out.segment(1, n) = in.segment(1, n).array() +
                      r_.segment(1, n).array() *
                          (in.segment(2, n) - 2.0 * in.segment(1, n) + in.segment(0, n)).array();

  // Ghost node U_{J+1} = U_{J-1} - (2 dx h / k2)(U_J - Ta).
  const double ghost = in[J - 1] - robin_ * (in[J] - problem_.ambient);
  out[J] = in[J] + r_[J] * (ghost - 2.0 * in[J] + in[J - 1]);

  if (!homogeneous_) {
    if (closure_ == InterfaceClosure::kHalfCell) {
      out[jl] = in[jl] + interface_right_ * (in[jl + 1] - in[jl]) -
                interface_left_ * (in[jl] - in[jl - 1]);
    } else {
      const double k1 = problem_.left.k;
      const double k2 = problem_.right.k;
      out[jl] = (k1 * out[jl - 1] + k2 * out[jl + 1]) / (k1 + k2);
    }
  }

  for (Eigen::Index j = 0; j <= J; ++j) {
    if (!std::isfinite(out[j]) || std::abs(out[j]) > limit_) {
      std::ostringstream os;
      os << "FDM divergence at node " << j << " (value " << out[j] << ", limit " << limit_
         << ")";
      throw NumericalError(os.str());
    }
  }
}

FdmState step(const FtcsScheme& scheme, const FdmState& state) {
  FdmState next{state.grid, 0.0, state.steps + 1, {}};
  scheme.step_into(state.temps, next.temps);
  next.time = static_cast<double>(next.steps) * state.grid.dt;
  return next;
}

std::size_t steps_for(double t, double dt) {
  if (t <= 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(t / dt * (1.0 - 1e-9)));
}

FdmRun run(const BarProblem& p, const GridSpec& grid, double t_end, const RunOptions& opts) {
  if (!(t_end > 0.0)) throw ConfigError("run: t_end must be > 0");
  FdmRun out;
  if (std::string w = snap_warning(p, grid); !w.empty()) out.warnings.push_back(std::move(w));

  const FtcsScheme scheme(p, grid, opts.closure);
  FdmState state = init_state(p, grid);
  const std::size_t total = steps_for(t_end, grid.dt);

  for (double x : opts.probes) {
    if (!(x >= 0.0 && x <= p.length)) throw ConfigError("probe outside the bar");
    out.probe_nodes.push_back(
        std::clamp<Eigen::Index>(static_cast<Eigen::Index>(std::round(x / grid.dx)), 0, grid.last()));
  }
  const std::size_t record_stride =
      opts.record_interval > 0.0 ? std::max<std::size_t>(1, steps_for(opts.record_interval, grid.dt)) : 1;
  const std::size_t snapshot_stride =
      opts.snapshot_interval > 0.0 ? std::max<std::size_t>(1, steps_for(opts.snapshot_interval, grid.dt)) : 0;
  std::vector<std::size_t> capture_steps;
  for (double t : opts.capture_times) capture_steps.push_back(steps_for(t, grid.dt));

  std::vector<double> samples;
  auto record = [&](const FdmState& s) {
    out.times.push_back(s.time);
    for (Eigen::Index node : out.probe_nodes) samples.push_back(s.temps[node]);
  };
  auto observe = [&](const FdmState& s) {
    if (s.steps % record_stride == 0 || s.steps == total) record(s);
    if (snapshot_stride > 0 && (s.steps % snapshot_stride == 0 || s.steps == total)) {
      out.snapshot_times.push_back(s.time);
      out.snapshots.push_back(s.temps);
    }
    for (std::size_t c : capture_steps) {
      if (c == s.steps) {
        out.capture_times.push_back(s.time);
        out.captures.push_back(s.temps);
      }
    }
  };

  observe(state);
  Eigen::VectorXd next(grid.nodes);
  for (std::size_t n = 1; n <= total; ++n) {
    scheme.step_into(state.temps, next);
    state.temps.swap(next);
    state.steps = n;
    state.time = static_cast<double>(n) * grid.dt;
    observe(state);
  }
  out.final_state = std::move(state);

  const auto cols = static_cast<Eigen::Index>(out.probe_nodes.size());
  const auto rows = static_cast<Eigen::Index>(out.times.size());
  out.probe_values.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index c = 0; c < cols; ++c) out.probe_values(i, c) = samples[i * cols + c];
  return out;
}

}  // namespace heatbar
