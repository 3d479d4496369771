#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "heatbar/core.hpp"

namespace heatbar {

inline constexpr double kDefaultDx = 0.01;  // m
inline constexpr double kDefaultDt = 0.1;   // s

struct StabilityCheck {
  double threshold = 0.0;         ///< dx^2 / (2 dt)
  double max_diffusivity = 0.0;   ///< max(alpha1^2, alpha2^2)
  double margin = 0.0;            ///< threshold / max_diffusivity
  [[nodiscard]] bool stable() const { return max_diffusivity < threshold; }
};

/// FTCS stability predicate max(alpha1^2, alpha2^2) < dx^2 / (2 dt).
[[nodiscard]] StabilityCheck check_stability(const BarProblem& p, double dx, double dt);

/// Uniform grid x_j = j dx, j = 0..J, with the interface snapped to node j_l.
struct GridSpec {
  double dx = kDefaultDx;
  double dt = kDefaultDt;
  Eigen::Index nodes = 0;            ///< J + 1
  Eigen::Index interface_index = 0;  ///< j_l
  double snap_distance = 0.0;        ///< |j_l dx - l|

  [[nodiscard]] Eigen::Index last() const { return nodes - 1; }
  [[nodiscard]] Eigen::VectorXd positions() const;
};

/// Throws ConfigError if L is not a whole number of steps (1e-12), if the
/// snapped interface is not an interior node, or (when `require_stable`)
/// if the stability bound fails.
[[nodiscard]] GridSpec make_grid(const BarProblem& p, double dx = kDefaultDx,
                                 double dt = kDefaultDt, bool require_stable = true);

/// Warning text when the interface had to move to reach a node; empty otherwise.
[[nodiscard]] std::string snap_warning(const BarProblem& p, const GridSpec& g);

/// Closure for the node sitting on the interface.
///
/// kHalfCell: energy balance over the two half cells adjoining the node,
///   (c1 + c2)/2 dx dU/dt = k2 (U+ - U)/dx - k1 (U - U-)/dx, c_i = k_i/alpha_i^2.
/// kAlgebraic: U = (k1 U- + k2 U+) / (k1 + k2) after the interior update
///   (first-order one-sided flux matching).
enum class InterfaceClosure { kHalfCell, kAlgebraic };

struct FdmState {
  GridSpec grid;
  double time = 0.0;
  std::size_t steps = 0;
  Eigen::VectorXd temps;
};

/// Ta everywhere except temps[0] = F.
[[nodiscard]] FdmState init_state(const BarProblem& p, const GridSpec& grid);

/// Explicit scheme: centered second differences in space, forward Euler in
/// time, Dirichlet pin at x = 0, ghost-node Robin closure at x = L.
class FtcsScheme {
 public:
  FtcsScheme(const BarProblem& p, const GridSpec& grid,
             InterfaceClosure closure = InterfaceClosure::kHalfCell);

  /// Writes the next time layer of `in` into `out`. Throws NumericalError
  /// (divergence) if any value is non-finite or exceeds 10 (|F| + |Ta|).
  void step_into(const Eigen::VectorXd& in, Eigen::VectorXd& out) const;

  [[nodiscard]] const GridSpec& grid() const { return grid_; }
  [[nodiscard]] double divergence_limit() const { return limit_; }

 private:
  BarProblem problem_;
  GridSpec grid_;
  InterfaceClosure closure_;
  Eigen::VectorXd r_;  ///< alpha^2 dt / dx^2 per node
  double interface_left_ = 0.0;   ///< half-cell weights of the interface node
  double interface_right_ = 0.0;
  double robin_ = 0.0;            ///< 2 dx h / k2
  double limit_ = 0.0;
  bool homogeneous_ = false;
};

[[nodiscard]] FdmState step(const FtcsScheme& scheme, const FdmState& state);

struct RunOptions {
  std::vector<double> probes;      ///< positions, snapped to nearest node
  double record_interval = 0.0;    ///< seconds between probe samples; <= 0: every step
  double snapshot_interval = 0.0;  ///< seconds between full-profile snapshots; <= 0: none
  std::vector<double> capture_times;  ///< extra full profiles at these times
  InterfaceClosure closure = InterfaceClosure::kHalfCell;
};

struct FdmRun {
  std::vector<Eigen::Index> probe_nodes;
  std::vector<double> times;     ///< probe sample times (t = 0 included)
  Eigen::MatrixXd probe_values;  ///< rows: samples, cols: probes
  std::vector<double> snapshot_times;
  std::vector<Eigen::VectorXd> snapshots;
  std::vector<double> capture_times;  ///< actual times of the captured profiles
  std::vector<Eigen::VectorXd> captures;
  FdmState final_state;
  std::vector<std::string> warnings;
};

/// Steps needed to reach t: ceil(t / dt) with a 1e-9 relative slack.
[[nodiscard]] std::size_t steps_for(double t, double dt);

/// Advances ceil(t_end / dt) steps from init_state.
[[nodiscard]] FdmRun run(const BarProblem& p, const GridSpec& grid, double t_end,
                         const RunOptions& opts = {});

}  // namespace heatbar
