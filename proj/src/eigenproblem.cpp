#include "heatbar/eigenproblem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace heatbar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kJumpTolerance = 1e-12;
constexpr double kBracketWidth = 1e-12;
constexpr double kDuplicateRadius = 1e-9;
constexpr double kJumpRootRadius = 1e-10;

// Continuous lift of atan(tan(y) / c) for y >= 0, c > 0. Both angles share a
// quadrant, so the lift stays within pi/2 of y.
double lifted_atan_tan(double y, double c) {
  const double wrapped = std::atan2(std::sin(y), c * std::cos(y));
  return wrapped + 2.0 * kPi * std::round((y - wrapped) / (2.0 * kPi));
}

double jump_point(const BranchLayout& layout, std::size_t n) {
  return (static_cast<double>(n) - 0.5) * layout.gap();
}

}  // namespace

double BranchLayout::gap() const { return kPi / alpha_l(); }

BranchLayout make_branch_layout(const BarProblem& p, std::size_t jump_count) {
  BranchLayout layout;
  layout.ratios = derived_ratios(p);
  layout.l = p.interface;
  layout.L = p.length;
  layout.robin_slope = p.right.k / p.h;
  layout.jump_points.reserve(jump_count);
  for (std::size_t n = 1; n <= jump_count; ++n) layout.jump_points.push_back(jump_point(layout, n));
  return layout;
}

std::size_t jumps_below(const BranchLayout& layout, double x) {
  if (x <= 0.0) return 0;
  // x_n < x  <=>  n < x / gap + 1/2
  const double t = x / layout.gap() + 0.5;
  auto n = static_cast<std::size_t>(std::floor(t));
  if (static_cast<double>(n) == t && n > 0) --n;
  return n;
}

double f_eval(const BranchLayout& layout, double x) {
  if (!(x > 0.0)) throw ConfigError("f_eval requires x > 0");
  const double gap = layout.gap();
  const double n = std::round(x / gap + 0.5);
  const double nearest = (n - 0.5) * gap;
  if (n >= 1.0 && std::abs(x - nearest) <= kJumpTolerance * nearest) {
    std::ostringstream os;
    os.precision(17);
    os << "f_eval: x=" << x << " lies on jump point x_" << static_cast<long>(n) << "=" << nearest;
    throw NumericalError(os.str());
  }
  return std::atan(std::tan(layout.alpha_l() * x) / layout.k_alpha()) + (layout.L - layout.l) * x;
}

double branch_function(const BranchLayout& layout, double x) {
  return f_eval(layout, x) + std::atan(layout.robin_slope * x);
}

double branch_phase(const BranchLayout& layout, double x) {
  return lifted_atan_tan(layout.alpha_l() * x, layout.k_alpha()) + (layout.L - layout.l) * x +
         std::atan(layout.robin_slope * x);
}

EigenEquationSides eig_lhs_rhs(const BarProblem& p, double x) {
  if (!(x > 0.0)) throw ConfigError("eig_lhs_rhs requires x > 0");
  const DerivedRatios r = derived_ratios(p);
  const double k_alpha = r.kratio * r.alpha;
  const double a1 = r.alpha * p.interface * x;
  const double a2 = (p.length - p.interface) * x;
  if (std::abs(std::cos(a1)) < kJumpTolerance || std::abs(std::cos(a2)) < kJumpTolerance) {
    throw NumericalError("eig_lhs_rhs: singular point (tangent argument at pi/2 + m pi)");
  }
  const double t1 = std::tan(a1);
  const double t2 = std::tan(a2);
  const double den = k_alpha - t1 * t2;
  if (std::abs(den) < 1e-12) throw NumericalError("eig_lhs_rhs: singular point (zero denominator)");
  return {-(p.right.k / p.h) * x, (t1 + k_alpha * t2) / den};
}

Eigenmode assemble_mode(const BarProblem& p, std::size_t index, double lambda) {
  const DerivedRatios r = derived_ratios(p);
  Eigenmode m;
  m.index = index;
  m.lambda = lambda;
  m.lambda1 = r.alpha * lambda;
  // Value continuity fixes B, flux continuity fixes A.
  m.B = std::sin(m.lambda1 * p.interface);
  m.A = r.kratio * r.alpha * std::cos(m.lambda1 * p.interface);
  m.residual = verify_mode(p, m).max();
  return m;
}

double mode_shape(const BarProblem& p, const Eigenmode& m, double x) {
  if (x <= p.interface) return std::sin(m.lambda1 * x);
  const double s = m.lambda * (x - p.interface);
  return m.A * std::sin(s) + m.B * std::cos(s);
}

double ModeResidual::max() const {
  return std::max({origin, value_continuity, flux_continuity, robin});
}

ModeResidual verify_mode(const BarProblem& p, const Eigenmode& m) {
  const double k1 = p.left.k;
  const double k2 = p.right.k;
  const double l = p.interface;
  const double amp = std::max(1.0, std::hypot(m.A, m.B));

  const double x1_l = std::sin(m.lambda1 * l);
  const double dx1_l = m.lambda1 * std::cos(m.lambda1 * l);
  const double x2_l = m.B;
  const double dx2_l = m.lambda * m.A;
  const double s = m.lambda * (p.length - l);
  const double x2_L = m.A * std::sin(s) + m.B * std::cos(s);
  const double dx2_L = m.lambda * (m.A * std::cos(s) - m.B * std::sin(s));

  ModeResidual r;
  r.origin = std::abs(std::sin(m.lambda1 * 0.0));
  r.value_continuity = std::abs(x1_l - x2_l) / amp;
  r.flux_continuity = std::abs(k1 * dx1_l - k2 * dx2_l) / ((k1 * m.lambda1 + k2 * m.lambda) * amp);
  r.robin = std::abs(k2 * dx2_L + p.h * x2_L) / ((k2 * m.lambda + p.h) * amp);
  return r;
}

UnshiftedCoefficientCheck check_unshifted_coefficients(const BarProblem& p, const Eigenmode& m) {
  const DerivedRatios r = derived_ratios(p);
  const double l = p.interface;
  const double lam = m.lambda;
  const double c1 = std::cos(m.lambda1 * l);
  const double s1 = std::sin(m.lambda1 * l);
  const double cl = std::cos(lam * l);
  const double sl = std::sin(lam * l);

  UnshiftedCoefficientCheck out;
  out.A = r.kratio * r.alpha * c1 * cl + s1 * sl;
  out.B_k_alpha = s1 * cl - r.kratio * r.alpha * c1 * sl;
  out.B_l_alpha = s1 * cl - l * r.alpha * c1 * sl;

  const double amp = std::max(1.0, std::hypot(out.A, out.B_k_alpha));
  const double flux_scale = (p.left.k * m.lambda1 + p.right.k * lam) * amp;
  auto residuals = [&](double B, double& value, double& flux) {
    const double x2 = out.A * sl + B * cl;
    const double dx2 = lam * (out.A * cl - B * sl);
    value = std::abs(s1 - x2) / amp;
    flux = std::abs(p.left.k * m.lambda1 * c1 - p.right.k * dx2) / flux_scale;
  };
  residuals(out.B_k_alpha, out.value_residual_k_alpha, out.flux_residual_k_alpha);
  residuals(out.B_l_alpha, out.value_residual_l_alpha, out.flux_residual_l_alpha);
  return out;
}

namespace {

// Root of branch_phase(x) = level on [a, b], given phase(a) < level <= phase(b).
double isolate_level(const BranchLayout& layout, double level, double a, double b) {
  auto g = [&](double x) { return branch_phase(layout, x) - level; };
  double ga = g(a);
  double gb = g(b);
  if (gb == 0.0) return b;
  while (b - a > kBracketWidth * (1.0 + a)) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if (gm < 0.0) {
      a = mid;
      ga = gm;
    } else {
      b = mid;
      gb = gm;
    }
  }
  // Secant polish inside the final bracket.
  double best = std::abs(ga) <= std::abs(gb) ? a : b;
  double best_g = std::min(std::abs(ga), std::abs(gb));
  if (gb != ga) {
    const double xs = a - ga * (b - a) / (gb - ga);
    if (xs >= a && xs <= b) {
      const double gs = std::abs(g(xs));
      if (gs <= best_g) best = xs;
    }
  }
  return best;
}

std::vector<Eigenmode> scan(const BarProblem& p, std::size_t count, std::size_t jump_count) {
  const BranchLayout layout = make_branch_layout(p, jump_count);
  std::vector<Eigenmode> modes;
  modes.reserve(count);

  double a = 0.0;
  double phase_a = 0.0;
  std::size_t next_level = 1;
  for (std::size_t branch = 0; branch < layout.jump_points.size() && modes.size() < count;
       ++branch) {
    const double b = layout.jump_points[branch];
    const double phase_b = branch_phase(layout, b);
    // Levels m pi in (phase_a, phase_b]: each interval owns its right endpoint.
    while (modes.size() < count && static_cast<double>(next_level) * kPi <= phase_b) {
      const double level = static_cast<double>(next_level) * kPi;
      if (level > phase_a) {
        const double root = isolate_level(layout, level, a, b);
        Eigenmode m = assemble_mode(p, next_level, root);
        m.branch = branch;
        m.on_jump_point = std::abs(root - b) <= kJumpRootRadius * (1.0 + b);
        modes.push_back(m);
      }
      ++next_level;
    }
    a = b;
    phase_a = phase_b;
  }
  return modes;
}

}  // namespace

std::vector<Eigenmode> find_eigenvalues(const BarProblem& p, std::size_t count,
                                        const EigenSearchOptions& opts) {
  if (count == 0) throw ConfigError("find_eigenvalues: count must be >= 1");
  std::size_t jumps =
      opts.initial_jump_points > 0 ? opts.initial_jump_points : count + opts.extra_jump_points;
  std::vector<Eigenmode> modes = scan(p, count, jumps);
  if (modes.size() < count && opts.allow_extension) {
    jumps = static_cast<std::size_t>(std::ceil(static_cast<double>(jumps) * opts.extension_factor));
    modes = scan(p, count, jumps);
  }
  if (modes.size() < count) {
    std::ostringstream os;
    os << "find_eigenvalues: search bound exhausted (" << modes.size() << " of " << count
       << " roots within " << jumps << " branch intervals)";
    throw NumericalError(os.str());
  }
  for (std::size_t i = 1; i < modes.size(); ++i) {
    if (!(modes[i].lambda - modes[i - 1].lambda > kDuplicateRadius)) {
      throw NumericalError("find_eigenvalues: roots " + std::to_string(i) + " and " +
                           std::to_string(i + 1) + " are not separated");
    }
  }
  return modes;
}

}  // namespace heatbar
