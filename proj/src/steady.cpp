#include "heatbar/steady.hpp"

#include <cmath>
#include <sstream>

namespace heatbar {

namespace {

void require_midpoint(const BarProblem& p, const char* what) {
  if (std::abs(p.interface - 0.5 * p.length) > 1e-12 * p.length) {
    std::ostringstream os;
    os << what << " requires l = L/2 (got l=" << p.interface << ", L=" << p.length << ")";
    throw ConfigError(os.str());
  }
}

}  // namespace

SteadySolution solve_steady(const BarProblem& p) {
  const double k1 = p.left.k;
  const double k2 = p.right.k;
  const double D = k1 * k2 + k1 * p.h * p.length + (k2 - k1) * p.h * p.interface;
  return SteadySolution{p, k1 * k2 / D, (p.source - p.ambient) * p.h, D};
}

double eval_steady(const SteadySolution& s, double x) {
  const BarProblem& p = s.problem;
  if (!(x >= 0.0 && x <= p.length)) {
    std::ostringstream os;
    os << "eval_steady: x=" << x << " outside [0, " << p.length << "]";
    throw ConfigError(os.str());
  }
  if (x <= p.interface) return p.source - s.Q * s.mu * x / p.left.k;
  return p.source - s.Q * s.mu * ((x - p.interface) / p.right.k + p.interface / p.left.k);
}

Eigen::VectorXd eval_steady(const SteadySolution& s,
                            const Eigen::Ref<const Eigen::VectorXd>& xs) {
  return xs.unaryExpr([&s](double x) { return eval_steady(s, x); });
}

double interface_temperature_half(const BarProblem& p) {
  require_midpoint(p, "interface_temperature_half");
  const double k1 = p.left.k;
  const double k2 = p.right.k;
  return p.source - (p.source - p.ambient) / ((k1 / k2 + 1.0) + 2.0 * k1 / (p.h * p.length));
}

double right_end_temperature_half(const BarProblem& p) {
  require_midpoint(p, "right_end_temperature_half");
  const double k1 = p.left.k;
  const double k2 = p.right.k;
  return p.source -
         (p.source - p.ambient) / (1.0 + 2.0 * k1 * k2 / (p.h * p.length * (k1 + k2)));
}

}  // namespace heatbar
