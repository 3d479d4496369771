#include "heatbar/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace heatbar {

const std::vector<Material>& builtin_materials() {
  // Diffusivities tabulated in units of 1e-4 m^2/s.
  static const std::vector<Material> table = {
      {"Pb", 35.0, 0.23673e-4},  {"Ni", 70.0, 0.22660e-4},  {"Fe", 73.0, 0.20451e-4},
      {"Mg", 156.0, 0.88300e-4}, {"Al", 204.0, 0.84010e-4}, {"Cu", 386.0, 1.12530e-4},
      {"Ag", 419.0, 1.70140e-4},
  };
  return table;
}

std::optional<Material> find_material(std::span<const Material> table, std::string_view name) {
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const Material& m) { return m.name == name; });
  if (it == table.end()) return std::nullopt;
  return *it;
}

namespace {

[[noreturn]] void fail(ProblemFault fault, const std::string& msg) {
  throw InvalidProblem(fault, msg);
}

void check_material(const Material& m, const char* side) {
  if (!std::isfinite(m.k) || !std::isfinite(m.alpha2)) {
    fail(ProblemFault::kNonFinite, std::string(side) + " material has non-finite constants");
  }
  if (m.k <= 0.0) {
    std::ostringstream os;
    os << side << " material '" << m.name << "': conductivity must be > 0 (got " << m.k << ")";
    fail(ProblemFault::kNonPositiveConductivity, os.str());
  }
  if (m.alpha2 <= 0.0) {
    std::ostringstream os;
    os << side << " material '" << m.name << "': diffusivity must be > 0 (got " << m.alpha2
       << ")";
    fail(ProblemFault::kNonPositiveDiffusivity, os.str());
  }
}

BarProblem build(double length, double interface, const Material& left, const Material& right,
                 double h, double source, double ambient, bool require_heating) {
  for (double v : {length, interface, h, source, ambient}) {
    if (!std::isfinite(v)) fail(ProblemFault::kNonFinite, "problem parameters must be finite");
  }
  if (length <= 0.0) fail(ProblemFault::kNonPositiveLength, "bar length must satisfy L > 0");
  if (interface <= 0.0) fail(ProblemFault::kInterfaceNotPositive, "interface must satisfy l > 0");
  if (interface >= length) {
    fail(ProblemFault::kInterfaceNotBeforeEnd, "interface must satisfy l < L");
  }
  if (h <= 0.0) fail(ProblemFault::kNonPositiveH, "heat-transfer coefficient must satisfy h > 0");
  if (require_heating && source <= ambient) {
    fail(ProblemFault::kSourceNotAboveAmbient, "source temperature must satisfy F > Ta");
  }
  check_material(left, "left");
  check_material(right, "right");
  return BarProblem{length, interface, left, right, h, source, ambient};
}

}  // namespace

BarProblem make_problem(double length, double interface, const Material& left,
                        const Material& right, double h, double source, double ambient) {
  return build(length, interface, left, right, h, source, ambient, true);
}

BarProblem make_problem_any_source(double length, double interface, const Material& left,
                                   const Material& right, double h, double source,
                                   double ambient) {
  return build(length, interface, left, right, h, source, ambient, false);
}

BarProblem swapped(const BarProblem& p) {
  BarProblem q = p;
  std::swap(q.left, q.right);
  return q;
}

DerivedRatios derived_ratios(const BarProblem& p) {
  return {std::sqrt(p.right.alpha2 / p.left.alpha2), p.left.k / p.right.k};
}

bool is_homogeneous(const BarProblem& p) {
  return p.left.k == p.right.k && p.left.alpha2 == p.right.alpha2;
}

}  // namespace heatbar
