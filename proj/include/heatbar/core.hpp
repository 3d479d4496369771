#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heatbar/errors.hpp"

namespace heatbar {

/// Thermal properties of one homogeneous material, SI units.
struct Material {
  std::string name;
  double k = 0.0;       ///< conductivity, W/(m °C)
  double alpha2 = 0.0;  ///< diffusivity, m^2/s

  /// Volumetric heat capacity rho*c = k / alpha2, J/(m^3 °C).
  [[nodiscard]] double heat_capacity() const { return k / alpha2; }

  friend bool operator==(const Material&, const Material&) = default;
};

/// The seven reference materials (Pb, Ni, Fe, Mg, Al, Cu, Ag).
[[nodiscard]] const std::vector<Material>& builtin_materials();

/// Case-sensitive lookup by symbol in `table`.
[[nodiscard]] std::optional<Material> find_material(std::span<const Material> table,
                                                    std::string_view name);

/// Two-material bar: `left` on (0, interface), `right` on (interface, length).
/// Dirichlet temperature `source` at x = 0, convection to `ambient` through
/// coefficient `h` at x = length. Construct through make_problem.
struct BarProblem {
  double length = 0.0;     ///< L, m
  double interface = 0.0;  ///< l, m
  Material left;
  Material right;
  double h = 0.0;        ///< W/(m^2 °C)
  double source = 0.0;   ///< F, °C
  double ambient = 0.0;  ///< Ta, °C
};

enum class ProblemFault {
  kNonPositiveLength,
  kInterfaceNotPositive,
  kInterfaceNotBeforeEnd,
  kNonPositiveH,
  kSourceNotAboveAmbient,
  kNonPositiveConductivity,
  kNonPositiveDiffusivity,
  kNonFinite,
};

class InvalidProblem : public ConfigError {
 public:
  InvalidProblem(ProblemFault fault, const std::string& what)
      : ConfigError(what), fault_(fault) {}
  [[nodiscard]] ProblemFault fault() const { return fault_; }

 private:
  ProblemFault fault_;
};

/// Validated construction; throws InvalidProblem naming the violated invariant.
[[nodiscard]] BarProblem make_problem(double length, double interface, const Material& left,
                                      const Material& right, double h, double source,
                                      double ambient);

/// Same checks except F > Ta. Used for zero-perturbation diagnostics.
[[nodiscard]] BarProblem make_problem_any_source(double length, double interface,
                                                 const Material& left, const Material& right,
                                                 double h, double source, double ambient);

/// Mirror the material assignment, keeping geometry and boundary data.
[[nodiscard]] BarProblem swapped(const BarProblem& p);

struct DerivedRatios {
  double alpha = 1.0;   ///< sqrt(right.alpha2 / left.alpha2)
  double kratio = 1.0;  ///< left.k / right.k
};

[[nodiscard]] DerivedRatios derived_ratios(const BarProblem& p);

/// True when both segments carry identical constants (no physical interface).
[[nodiscard]] bool is_homogeneous(const BarProblem& p);

}  // namespace heatbar
