#pragma once

#include <random>

#include "heatbar/core.hpp"

namespace heatbar::test {

inline Material mat(const char* name) { return *find_material(builtin_materials(), name); }

/// L=1, l=0.3, h=10, F=100, Ta=25.
inline BarProblem fe_pb(const char* left = "Fe", const char* right = "Pb") {
  return make_problem(1.0, 0.3, mat(left), mat(right), 10.0, 100.0, 25.0);
}

/// L=5, l=2, Fe-Pb, h=10, F=150, Ta=20.
inline BarProblem long_bar() { return make_problem(5.0, 2.0, mat("Fe"), mat("Pb"), 10.0, 150.0, 20.0); }

/// Same geometry and boundary data as fe_pb with one material on both sides.
inline BarProblem homogeneous(const char* name = "Fe") {
  return make_problem(1.0, 0.3, mat(name), mat(name), 10.0, 100.0, 25.0);
}

/// Random valid problem drawn from physically plausible ranges.
inline BarProblem random_problem(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, u01(rng)); };
  const double L = log_uniform(0.1, 10.0);
  const double l = L * (0.05 + 0.9 * u01(rng));
  const Material left{"a", log_uniform(1.0, 500.0), log_uniform(1e-6, 2e-4)};
  const Material right{"b", log_uniform(1.0, 500.0), log_uniform(1e-6, 2e-4)};
  const double Ta = -20.0 + 60.0 * u01(rng);
  const double F = Ta + log_uniform(0.1, 500.0);
  return make_problem(L, l, left, right, log_uniform(0.1, 1000.0), F, Ta);
}

}  // namespace heatbar::test
