#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "heatbar/eigenproblem.hpp"

using namespace heatbar;
using heatbar::test::mat;

namespace {

constexpr double kPi = std::numbers::pi;

// Classical single-material Robin eigenvalues: roots of tan(lambda L) + (k/h) lambda = 0.
// On ((m - 1/2) pi / L, m pi / L) the left side increases from -inf to (k/h) m pi / L > 0.
std::vector<double> robin_roots_oracle(double L, double k, double h, int count) {
  std::vector<double> roots;
  for (int m = 1; m <= count; ++m) {
    double a = (m - 0.5) * kPi / L * (1.0 + 1e-15);
    double b = m * kPi / L;
    auto g = [&](double x) { return std::tan(x * L) + (k / h) * x; };
    for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it) {
      const double mid = 0.5 * (a + b);
      (g(mid) < 0.0 ? a : b) = mid;
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

}  // namespace

TEST(BranchLayout, JumpPointsEvenlySpaced) {
  const BarProblem p = test::long_bar();
  const BranchLayout layout = make_branch_layout(p, 30);
  const double al = derived_ratios(p).alpha * p.interface;
  ASSERT_EQ(layout.jump_points.size(), 30u);
  EXPECT_NEAR(layout.jump_points.front(), kPi / (2.0 * al), 1e-15);
  for (std::size_t i = 1; i < layout.jump_points.size(); ++i) {
    EXPECT_NEAR(layout.jump_points[i] - layout.jump_points[i - 1], kPi / al, 1e-12);
  }
  EXPECT_EQ(jumps_below(layout, 0.5 * layout.jump_points[0]), 0u);
  EXPECT_EQ(jumps_below(layout, layout.jump_points[3]), 3u);
  EXPECT_EQ(jumps_below(layout, layout.jump_points[3] * (1 + 1e-12)), 4u);
}

TEST(FEval, VanishesAtOrigin) {
  const BranchLayout layout = make_branch_layout(test::long_bar(), 5);
  EXPECT_NEAR(f_eval(layout, 1e-12), 0.0, 1e-11);
  EXPECT_THROW((void)f_eval(layout, 0.0), ConfigError);
}

TEST(FEval, SymbolicConstants) {
  // Symbolic parameterization: alpha l = 2 sqrt(0.23673/0.20451), k alpha = (73/35) sqrt(...).
  const BranchLayout layout = make_branch_layout(test::long_bar(), 5);
  const double a = std::sqrt(0.23673 / 0.20451);
  EXPECT_NEAR(layout.alpha_l(), 2.0 * a, 1e-12);
  EXPECT_NEAR(layout.k_alpha(), 73.0 / 35.0 * a, 1e-12);
  for (double x : {0.1, 0.5, 1.3, 2.9}) {
    EXPECT_NEAR(f_eval(layout, x), std::atan(std::tan(2.0 * a * x) / (73.0 / 35.0 * a)) + 3.0 * x,
                1e-12);
  }
}

TEST(FEval, JumpsDownByPi) {
  const BranchLayout layout = make_branch_layout(test::long_bar(), 10);
  for (double xn : layout.jump_points) {
    const double below = f_eval(layout, xn * (1 - 1e-9));
    const double above = f_eval(layout, xn * (1 + 1e-9));
    EXPECT_NEAR(below - above, kPi, 1e-6);
  }
  EXPECT_THROW((void)f_eval(layout, layout.jump_points[2]), NumericalError);
}

TEST(EigLhsRhs, HomogeneousReducesToTanLx) {
  const BarProblem p = test::homogeneous("Cu");
  for (double x : {0.3, 1.1, 2.7, 6.0, 13.3}) {
    const EigenEquationSides s = eig_lhs_rhs(p, x);
    EXPECT_NEAR(s.rhs, std::tan(p.length * x), 1e-10 * (1 + std::abs(s.rhs)));
    EXPECT_DOUBLE_EQ(s.lhs, -(p.right.k / p.h) * x);
  }
}

TEST(EigLhsRhs, RhsIsTangentOfF) {
  const BarProblem p = test::long_bar();
  const BranchLayout layout = make_branch_layout(p, 50);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.01, 40.0);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    try {
      const double rhs = eig_lhs_rhs(p, x).rhs;
      const double tf = std::tan(f_eval(layout, x));
      if (std::abs(rhs) > 1e6) continue;  // near a pole the comparison is ill-conditioned
      EXPECT_NEAR(rhs, tf, 1e-8 * (1 + std::abs(rhs)));
      ++checked;
    } catch (const NumericalError&) {
    }
  }
  EXPECT_GT(checked, 150);
}

TEST(EigLhsRhs, SingularPointsAreSignalled) {
  const BarProblem p = test::long_bar();
  const double al = derived_ratios(p).alpha * p.interface;
  EXPECT_THROW((void)eig_lhs_rhs(p, kPi / (2 * al)), NumericalError);
  EXPECT_THROW((void)eig_lhs_rhs(p, kPi / (2 * (p.length - p.interface))), NumericalError);
}

TEST(FindEigenvalues, LongBarFirstTwenty) {
  const BarProblem p = test::long_bar();
  const auto t0 = std::chrono::steady_clock::now();
  const auto modes = find_eigenvalues(p, 20);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 1.0);
  ASSERT_EQ(modes.size(), 20u);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    EXPECT_EQ(modes[i].index, i + 1);
    EXPECT_GT(modes[i].lambda, 0.0);
    EXPECT_DOUBLE_EQ(modes[i].lambda1, derived_ratios(p).alpha * modes[i].lambda);
    EXPECT_LT(modes[i].residual, 1e-8);
    if (i > 0) EXPECT_GT(modes[i].lambda - modes[i - 1].lambda, 1e-9);
    try {
      const EigenEquationSides s = eig_lhs_rhs(p, modes[i].lambda);
      EXPECT_LT(std::abs(s.lhs - s.rhs), 1e-9 * (1 + std::abs(s.lhs))) << "mode " << i + 1;
    } catch (const NumericalError&) {
      ADD_FAILURE() << "root " << i + 1 << " sits on a singular point";
    }
  }
}

TEST(FindEigenvalues, HomogeneousMatchesClassicalRobinOracle) {
  for (const char* name : {"Fe", "Ag", "Pb"}) {
    const BarProblem p = test::homogeneous(name);
    const auto modes = find_eigenvalues(p, 20);
    const auto oracle = robin_roots_oracle(p.length, p.right.k, p.h, 20);
    for (std::size_t i = 0; i < 20; ++i) {
      EXPECT_NEAR(modes[i].lambda, oracle[i], 1e-9 * oracle[i]) << name << " mode " << i + 1;
    }
  }
}

TEST(FindEigenvalues, EveryBranchWindowHoldsARoot) {
  const BarProblem p = test::long_bar();
  const auto modes = find_eigenvalues(p, 60);
  const BranchLayout layout = make_branch_layout(p, 60);
  std::vector<int> per_window(layout.jump_points.size() + 1, 0);
  for (const auto& m : modes) ++per_window[jumps_below(layout, m.lambda)];
  const std::size_t covered = jumps_below(layout, modes.back().lambda);
  for (std::size_t w = 0; w < covered; ++w) EXPECT_GE(per_window[w], 1) << "window " << w;
}

TEST(FindEigenvalues, LiftedPhaseHitsConsecutiveLevels) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const BarProblem p = test::random_problem(rng);
    const auto modes = find_eigenvalues(p, 25);
    const BranchLayout layout = make_branch_layout(p, 200);
    for (std::size_t i = 0; i < modes.size(); ++i) {
      EXPECT_NEAR(branch_phase(layout, modes[i].lambda), (i + 1) * kPi, 1e-9 * (i + 1));
      EXPECT_LT(modes[i].residual, 1e-8);
    }
    // Root count below x equals floor(phase(x) / pi).
    const double top = modes.back().lambda;
    for (int s = 1; s < 40; ++s) {
      const double x = top * s / 40.0;
      const auto below = static_cast<std::size_t>(
          std::count_if(modes.begin(), modes.end(), [x](const Eigenmode& m) { return m.lambda < x; }));
      EXPECT_EQ(below, static_cast<std::size_t>(std::floor(branch_phase(layout, x) / kPi)));
    }
  }
}

TEST(BranchFunction, IncreasingBetweenJumpsAndDropsByPi) {
  const BarProblem p = test::long_bar();
  const BranchLayout layout = make_branch_layout(p, 10);
  double a = 0.0;
  for (double b : layout.jump_points) {
    double prev = branch_function(layout, a + (b - a) * 1e-6);
    for (int s = 1; s < 200; ++s) {
      const double x = a + (b - a) * (s / 200.0);
      const double v = branch_function(layout, x);
      EXPECT_GT(v, prev);
      prev = v;
    }
    EXPECT_NEAR(branch_function(layout, b * (1 - 1e-10)) - branch_function(layout, b * (1 + 1e-10)),
                kPi, 1e-6);
    a = b;
  }
}

TEST(FindEigenvalues, SearchBoundExhaustion) {
  const BarProblem p = test::long_bar();
  EigenSearchOptions tight;
  tight.initial_jump_points = 4;
  tight.allow_extension = false;
  const auto in_four = find_eigenvalues(p, 1, tight);  // first window always has a root here
  ASSERT_EQ(in_four.size(), 1u);

  const BranchLayout layout = make_branch_layout(p, 4);
  const std::size_t found = static_cast<std::size_t>(std::floor(branch_phase(layout, layout.jump_points.back()) / kPi));
  EXPECT_THROW((void)find_eigenvalues(p, found + 1, tight), NumericalError);

  EigenSearchOptions extend = tight;
  extend.allow_extension = true;
  EXPECT_EQ(find_eigenvalues(p, found + 1, extend).size(), found + 1);
  EXPECT_THROW((void)find_eigenvalues(p, 0), ConfigError);
}

TEST(VerifyMode, ConditionsByConstruction) {
  const BarProblem p = test::long_bar();
  for (const Eigenmode& m : find_eigenvalues(p, 10)) {
    const ModeResidual r = verify_mode(p, m);
    EXPECT_EQ(r.origin, 0.0);
    EXPECT_EQ(m.B, std::sin(m.lambda1 * p.interface));
    EXPECT_LT(r.value_continuity, 1e-15);
    EXPECT_LT(r.flux_continuity, 1e-14);
    EXPECT_LT(r.robin, 1e-8);
  }
}

TEST(VerifyMode, NonEigenvalueFailsRobin) {
  const BarProblem p = test::long_bar();
  const auto modes = find_eigenvalues(p, 2);
  const Eigenmode off = assemble_mode(p, 1, 0.5 * (modes[0].lambda + modes[1].lambda));
  EXPECT_GT(verify_mode(p, off).robin, 1e-3);
}

TEST(UnshiftedCoefficients, KAlphaSatisfiesFluxLAlphaDoesNot) {
  const BarProblem p = test::long_bar();
  double worst_l_alpha = 0.0;
  for (const Eigenmode& m : find_eigenvalues(p, 10)) {
    const UnshiftedCoefficientCheck c = check_unshifted_coefficients(p, m);
    EXPECT_LT(c.value_residual_k_alpha, 1e-13);
    EXPECT_LT(c.flux_residual_k_alpha, 1e-13);
    worst_l_alpha = std::max(worst_l_alpha, c.flux_residual_l_alpha);
  }
  EXPECT_GT(worst_l_alpha, 1e-4);
}
