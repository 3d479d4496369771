#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "heatbar/errors.hpp"
#include "heatbar/quadrature.hpp"

using namespace heatbar;

TEST(Quadrature, PolynomialIsExact) {
  const auto r = integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
  EXPECT_NEAR(r.value, (8.0 - 4.0 + 2.0) - (-1.0 - 1.0 - 1.0), 1e-13);
}

TEST(Quadrature, SineSquaredAntiderivative) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> wave(0.5, 400.0), len(0.1, 3.0);
  for (int i = 0; i < 5; ++i) {
    const double a = wave(rng), l = len(rng);
    const auto r = integrate([a](double x) { return std::sin(a * x) * std::sin(a * x); }, 0.0, l);
    const double exact = l / 2.0 - std::sin(2.0 * a * l) / (4.0 * a);
    EXPECT_NEAR(r.value, exact, 1e-10 * exact);
  }
}

TEST(Quadrature, EmptyIntervalAndZeroIntegrand) {
  EXPECT_EQ(integrate([](double) { return 1.0; }, 1.0, 1.0).value, 0.0);
  EXPECT_EQ(integrate([](double) { return 0.0; }, 0.0, 1.0).value, 0.0);
}

TEST(Quadrature, NonConvergenceIsReported) {
  EXPECT_THROW((void)integrate([](double x) { return std::sin(1.0 / x) / x; }, 1e-12, 1.0, 1e-12,
                               1e-300, 50),
               NumericalError);
}
