#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "halving/complex_check.hpp"
#include "halving/errors.hpp"

namespace halving {
namespace {

Complex random_disk(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return scale * z;
  }
}

double min_distance(Complex z, const std::array<Complex, 4>& xs) {
  double best = INFINITY;
  for (const auto& x : xs) best = std::min(best, std::abs(z - x));
  return best;
}

TEST(Resolvent, Examples) {
  const Complex r = resolvent_r(-36.0, 0.0);
  EXPECT_NEAR(r.real(), 0.0, 1e-9);
  // |r|^2 = 3 |4 (-36)^3| = 559872.
  EXPECT_NEAR(std::norm(r), 559872.0, 1e-6);
  const Complex forced = resolvent_r(0.0, 1.0);
  EXPECT_DOUBLE_EQ(forced.real(), -18.0);
  EXPECT_DOUBLE_EQ(forced.imag(), 0.0);
  EXPECT_THROW(resolvent_r(0.0, 0.0), SingularCurve);
  EXPECT_THROW(resolvent_r(-3.0, 2.0), SingularCurve);
}

TEST(CardanoD, Examples) {
  const Complex d = cardano_d(-18.0, 0.0, 1.0);
  EXPECT_LT(std::abs(d * d * d + 1.0), 1e-12);
  EXPECT_NEAR(d.imag(), std::sqrt(3.0) / 2.0, 1e-12);  // principal cube root of -1
  // Close to the double-root curve (x - 1)^2 (x + 2).
  const Complex a6 = 2.0 + 1e-6;
  const Complex dp = cardano_d(resolvent_r(-3.0, a6), -3.0, a6);
  EXPECT_LE(cubic_residual(dp, -3.0, a6), cardano_tolerance(-3.0, a6));
  EXPECT_THROW(cube_root_pair(0.0), DomainError);
}

TEST(CardanoD, RandomSamplesAndPairing) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 1000; ++i) {
    const Complex a4 = random_disk(rng, 1e3);
    const Complex a6 = random_disk(rng, 1e3);
    const Complex r = resolvent_r(a4, a6);
    const auto pair = cube_root_pair(r);
    EXPECT_LT(std::abs(pair.v * pair.paired - 1.0 / 3.0), 1e-15);
    const Complex d = cardano_d(r, a4, a6);
    EXPECT_LE(cubic_residual(d, a4, a6), cardano_tolerance(a4, a6));
  }
}

TEST(CardanoD, WideMagnitudeSpread) {
  // |a4| and |a6| drawn over six decades each, including |a4| << |a6|.
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> mag(-3.0, 3.0), phase(0.0, 2.0 * M_PI);
  for (int i = 0; i < 2000; ++i) {
    const Complex a4 = std::polar(std::pow(10.0, mag(rng)), phase(rng));
    const Complex a6 = std::polar(std::pow(10.0, mag(rng)), phase(rng));
    const Complex d = cardano_d(resolvent_r(a4, a6), a4, a6);
    EXPECT_LE(std::abs(d * d * d + a4 * d + a6), 1e-9 * (1.0 + std::abs(a4) + std::abs(a6)))
        << a4 << " " << a6;
  }
}

TEST(NumericRoots, MatchExactSplitCurves) {
  std::mt19937_64 rng(62);
  std::uniform_int_distribution<int> pick(-50, 50);
  for (int i = 0; i < 200; ++i) {
    // Depressed cubic with integer roots a, b, -(a + b).
    const int a = pick(rng), b = pick(rng), c = -(a + b);
    if (a == b || b == c || a == c) continue;
    const double a4 = a * b + b * c + c * a;
    const double a6 = -static_cast<double>(a) * b * c;
    const auto roots = numeric_roots(a4, a6);
    std::array<double, 3> exact{double(a), double(b), double(c)};
    for (const double e : exact) {
      double best = INFINITY;
      for (const auto& z : roots) best = std::min(best, std::abs(z - e));
      EXPECT_LE(best, 1e-10 * std::max(1.0, std::abs(e))) << a << " " << b;
    }
  }
}

TEST(VerifyHalving, E6Example) {
  const auto h = verify_halving_numeric(-36.0, 0.0, 6.25, -4.375);
  for (const double x : {18.0, -2.0, -3.0, 12.0}) EXPECT_LT(min_distance(x, h.candidates), 1e-9);
  EXPECT_LE(h.residual, 1e-8);
  EXPECT_FALSE(h.ill_conditioned);
}

TEST(VerifyHalving, IrreducibleCubic) {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 50; ++i) {
    const Complex x0 = random_disk(rng, 1e2);
    const Complex y0 = std::sqrt(x0 * x0 * x0 + 17.0 * x0 + 71.0);
    const auto h = verify_halving_numeric(17.0, 71.0, x0, y0);
    EXPECT_LE(h.residual, 1e-8) << x0;
  }
}

TEST(VerifyHalving, DegenerateAtRoot) {
  const auto roots = numeric_roots(-36.0, 0.0);
  const auto h = verify_halving_numeric(-36.0, 0.0, roots[0], 0.0);
  EXPECT_LE(h.residual, 1e-8);
}

TEST(VerifyHalving, RejectsOffCurve) {
  EXPECT_THROW(verify_halving_numeric(-36.0, 0.0, 1.0, 1.0), NotOnCurve);
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("1.5"), Complex(1.5, 0.0));
  EXPECT_EQ(parse_complex("-2i"), Complex(0.0, -2.0));
  EXPECT_EQ(parse_complex("3-4i"), Complex(3.0, -4.0));
  EXPECT_EQ(parse_complex("2+0.5i"), Complex(2.0, 0.5));
  EXPECT_EQ(parse_complex("1e3+i"), Complex(1000.0, 1.0));
  EXPECT_EQ(parse_complex("-1e-2-1e+2i"), Complex(-0.01, -100.0));
  EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
  EXPECT_THROW(parse_complex(""), std::invalid_argument);
}

}  // namespace
}  // namespace halving
