#pragma once

// Halving over Q on curves y^2 = (x - e0)(x - e1)(x - e2) with rational e_i:
// P = (x0, y0) is twice a rational point exactly when x0 - e0, x0 - e1 and
// x0 - e2 are all squares of rationals.

#include <optional>
#include <vector>

#include "halving/bigint.hpp"
#include "halving/curve.hpp"
#include "halving/halving_engine.hpp"

namespace halving {

class SplitCurveQ {
 public:
  /// Throws SingularCurve unless the three roots are pairwise distinct.
  SplitCurveQ(Rational e0, Rational e1, Rational e2);

  /// Splits x^3 + a2 x^2 + a4 x + a6 over Q; throws UnsupportedOverQ when
  /// it has fewer than three rational roots. For a6 = 0 the root 0 comes first.
  static SplitCurveQ from_coefficients(const Rational& a2, const Rational& a4,
                                       const Rational& a6);

  const Rational& e0() const { return e0_; }
  const Rational& e1() const { return e1_; }
  const Rational& e2() const { return e2_; }
  const Curve<Rational>& curve() const { return curve_; }
  RootTriple<Rational> root_triple() const;

 private:
  Rational e0_, e1_, e2_;
  Curve<Rational> curve_;
};

struct HalvabilityWitness {
  bool halvable = false;
  /// (gamma, alpha, beta) when halvable and P is affine.
  std::optional<SqrtTriple<Rational>> roots;
  /// Index i of the first x0 - e_i that is not a rational square.
  std::optional<int> failing_index;
  std::optional<Rational> failing_difference;
};

/// Throws NotOnCurve for points off the curve. The point at infinity is halvable.
HalvabilityWitness is_halvable_q(const SplitCurveQ& curve, const Point<Rational>& p);

/// All rational Q with 2Q = P: empty, or the full set of halves.
std::vector<Point<Rational>> rational_halves(const SplitCurveQ& curve, const Point<Rational>& p);

/// y^2 = x^3 - n^2 x with roots (0, n, -n). Throws SingularCurve for n <= 0.
SplitCurveQ congruent_curve(const BigInt& n);

}  // namespace halving
