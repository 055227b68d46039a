#include "halving/rational_halving.hpp"

#include <algorithm>
#include <utility>

#include "halving/errors.hpp"

namespace halving {

SplitCurveQ::SplitCurveQ(Rational e0, Rational e1, Rational e2)
    : e0_(std::move(e0)), e1_(std::move(e1)), e2_(std::move(e2)) {
  if (e0_ == e1_ || e1_ == e2_ || e0_ == e2_) {
    throw SingularCurve("singular curve: roots " + e0_.to_string() + ", " + e1_.to_string() +
                        ", " + e2_.to_string() + " are not distinct");
  }
  curve_ = Curve<Rational>{-(e0_ + e1_ + e2_), e0_ * e1_ + e1_ * e2_ + e2_ * e0_,
                           -(e0_ * e1_ * e2_)};
}

SplitCurveQ SplitCurveQ::from_coefficients(const Rational& a2, const Rational& a4,
                                           const Rational& a6) {
  auto roots = rational_roots_cubic(a2, a4, a6);
  if (roots.size() != 3) {
    throw UnsupportedOverQ("2-division cubic does not split into distinct rational roots");
  }
  if (a6.is_zero()) {
    std::stable_partition(roots.begin(), roots.end(), [](const Rational& r) { return r.is_zero(); });
  }
  return SplitCurveQ(roots[0], roots[1], roots[2]);
}

RootTriple<Rational> SplitCurveQ::root_triple() const {
  return root_triple_from_roots(curve_, e0_, e1_, e2_);
}

HalvabilityWitness is_halvable_q(const SplitCurveQ& curve, const Point<Rational>& p) {
  require_on_curve(curve.curve(), p);
  HalvabilityWitness w;
  if (p.is_infinity()) {
    w.halvable = true;
    return w;
  }
  const Rational diffs[3] = {p.x() - curve.e0(), p.x() - curve.e1(), p.x() - curve.e2()};
  std::optional<Rational> roots[3];
  for (int i = 0; i < 3; ++i) {
    roots[i] = rational_sqrt(diffs[i]);
    if (!roots[i]) {
      w.failing_index = i;
      w.failing_difference = diffs[i];
      return w;
    }
  }
  w.halvable = true;
  w.roots = SqrtTriple<Rational>{*roots[0], *roots[1], *roots[2]};
  return w;
}

std::vector<Point<Rational>> rational_halves(const SplitCurveQ& curve, const Point<Rational>& p) {
  return halve_point(RationalField{}, curve.curve(), p, curve.root_triple());
}

SplitCurveQ congruent_curve(const BigInt& n) {
  if (n.sign() <= 0) throw SingularCurve("congruent-number curve needs n >= 1");
  return SplitCurveQ(Rational(0), Rational(n), Rational(-n));
}

}  // namespace halving
