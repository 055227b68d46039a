#pragma once

// Curves y^2 = x^3 + a2 x^2 + a4 x + a6 over any exact field backend, and
// the affine chord-tangent group law used to verify every halving result.
//
// Element types follow a small protocol: value semantics, + - * / and unary
// minus, ==, make_like(ref, long) and is_zero(e), all found by ADL.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halving/bigint.hpp"
#include "halving/errors.hpp"

namespace halving {

enum class CurveForm {
  A46,      // a2 = 0:  y^2 = x^3 + a4 x + a6
  A24,      // a6 = 0:  y^2 = x^3 + a2 x^2 + a4 x
  General,  // both a2 and a6 nonzero
};

template <class E>
struct Curve {
  E a2;
  E a4;
  E a6;

  CurveForm form() const {
    if (is_zero(a2)) return CurveForm::A46;
    if (is_zero(a6)) return CurveForm::A24;
    return CurveForm::General;
  }

  /// x^3 + a2 x^2 + a4 x + a6.
  E rhs(const E& x) const { return ((x + a2) * x + a4) * x + a6; }
  /// Derivative of rhs.
  E rhs_prime(const E& x) const {
    return (make_like(x, 3) * x + make_like(x, 2) * a2) * x + a4;
  }

  /// Discriminant of the 2-division cubic.
  E discriminant() const {
    const E four = make_like(a4, 4);
    return a2 * a2 * a4 * a4 - four * a4 * a4 * a4 - four * a2 * a2 * a2 * a6 +
           make_like(a4, 18) * a2 * a4 * a6 - make_like(a4, 27) * a6 * a6;
  }

  /// Applies f to each coefficient, e.g. to lift into an extension field.
  template <class F>
  auto map(F&& f) const -> Curve<decltype(f(a2))> {
    return {f(a2), f(a4), f(a6)};
  }
};

template <class E>
Curve<E> make_a46(E a4, E a6) {
  E zero = make_like(a4, 0);
  return {std::move(zero), std::move(a4), std::move(a6)};
}

template <class E>
Curve<E> make_a24(E a2, E a4) {
  E zero = make_like(a4, 0);
  return {std::move(a2), std::move(a4), std::move(zero)};
}

/// Either the point at infinity or an affine point.
template <class E>
class Point {
 public:
  static Point infinity() { return Point(); }
  Point(E x, E y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_infinity() const { return !xy_.has_value(); }
  const E& x() const { return xy_->first; }
  const E& y() const { return xy_->second; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
  }

  template <class F>
  auto map(F&& f) const -> Point<decltype(f(std::declval<const E&>()))> {
    using R = Point<decltype(f(std::declval<const E&>()))>;
    if (is_infinity()) return R::infinity();
    return R(f(x()), f(y()));
  }

 private:
  Point() = default;
  std::optional<std::pair<E, E>> xy_;
};

struct Validation {
  bool ok = true;
  std::string reason;
};

template <class E>
Validation validate(const Curve<E>& c) {
  switch (c.form()) {
    case CurveForm::A46:
      if (is_zero(c.discriminant())) return {false, "4 a4^3 + 27 a6^2 = 0"};
      break;
    case CurveForm::A24:
      if (is_zero(c.a4)) return {false, "a4 = 0 gives a double root at x = 0"};
      if (c.a2 * c.a2 == make_like(c.a4, 4) * c.a4) return {false, "a2^2 = 4 a4"};
      break;
    case CurveForm::General:
      if (is_zero(c.discriminant())) return {false, "2-division cubic has a repeated root"};
      break;
  }
  return {};
}

/// Throws SingularCurve with the reason from validate().
template <class E>
void require_nonsingular(const Curve<E>& c) {
  const auto v = validate(c);
  if (!v.ok) throw SingularCurve("singular curve: " + v.reason);
}

template <class E>
bool on_curve(const Curve<E>& c, const Point<E>& p) {
  return p.is_infinity() || p.y() * p.y() == c.rhs(p.x());
}

template <class E>
void require_on_curve(const Curve<E>& c, const Point<E>& p) {
  if (!on_curve(c, p)) throw NotOnCurve("point is not on the curve");
}

namespace detail {

template <class E>
Point<E> add_unchecked(const Curve<E>& c, const Point<E>& p, const Point<E>& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  E slope = make_like(c.a4, 0);
  if (p.x() == q.x()) {
    // Vertical chord, or tangent at a 2-torsion point.
    if (p.y() != q.y() || is_zero(p.y())) return Point<E>::infinity();
    slope = c.rhs_prime(p.x()) / (make_like(c.a4, 2) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  E x3 = slope * slope - c.a2 - p.x() - q.x();
  E y3 = slope * (p.x() - x3) - p.y();
  return Point<E>(std::move(x3), std::move(y3));
}

}  // namespace detail

template <class E>
Point<E> neg(const Curve<E>& c, const Point<E>& p) {
  require_on_curve(c, p);
  if (p.is_infinity()) return p;
  return Point<E>(p.x(), -p.y());
}

template <class E>
Point<E> add(const Curve<E>& c, const Point<E>& p, const Point<E>& q) {
  require_on_curve(c, p);
  require_on_curve(c, q);
  return detail::add_unchecked(c, p, q);
}

template <class E>
Point<E> sub(const Curve<E>& c, const Point<E>& p, const Point<E>& q) {
  return add(c, p, neg(c, q));
}

template <class E>
Point<E> double_point(const Curve<E>& c, const Point<E>& p) {
  require_on_curve(c, p);
  return detail::add_unchecked(c, p, p);
}

/// n * P by left-to-right double-and-add; negative n negates P.
template <class E>
Point<E> scalar_mul(const Curve<E>& c, const BigInt& n, const Point<E>& p) {
  require_on_curve(c, p);
  if (n.sign() < 0) return scalar_mul(c, -n, neg(c, p));
  Point<E> acc = Point<E>::infinity();
  for (std::size_t i = n.bit_length(); i-- > 0;) {
    acc = detail::add_unchecked(c, acc, acc);
    if (n.bit(i)) acc = detail::add_unchecked(c, acc, p);
  }
  return acc;
}

/// The closed form of doubling on A24 curves: x(2Q) = (x^2 - a4)^2 / (4x(x^2 + a2 x + a4)).
template <class E>
E a24_double_x(const Curve<E>& c, const E& x) {
  const E num = x * x - c.a4;
  return num * num / (make_like(x, 4) * x * (x * x + c.a2 * x + c.a4));
}

/// Points (e, 0) for the given roots of the 2-division cubic.
template <class E>
std::vector<Point<E>> two_torsion_from_roots(const std::vector<E>& roots) {
  std::vector<Point<E>> out;
  for (const auto& e : roots) out.emplace_back(e, make_like(e, 0));
  return out;
}

/// A curve in shifted coordinates x' = x - shift.
template <class E>
struct ShiftedCurve {
  Curve<E> curve;
  E shift;

  Point<E> to_shifted(const Point<E>& p) const {
    if (p.is_infinity()) return p;
    return Point<E>(p.x() - shift, p.y());
  }
  Point<E> from_shifted(const Point<E>& p) const {
    if (p.is_infinity()) return p;
    return Point<E>(p.x() + shift, p.y());
  }
};

/// Substitutes x = x' + s, so a root e of the original cubic becomes e - s.
template <class E>
ShiftedCurve<E> depress_shift(const Curve<E>& c, const E& s) {
  const E three = make_like(s, 3);
  const E two = make_like(s, 2);
  Curve<E> shifted{three * s + c.a2, three * s * s + two * c.a2 * s + c.a4, c.rhs(s)};
  return {std::move(shifted), s};
}

}  // namespace halving
