#pragma once

// Point halving on y^2 = (x - e0)(x - e1)(x - e2).
//
// For P = (x0, y0) put gamma = sqrt(x0 - e0), alpha = sqrt(x0 - e1),
// beta = sqrt(x0 - e2). The x-coordinates of the four Q with 2Q = P are
//
//   x11 = x0 + alpha beta + gamma (alpha + beta)
//   x12 = x0 + alpha beta - gamma (alpha + beta)
//   x21 = x0 - alpha beta + gamma (alpha - beta)
//   x22 = x0 - alpha beta - gamma (alpha - beta)
//
// and as a set they do not depend on the signs chosen for the roots. The
// root triple is built from d, any root of the 2-division cubic, with
// k = -(a4 + 3 d^2) on y^2 = x^3 + a4 x + a6 (in general k = -f'(d)).
//
// Everything here is generic over a field object F with F::Elem and
// F::sqrt(Elem) -> optional<Elem>. A missing square root is reported as
// nullopt so the caller can move to a larger field.

#include <concepts>
#include <optional>
#include <utility>
#include <vector>

#include "halving/bigint.hpp"
#include "halving/curve.hpp"
#include "halving/errors.hpp"
#include "halving/prime_field.hpp"

namespace halving {

template <class F>
concept SqrtField = requires(const F& f, const typename F::Elem& a) {
  { f.sqrt(a) } -> std::same_as<std::optional<typename F::Elem>>;
};

struct RationalField {
  using Elem = Rational;
  std::optional<Rational> sqrt(const Rational& a) const { return rational_sqrt(a); }
};

struct FpField {
  using Elem = FpElem;
  std::optional<FpElem> sqrt(const FpElem& a) const { return fp_sqrt(a); }
};

template <class E>
struct RootTriple {
  E e0, e1, e2;
  E d;  // == e0
  E k;  // -(a4 + 3 d^2) on A46 curves, -f'(d) in general

  std::vector<E> roots() const { return {e0, e1, e2}; }
};

template <class E>
struct SqrtTriple {
  E gamma;  // sqrt(x0 - e0)
  E alpha;  // sqrt(x0 - e1)
  E beta;   // sqrt(x0 - e2)
};

template <class E>
struct HalvingCandidates {
  E x11, x12, x21, x22;

  std::vector<E> all() const { return {x11, x12, x21, x22}; }

  /// Distinct values in x11, x12, x21, x22 order with their multiplicities.
  std::vector<std::pair<E, int>> distinct() const {
    std::vector<std::pair<E, int>> out;
    for (const auto& x : all()) {
      bool seen = false;
      for (auto& [v, m] : out) {
        if (v == x) {
          ++m;
          seen = true;
          break;
        }
      }
      if (!seen) out.emplace_back(x, 1);
    }
    return out;
  }
};

/// Auxiliary quantities of the alternative candidate formulas:
///   t = x0^2 + d x0 - 2 d^2 - k,  w^2 = t,
///   w1^2 = (x0 - d)(d + 2w + 2x0),  w2^2 = (x0 - d)(d - 2w + 2x0)
/// (with d replaced by d + a2 inside the brackets when a2 != 0).
template <class E>
struct AltCandidateData {
  E t, w, w1, w2;
};

/// Root triple from a known root d of the 2-division cubic. The other two
/// roots come from the quadratic cofactor; on A46 curves its discriminant is
/// 9 d^2 + 4 k. nullopt when that discriminant has no root in the field.
template <SqrtField F>
std::optional<RootTriple<typename F::Elem>> root_triple_from_d(const F& field,
                                                               const Curve<typename F::Elem>& c,
                                                               const typename F::Elem& d) {
  using E = typename F::Elem;
  if (!is_zero(c.rhs(d))) throw DomainError("d is not a root of the 2-division cubic");
  const E b = c.a2 + d;
  const E cc = c.a4 + c.a2 * d + d * d;
  const auto s = field.sqrt(b * b - make_like(d, 4) * cc);
  if (!s) return std::nullopt;
  const E two = make_like(d, 2);
  return RootTriple<E>{d, (-b + *s) / two, (-b - *s) / two, d, -c.rhs_prime(d)};
}

/// Root triple with all three roots supplied (split curves).
template <class E>
RootTriple<E> root_triple_from_roots(const Curve<E>& c, E e0, E e1, E e2) {
  E k = -c.rhs_prime(e0);
  E d = e0;
  return RootTriple<E>{std::move(e0), std::move(e1), std::move(e2), std::move(d), std::move(k)};
}

/// Symmetric-function identities plus d = e0 and the definition of k.
template <class E>
bool verify_vieta(const Curve<E>& c, const RootTriple<E>& r) {
  const bool sum = r.e0 + r.e1 + r.e2 == -c.a2;
  const bool pairs = r.e0 * r.e1 + r.e1 * r.e2 + r.e2 * r.e0 == c.a4;
  const bool product = r.e0 * r.e1 * r.e2 == -c.a6;
  const bool d_root = is_zero(c.rhs(r.d)) && r.d == r.e0;
  const bool k_def = r.k == -c.rhs_prime(r.d);
  return sum && pairs && product && d_root && k_def;
}

template <SqrtField F>
std::optional<SqrtTriple<typename F::Elem>> sqrt_triple(const F& field,
                                                        const typename F::Elem& x0,
                                                        const RootTriple<typename F::Elem>& r) {
  auto gamma = field.sqrt(x0 - r.e0);
  if (!gamma) return std::nullopt;
  auto alpha = field.sqrt(x0 - r.e1);
  if (!alpha) return std::nullopt;
  auto beta = field.sqrt(x0 - r.e2);
  if (!beta) return std::nullopt;
  return SqrtTriple<typename F::Elem>{std::move(*gamma), std::move(*alpha), std::move(*beta)};
}

/// Flips the signs of gamma, alpha, beta according to bits 0, 1, 2 of mask.
template <class E>
SqrtTriple<E> with_signs(const SqrtTriple<E>& s, unsigned mask) {
  return {(mask & 1U) ? -s.gamma : s.gamma, (mask & 2U) ? -s.alpha : s.alpha,
          (mask & 4U) ? -s.beta : s.beta};
}

template <class E>
HalvingCandidates<E> candidates_from_sqrts(const E& x0, const SqrtTriple<E>& s) {
  const E ab = s.alpha * s.beta;
  const E plus = s.gamma * (s.alpha + s.beta);
  const E minus = s.gamma * (s.alpha - s.beta);
  return {x0 + ab + plus, x0 + ab - plus, x0 - ab + minus, x0 - ab - minus};
}

template <SqrtField F>
std::optional<HalvingCandidates<typename F::Elem>> candidate_xs(
    const F& field, const typename F::Elem& x0, const RootTriple<typename F::Elem>& r) {
  const auto s = sqrt_triple(field, x0, r);
  if (!s) return std::nullopt;
  return candidates_from_sqrts(x0, *s);
}

template <SqrtField F>
std::optional<AltCandidateData<typename F::Elem>> alt_candidate_data(const F& field,
                                                           const Curve<typename F::Elem>& c,
                                                           const typename F::Elem& x0,
                                                           const RootTriple<typename F::Elem>& r) {
  using E = typename F::Elem;
  const E& d = r.d;
  const E two = make_like(d, 2);
  // t = (x0 - e1)(x0 - e2); on A46 curves this is x0^2 + d x0 - 2 d^2 - k.
  E t = x0 * x0 + (c.a2 + d) * x0 + c.a4 + c.a2 * d + d * d;
  auto w = field.sqrt(t);
  if (!w) return std::nullopt;
  const E shift = x0 - d;
  const E base = two * x0 + c.a2 + d;
  auto w1 = field.sqrt(shift * (base + two * *w));
  if (!w1) return std::nullopt;
  auto w2 = field.sqrt(shift * (base - two * *w));
  if (!w2) return std::nullopt;
  return AltCandidateData<E>{std::move(t), std::move(*w), std::move(*w1), std::move(*w2)};
}

template <class E>
HalvingCandidates<E> candidates_from_alt(const E& x0, const AltCandidateData<E>& m) {
  return {x0 + m.w + m.w1, x0 + m.w - m.w1, x0 - m.w + m.w2, x0 - m.w - m.w2};
}

template <SqrtField F>
std::optional<HalvingCandidates<typename F::Elem>> candidate_xs_alt(
    const F& field, const Curve<typename F::Elem>& c, const typename F::Elem& x0,
    const RootTriple<typename F::Elem>& r) {
  const auto m = alt_candidate_data(field, c, x0, r);
  if (!m) return std::nullopt;
  return candidates_from_alt(x0, *m);
}

/// Set equality of two candidate lists (multiplicities ignored).
template <class E>
bool same_candidate_set(const HalvingCandidates<E>& a, const HalvingCandidates<E>& b) {
  auto contains = [](const std::vector<E>& xs, const E& v) {
    for (const auto& x : xs) {
      if (x == v) return true;
    }
    return false;
  };
  const auto xa = a.all();
  const auto xb = b.all();
  for (const auto& v : xa) {
    if (!contains(xb, v)) return false;
  }
  for (const auto& v : xb) {
    if (!contains(xa, v)) return false;
  }
  return true;
}

/// Points (x_half, y) with 2 (x_half, y) = P. Usually one point; both signs
/// of y qualify when P = -P, none when rhs(x_half) is not a square.
template <SqrtField F>
std::vector<Point<typename F::Elem>> recover_y(const F& field, const Curve<typename F::Elem>& c,
                                               const typename F::Elem& x_half,
                                               const Point<typename F::Elem>& p) {
  using E = typename F::Elem;
  std::vector<Point<E>> out;
  const auto y = field.sqrt(c.rhs(x_half));
  if (!y) return out;
  const Point<E> q(x_half, *y);
  if (double_point(c, q) == p) out.push_back(q);
  if (!is_zero(*y)) {
    const Point<E> q_neg(x_half, -*y);
    if (double_point(c, q_neg) == p) out.push_back(q_neg);
  }
  return out;
}

/// x-coordinate of the common point of the chords through the x11/x12 and
/// x21/x22 halves: d + k / (d - x0), which is a4 / x0 on A24 curves.
template <class E>
E meeting_point_x(const E& x0, const RootTriple<E>& r) {
  if (x0 == r.d) throw DomainError("meeting point undefined: x0 = d");
  return r.d + r.k / (r.d - x0);
}

/// Every Q in the field of F with 2Q = P, each verified by doubling.
template <SqrtField F>
std::vector<Point<typename F::Elem>> halve_point(const F& field, const Curve<typename F::Elem>& c,
                                                 const Point<typename F::Elem>& p,
                                                 const RootTriple<typename F::Elem>& r) {
  using E = typename F::Elem;
  require_on_curve(c, p);
  std::vector<Point<E>> out;
  if (p.is_infinity()) {
    out.push_back(p);
    for (auto& t : two_torsion_from_roots(r.roots())) out.push_back(std::move(t));
  } else {
    const auto cands = candidate_xs(field, p.x(), r);
    if (!cands) return out;
    for (const auto& [x, mult] : cands->distinct()) {
      for (auto& q : recover_y(field, c, x, p)) out.push_back(std::move(q));
    }
  }
  std::vector<Point<E>> unique;
  for (auto& q : out) {
    bool seen = false;
    for (const auto& u : unique) seen = seen || u == q;
    if (seen) continue;
    if (!(double_point(c, q) == p)) throw std::logic_error("halving produced a non-half");
    unique.push_back(std::move(q));
  }
  return unique;
}

/// Roots over Q of a curve whose 2-division cubic must split there. When
/// a6 = 0, d = 0; otherwise d is the smallest rational root.
/// Throws UnsupportedOverQ when the cubic does not split over Q.
RootTriple<Rational> split_two_division_cubic(const Curve<Rational>& c);

}  // namespace halving
