#pragma once

// Halving over F_p end to end.
//
// The 2-division cubic is factored over F_p, the computation moves to the
// smallest F_{p^D} holding all of its roots (D = 1, 2 or 3; for an
// irreducible cubic F_p[X]/(cubic) with d = X), square roots that do not
// exist there are taken in the quadratic tower, and the candidates lying in
// F_p are lifted to points and verified by doubling.
//
// Also here: the exhaustive oracle, brute-force group order for small p, and
// halving through the inverse of 2 modulo a known odd group order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halving/bigint.hpp"
#include "halving/curve.hpp"
#include "halving/extension_field.hpp"
#include "halving/halving_engine.hpp"
#include "halving/prime_field.hpp"

namespace halving {

using FpCurve = Curve<FpElem>;
using FpPoint = Point<FpElem>;

/// Largest p accepted by the enumeration helpers.
inline constexpr long kBruteForceLimit = 10000;

FpCurve make_fp_curve(const PrimeFieldPtr& field, const BigInt& a2, const BigInt& a4,
                      const BigInt& a6);

/// The 2-division cubic split over its splitting field F_{p^D}.
struct FiniteSplit {
  CubicFactorization factorization;
  FieldCtxPtr ctx;
  Curve<ExtElem> curve;  // lifted into ctx
  RootTriple<ExtElem> roots;
};

/// d is X for an irreducible cubic, 0 when a6 = 0, else the smallest F_p root.
FiniteSplit split_two_division_cubic(const FpCurve& curve, std::uint64_t seed);

struct CandidateInfo {
  std::string value;  // printed in the working field
  int multiplicity = 1;
  bool in_base_field = false;
};

struct FpHalvingReport {
  std::vector<FpPoint> halves;
  std::vector<int> factor_degrees;
  int working_degree = 1;
  bool tower_used = false;
  std::vector<CandidateInfo> candidates;  // distinct x11..x22 values; empty for P = O
  int base_field_candidates = 0;
  std::optional<bool> alt_formulas_agree;
  /// x_S when x0 != d and x_S lies in F_p.
  std::optional<FpElem> meeting_x;
  /// Whether x(Q11 + Q12) = x_S for every pair whose two halves exist; unset if none did.
  std::optional<bool> meeting_point_verified;
};

/// Splits the cubic once and halves any number of points on the curve.
class FpHalver {
 public:
  explicit FpHalver(const FpCurve& curve, std::uint64_t seed = 0);

  const FpCurve& curve() const { return curve_; }
  const FiniteSplit& split() const { return split_; }

  FpHalvingReport report(const FpPoint& p) const;
  std::vector<FpPoint> halve(const FpPoint& p) const { return report(p).halves; }

 private:
  FpCurve curve_;
  std::uint64_t seed_;
  FiniteSplit split_;
};

FpHalvingReport halve_over_fp_report(const FpCurve& curve, const FpPoint& p, std::uint64_t seed);

/// Every Q in E(F_p) with 2Q = P.
std::vector<FpPoint> halve_over_fp(const FpCurve& curve, const FpPoint& p, std::uint64_t seed);

/// Points of order dividing 2 other than infinity.
std::vector<FpPoint> two_torsion(const FpCurve& curve, std::uint64_t seed = 0);

/// Every affine point; throws BudgetExceeded for p > kBruteForceLimit.
std::vector<FpPoint> all_points(const FpCurve& curve);
/// Exhaustive oracle: every Q (infinity included) with 2Q = P.
std::vector<FpPoint> brute_force_halves(const FpCurve& curve, const FpPoint& p);
/// 1 + number of affine points.
BigInt group_order_bf(const FpCurve& curve);

/// ((m + 1) / 2) * P for an odd m with m P = infinity.
FpPoint halve_via_order(const FpCurve& curve, const FpPoint& p, const BigInt& m);

}  // namespace halving
