#include "halving/finite_halving.hpp"

#include <algorithm>
#include <stdexcept>

#include "halving/errors.hpp"

namespace halving {

FpCurve make_fp_curve(const PrimeFieldPtr& field, const BigInt& a2, const BigInt& a4,
                      const BigInt& a6) {
  return FpCurve{FpElem(a2, field), FpElem(a4, field), FpElem(a6, field)};
}

FiniteSplit split_two_division_cubic(const FpCurve& curve, std::uint64_t seed) {
  require_nonsingular(curve);
  const auto& fp = curve.a4.field();
  auto fact = cubic_roots_fp(curve.a2, curve.a4, curve.a6, seed);

  FieldCtxPtr ctx;
  std::optional<ExtElem> d;
  switch (fact.roots.size()) {
    case 3:
      ctx = FieldCtx::prime(fp);
      break;
    case 1:
      ctx = FieldCtx::make(fp, fact.factors.back());  // the irreducible quadratic
      break;
    case 0:
      ctx = FieldCtx::make(fp, {curve.a6, curve.a4, curve.a2, FpElem(1, fp)});
      d = ctx->generator();
      break;
    default:
      throw std::logic_error("squarefree cubic with exactly two roots");
  }
  if (!d) d = curve.a6.is_zero() ? ctx->zero() : ctx->embed(fact.roots.front());

  auto lifted = curve.map([&](const FpElem& a) { return ctx->embed(a); });
  auto roots = root_triple_from_d(ExtField{ctx}, lifted, *d);
  if (!roots) throw std::logic_error("quadratic cofactor does not split in its splitting field");
  if (!verify_vieta(lifted, *roots)) throw std::logic_error("root triple violates Vieta identities");
  return FiniteSplit{std::move(fact), ctx, std::move(lifted), std::move(*roots)};
}

namespace {

template <class E>
std::optional<FpElem> to_fp(const E& a) {
  if (!in_base_field(a)) return std::nullopt;
  return project_to_fp(a);
}

void dedupe_into(std::vector<FpPoint>& out, std::vector<FpPoint> pts) {
  for (auto& q : pts) {
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
}

// Runs the candidate formulas in field F and fills the report.
template <class F>
void halve_in(const F& field, const FpCurve& curve, const FpPoint& p,
              const Curve<typename F::Elem>& lifted, const RootTriple<typename F::Elem>& roots,
              const typename F::Elem& x0, const HalvingCandidates<typename F::Elem>& cands,
              FpHalvingReport& report) {
  const auto alt = candidate_xs_alt(field, lifted, x0, roots);
  report.alt_formulas_agree = alt.has_value() && same_candidate_set(cands, *alt);

  for (const auto& [x, mult] : cands.distinct()) {
    const auto projected = to_fp(x);
    report.candidates.push_back({x.to_string(), mult, projected.has_value()});
    if (!projected) continue;
    ++report.base_field_candidates;
    dedupe_into(report.halves, recover_y(FpField{}, curve, *projected, p));
  }

  if (x0 == roots.d) return;
  const auto xs = to_fp(meeting_point_x(x0, roots));
  if (!xs) return;
  report.meeting_x = xs;

  // The chords through the x11/x12 halves and through the x21/x22 halves
  // both pass through -S.
  auto single_half = [&](const typename F::Elem& x) -> std::optional<FpPoint> {
    const auto fx = to_fp(x);
    if (!fx) return std::nullopt;
    auto qs = recover_y(FpField{}, curve, *fx, p);
    if (qs.size() != 1) return std::nullopt;
    return qs.front();
  };
  const std::pair<const typename F::Elem*, const typename F::Elem*> pairs[] = {
      {&cands.x11, &cands.x12}, {&cands.x21, &cands.x22}};
  for (const auto& [a, b] : pairs) {
    if (*a == *b) continue;
    const auto qa = single_half(*a);
    const auto qb = single_half(*b);
    if (!qa || !qb) continue;
    const auto sum = add(curve, *qa, *qb);
    const bool ok = !sum.is_infinity() && sum.x() == *xs;
    report.meeting_point_verified = report.meeting_point_verified.value_or(true) && ok;
  }
}

}  // namespace

FpHalver::FpHalver(const FpCurve& curve, std::uint64_t seed)
    : curve_(curve), seed_(seed), split_(split_two_division_cubic(curve, seed)) {}

FpHalvingReport FpHalver::report(const FpPoint& p) const {
  require_on_curve(curve_, p);
  FpHalvingReport report;
  report.factor_degrees = split_.factorization.factor_degrees;

  if (p.is_infinity()) {
    report.halves.push_back(p);
    dedupe_into(report.halves, two_torsion_from_roots(split_.factorization.roots));
    return report;
  }

  report.working_degree = split_.ctx->degree();
  const ExtField ext{split_.ctx};
  const ExtElem x0 = split_.ctx->embed(p.x());
  if (const auto cands = candidate_xs(ext, x0, split_.roots)) {
    halve_in(ext, curve_, p, split_.curve, split_.roots, x0, *cands, report);
  } else {
    report.tower_used = true;
    const TowerField tower{TowerCtx::make(split_.ctx, seed_)};
    auto up = [&](const ExtElem& a) { return tower.ctx->embed(a); };
    const auto lifted = split_.curve.map(up);
    const RootTriple<TowerElem> roots{up(split_.roots.e0), up(split_.roots.e1),
                                      up(split_.roots.e2), up(split_.roots.d), up(split_.roots.k)};
    const TowerElem tx0 = up(x0);
    const auto tower_cands = candidate_xs(tower, tx0, roots);
    if (!tower_cands) throw std::logic_error("square root missing in the quadratic tower");
    halve_in(tower, curve_, p, lifted, roots, tx0, *tower_cands, report);
  }

  for (const auto& q : report.halves) {
    if (!(double_point(curve_, q) == p)) throw std::logic_error("halving produced a non-half");
  }
  return report;
}

FpHalvingReport halve_over_fp_report(const FpCurve& curve, const FpPoint& p, std::uint64_t seed) {
  require_nonsingular(curve);
  require_on_curve(curve, p);
  return FpHalver(curve, seed).report(p);
}

std::vector<FpPoint> halve_over_fp(const FpCurve& curve, const FpPoint& p, std::uint64_t seed) {
  return halve_over_fp_report(curve, p, seed).halves;
}

std::vector<FpPoint> two_torsion(const FpCurve& curve, std::uint64_t seed) {
  const auto fact = cubic_roots_fp(curve.a2, curve.a4, curve.a6, seed);
  return two_torsion_from_roots(fact.roots);
}

namespace {

void require_small(const FpCurve& curve) {
  if (curve.a4.modulus() > BigInt(kBruteForceLimit)) {
    throw BudgetExceeded("brute force needs p <= " + std::to_string(kBruteForceLimit));
  }
}

}  // namespace

std::vector<FpPoint> all_points(const FpCurve& curve) {
  require_small(curve);
  const auto& field = curve.a4.field();
  const long p = field->p().to_long();
  std::vector<FpPoint> out;
  for (long x = 0; x < p; ++x) {
    const FpElem fx(x, field);
    const auto y = fp_sqrt(curve.rhs(fx));
    if (!y) continue;
    out.emplace_back(fx, *y);
    if (!y->is_zero()) out.emplace_back(fx, -*y);
  }
  return out;
}

std::vector<FpPoint> brute_force_halves(const FpCurve& curve, const FpPoint& p) {
  require_on_curve(curve, p);
  std::vector<FpPoint> out;
  if (p.is_infinity()) out.push_back(p);
  for (const auto& q : all_points(curve)) {
    if (double_point(curve, q) == p) out.push_back(q);
  }
  return out;
}

BigInt group_order_bf(const FpCurve& curve) {
  require_small(curve);
  const auto& field = curve.a4.field();
  const long p = field->p().to_long();
  long count = 1;
  for (long x = 0; x < p; ++x) count += 1 + legendre(curve.rhs(FpElem(x, field)));
  return BigInt(count);
}

FpPoint halve_via_order(const FpCurve& curve, const FpPoint& p, const BigInt& m) {
  if (m.sign() <= 0 || m.is_even()) {
    throw DomainError("halving by group order needs a positive odd order, got " + m.to_string());
  }
  if (!scalar_mul(curve, m, p).is_infinity()) {
    throw DomainError("m * P is not infinity for m = " + m.to_string());
  }
  return scalar_mul(curve, (m + BigInt(1)) / BigInt(2), p);
}

}  // namespace halving
