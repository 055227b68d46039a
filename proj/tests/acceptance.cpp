// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "halving/codec.hpp"
#include "halving/complex_check.hpp"
#include "halving/finite_halving.hpp"
#include "halving/rational_halving.hpp"
#include "test_support.hpp"

using namespace halving;

namespace {

using Q = Rational;
using PQ = Point<Rational>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Fail {
  bool& flag;
  std::ostringstream& log;
  void operator()(bool ok, const std::string& what) {
    if (!ok && flag) log << "first failure: " << what << "; ";
    flag = flag && ok;
  }
};

template <class P>
std::set<std::pair<std::string, std::string>> keys(const std::vector<P>& pts) {
  return testing::point_set(pts);
}

// ---------------------------------------------------------------- criterion 1

Outcome example_over_q() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  const Curve<Q> e6 = make_a46(Q(-36), Q(0));
  const auto split = congruent_curve(BigInt(6));
  const PQ p(Q(-3), Q(9));
  const PQ two_p = double_point(e6, p);
  check(two_p == PQ(Q(25, 4), Q(-35, 8)), "2(-3,9) != (25/4,-35/8)");
  const auto halves = rational_halves(split, two_p);
  const std::vector<PQ> expected{PQ(Q(18), Q(-72)), PQ(Q(-2), Q(-8)), PQ(Q(-3), Q(9)),
                                 PQ(Q(12), Q(36))};
  check(halves.size() == 4 && keys(halves) == keys(expected), "halves of (25/4,-35/8)");
  check(rational_halves(split, p).empty(), "(-3,9) returned halves");
  log << "halves(25/4,-35/8) = {(18,-72),(-2,-8),(-3,9),(12,36)}, halves(-3,9) = {}";
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 2

const char* kP2 = "17000000000000071";

Outcome example_over_fp() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  const auto f = PrimeField::make(BigInt::from_string(kP2));
  const FpCurve c = make_fp_curve(f, BigInt(0), BigInt(17), BigInt(71));
  const BigInt y0 = BigInt::from_string("4145148307074498");
  std::optional<FpPoint> p;
  std::string chosen;
  int on_count = 0;
  for (const char* x0 : {"17071", "1700000000000071"}) {
    const FpPoint cand(FpElem(BigInt::from_string(x0), f), FpElem(y0, f));
    if (on_curve(c, cand)) {
      ++on_count;
      p = cand;
      chosen = x0;
    }
  }
  check(on_count == 1, "expected exactly one x0 reading on the curve");
  if (!p) {
    o.detail = log.str();
    return o;
  }
  const auto halves = halve_over_fp(c, *p, 0);
  check(halves.size() == 1, "expected exactly one half");
  if (halves.size() == 1) {
    const FpPoint& q = halves[0];
    check(double_point(c, q) == *p, "2Q != P");
    check(halve_via_order(c, *p, BigInt::from_string("16999999816127027")) == q,
          "order-based half differs");
    const FpPoint reference(FpElem(BigInt::from_string("4631223433830370"), f),
                          FpElem(BigInt::from_string("13664114850453464"), f));
    log << "x0 = " << chosen << " is on the curve; Q = (" << q.x() << ", " << q.y()
        << "); matches reference half: " << (q == reference ? "yes" : "no");
  }
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 3

std::vector<FpCurve> oracle_curves() {
  std::vector<FpCurve> out;
  std::mt19937_64 rng(20260301);
  for (long p : {7L, 11L, 19L, 23L, 31L}) {
    const auto f = PrimeField::make(BigInt(p));
    for (int i = 0; i < 10; ++i) out.push_back(testing::random_fp_curve(f, rng, i % 3 == 2));
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  long points = 0;
  int idx = 0;
  for (const auto& c : oracle_curves()) {
    auto pts = all_points(c);
    pts.push_back(FpPoint::infinity());
    for (const auto& p : pts) {
      const bool same = keys(halve_over_fp(c, p, idx)) == keys(brute_force_halves(c, p));
      std::ostringstream what;
      what << "p=" << c.a4.modulus() << " a2=" << c.a2 << " a4=" << c.a4 << " a6=" << c.a6;
      check(same, what.str());
      ++points;
    }
    ++idx;
  }
  log << idx << " curves, " << points << " points, halve_over_fp = brute force on each";
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 4

bool three_squares(const SplitCurveQ& c, const Q& x0) {
  return rational_sqrt(x0 - c.e0()) && rational_sqrt(x0 - c.e1()) && rational_sqrt(x0 - c.e2());
}

Outcome rational_both_directions() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  std::mt19937_64 rng(20260302);
  int forward = 0, backward = 0, tries = 0;
  while (forward < 500) {
    const auto inst = testing::random_split_curve_with_point(rng);
    const SplitCurveQ c(inst.e0, inst.e1, inst.e2);
    const PQ p = double_point(c.curve(), inst.q);
    if (p.is_infinity()) continue;
    const auto halves = rational_halves(c, p);
    check(is_halvable_q(c, p).halvable, "2Q not reported halvable");
    check(std::find(halves.begin(), halves.end(), inst.q) != halves.end(), "Q missing from halves");
    for (const auto& h : halves) check(double_point(c.curve(), h) == p, "returned half wrong");
    ++forward;
  }
  while (backward < 500 && tries < 100000) {
    ++tries;
    const auto inst = testing::random_split_curve_with_point(rng);
    const SplitCurveQ c(inst.e0, inst.e1, inst.e2);
    if (three_squares(c, inst.q.x())) continue;
    check(!is_halvable_q(c, inst.q).halvable, "non-square difference reported halvable");
    check(rational_halves(c, inst.q).empty(), "halves returned for non-halvable point");
    ++backward;
  }
  check(backward == 500, "could not sample 500 non-halvable points");
  log << forward << " doubled points halved, " << backward << " non-halvable points gave {}";
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 5

Outcome uniqueness_odd_order() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  int curves = 0, odd = 0;
  for (long p : {7L, 11L, 19L, 23L}) {
    const auto f = PrimeField::make(BigInt(p));
    for (long a4 = 0; a4 < p; ++a4) {
      for (long a6 = 0; a6 < p; ++a6) {
        const FpCurve c = make_fp_curve(f, BigInt(0), BigInt(a4), BigInt(a6));
        if (!validate(c).ok) continue;
        const FpHalver h(c, 0);
        auto pts = all_points(c);
        const bool is_odd = BigInt(static_cast<long>(pts.size() + 1)).is_odd();
        pts.push_back(FpPoint::infinity());
        bool unique = true;
        for (const auto& pt : pts) unique = unique && h.halve(pt).size() == 1;
        const bool no_tt = two_torsion(c).empty();
        std::ostringstream what;
        what << "p=" << p << " a4=" << a4 << " a6=" << a6;
        check(unique == is_odd && is_odd == no_tt, what.str());
        ++curves;
        odd += is_odd ? 1 : 0;
      }
    }
  }
  log << curves << " curves (" << odd << " of odd order), unique <=> odd <=> no 2-torsion";
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 6

Outcome meeting_point_and_alt_formulas() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  int meeting_checked = 0, alt_checked = 0, skipped = 0;

  {
    const Curve<Q> e6 = make_a46(Q(-36), Q(0));
    const auto r = split_two_division_cubic(e6);
    const Q x0(25, 4);
    const PQ p(x0, Q(-35, 8));
    const auto cands = candidate_xs(RationalField{}, x0, r).value();
    const Q xs = meeting_point_x(x0, r);
    check(xs == e6.a4 / x0, "x_S != a4/x0");
    for (const auto& [a, b] : {std::pair{cands.x11, cands.x12}, std::pair{cands.x21, cands.x22}}) {
      const auto qa = recover_y(RationalField{}, e6, a, p);
      const auto qb = recover_y(RationalField{}, e6, b, p);
      check(qa.size() == 1 && qb.size() == 1, "pair halves missing");
      if (qa.size() == 1 && qb.size() == 1) {
        check(add(e6, qa[0], qb[0]).x() == xs, "x(Q+Q') != x_S over Q");
        ++meeting_checked;
      }
    }
    const auto alt = candidate_xs_alt(RationalField{}, e6, x0, r);
    check(alt && same_candidate_set(*alt, cands), "alternative candidates differ over Q");
    ++alt_checked;
  }

  {
    const auto f = PrimeField::make(BigInt::from_string(kP2));
    const FpCurve c = make_fp_curve(f, BigInt(0), BigInt(17), BigInt(71));
    const FpPoint p(FpElem(BigInt(17071), f),
                    FpElem(BigInt::from_string("4145148307074498"), f));
    const auto rep = halve_over_fp_report(c, p, 0);
    check(rep.alt_formulas_agree == true, "alternative candidates differ on the large-prime example");
    ++alt_checked;
  }

  int idx = 0;
  for (const auto& c : oracle_curves()) {
    const FpHalver h(c, idx++);
    for (const auto& pt : all_points(c)) {
      const auto rep = h.report(pt);
      if (rep.halves.size() < 2) continue;
      check(rep.alt_formulas_agree == true, "alternative candidates differ over F_p");
      ++alt_checked;
      if (rep.meeting_point_verified) {
        check(*rep.meeting_point_verified, "x(Q11+Q12) != x_S over F_p");
        ++meeting_checked;
      } else {
        ++skipped;  // x0 = d, or the paired halves are not both over F_p
      }
    }
  }
  check(meeting_checked > 0, "no meeting-point instance checked");
  log << meeting_checked << " meeting-point checks, " << alt_checked
      << " candidate-set comparisons, " << skipped << " instances without an F_p pair";
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 7

// Uniform on the disk of radius 1000.
Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const Complex z(u(rng), u(rng));
    if (std::abs(z) <= 1.0) return 1e3 * z;
  }
}

Outcome complex_backend() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  std::mt19937_64 rng(20260307);
  double worst_cardano = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex a4 = random_complex(rng), a6 = random_complex(rng);
    const Complex d = cardano_d(resolvent_r(a4, a6), a4, a6);
    const double tol = 1e-9 * (1.0 + std::abs(a4) + std::abs(a6));
    const double res = std::abs(d * d * d + a4 * d + a6);
    worst_cardano = std::max(worst_cardano, res / tol);
    check(res <= tol, "cardano residual above tolerance");
  }

  // Relative doubling error recomputed here from the returned halves.
  auto doubling_error = [](Complex a4, Complex x0, Complex y0, const NumericHalving& h) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex x = h.candidates[i], y = h.ys[i];
      const Complex l = (3.0 * x * x + a4) / (2.0 * y);
      const Complex x2 = l * l - 2.0 * x;
      const Complex y2 = l * (x - x2) - y;
      worst = std::max({worst, std::abs(x2 - x0) / std::max(1.0, std::abs(x0)),
                        std::abs(y2 - y0) / std::max(1.0, std::abs(y0))});
    }
    return worst;
  };

  double worst_halving = 0.0;
  int instances = 0;
  {
    const auto h = verify_halving_numeric(-36.0, 0.0, 6.25, -4.375);
    const double e = std::max(h.residual, doubling_error(-36.0, 6.25, -4.375, h));
    worst_halving = std::max(worst_halving, e);
    check(e <= 1e-8, "E6 numeric halving residual");
    ++instances;
  }
  // Well separated roots and a point kept away from them.
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  while (instances < 200) {
    const Complex e0(u(rng), u(rng)), e1(u(rng), u(rng));
    const Complex e2 = -e0 - e1;
    if (std::min({std::abs(e0 - e1), std::abs(e1 - e2), std::abs(e0 - e2)}) < 1.0) continue;
    const Complex x0(u(rng), u(rng));
    if (std::min({std::abs(x0 - e0), std::abs(x0 - e1), std::abs(x0 - e2)}) < 1.0) continue;
    const Complex a4 = e0 * e1 + e1 * e2 + e2 * e0;
    const Complex a6 = -e0 * e1 * e2;
    const Complex y0 = std::sqrt((x0 * x0 + a4) * x0 + a6);
    const auto h = verify_halving_numeric(a4, a6, x0, y0);
    const double e = std::max(h.residual, doubling_error(a4, x0, y0, h));
    worst_halving = std::max(worst_halving, e);
    check(e <= 1e-8, "numeric halving residual");
    ++instances;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "1000 cardano samples (worst residual/tolerance %.2e), %d halvings (worst %.2e)",
                worst_cardano, instances, worst_halving);
  log << buf;
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 8

Outcome codec_roundtrip() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  const auto f = PrimeField::make(BigInt(9973));
  const FpCurve c = make_fp_curve(f, BigInt(0), BigInt(1), BigInt(11));
  const BigInt order = group_order_bf(c);
  check(order.is_odd(), "fixture order is even");
  const FpElem bx(BigInt(3), f);
  const CodecParams params{c, FpPoint(bx, fp_sqrt(c.rhs(bx)).value()), order, 2};
  validate_codec_params(params);
  std::mt19937_64 rng(20260308);
  const auto pts = all_points(c);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const FpPoint q = pts[pick(rng)];
    std::string bits;
    const std::uint64_t raw = rng();
    for (int b = 63; b >= 0; --b) bits.push_back(((raw >> b) & 1U) ? '1' : '0');
    const CodecKey key = CodecKey::from_binary(bits);
    const FpPoint ct = encrypt(q, key, params);
    const FpPoint closed = add(c, scalar_mul(c, BigInt::pow(BigInt(2), 64), q),
                               scalar_mul(c, key.value(), params.base));
    check(ct == closed, "closed form mismatch");
    check(decrypt(ct, key, params) == q, "decrypt(encrypt(Q)) != Q");
  }
  log << "p = 9973, y^2 = x^3 + x + 11, order " << order << ", 100 pairs with 64-bit keys";
  o.detail = log.str();
  return o;
}

// ---------------------------------------------------------------- criterion 9

template <class E, class Key>
bool flips_agree(const E& x0, const SqrtTriple<E>& s, Key&& key) {
  std::set<decltype(key(x0))> base;
  for (const auto& x : candidates_from_sqrts(x0, s).all()) base.insert(key(x));
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::set<decltype(key(x0))> other;
    for (const auto& x : candidates_from_sqrts(x0, with_signs(s, mask)).all()) {
      other.insert(key(x));
    }
    if (other != base) return false;
  }
  return true;
}

Outcome sign_flip_invariance() {
  Outcome o;
  std::ostringstream log;
  Fail check{o.pass, log};
  std::mt19937_64 rng(20260309);
  int n_q = 0, n_fp = 0, n_ext = 0, n_c = 0;

  while (n_q < 40) {
    const auto inst = testing::random_split_curve_with_point(rng);
    const SplitCurveQ c(inst.e0, inst.e1, inst.e2);
    const PQ p = double_point(c.curve(), inst.q);
    if (p.is_infinity()) continue;
    const auto s = sqrt_triple(RationalField{}, p.x(), c.root_triple());
    check(s.has_value(), "doubled rational point without square roots");
    if (!s) continue;
    check(flips_agree(p.x(), *s, [](const Q& x) { return x.to_string(); }), "Q backend");
    ++n_q;
  }

  const auto f = PrimeField::make(BigInt(1000003));
  while (n_fp < 30) {
    const FpCurve c = testing::random_fp_curve(f, rng);
    const FpHalver h(c, 0);
    if (h.split().ctx->degree() != 1) continue;
    const FpElem x0(random_below(f->p(), rng), f);
    const auto r = root_triple_from_d(FpField{}, c, h.split().factorization.roots.at(0));
    if (!r) continue;
    const auto s = sqrt_triple(FpField{}, x0, *r);
    if (!s) continue;
    check(flips_agree(x0, *s, [](const FpElem& x) { return x.value().to_string(); }),
          "F_p backend");
    ++n_fp;
  }

  {
    const auto big = PrimeField::make(BigInt::from_string(kP2));
    const FpCurve c = make_fp_curve(big, BigInt(0), BigInt(17), BigInt(71));
    const auto split = split_two_division_cubic(c, 0);
    const ExtField ext{split.ctx};
    while (n_ext < 15) {
      const ExtElem x0 = split.ctx->embed(FpElem(random_below(big->p(), rng), big));
      const auto s = sqrt_triple(ext, x0, split.roots);
      if (!s) continue;
      check(flips_agree(x0, *s, [](const ExtElem& x) { return x.to_string(); }),
            "F_p^3 backend");
      ++n_ext;
    }
  }

  std::uniform_real_distribution<double> u(-10.0, 10.0);
  while (n_c < 15) {
    const Complex a4(u(rng), u(rng)), a6(u(rng), u(rng)), x0(u(rng), u(rng));
    const auto e = numeric_roots(a4, a6);
    const SqrtTriple<Complex> s{std::sqrt(x0 - e[0]), std::sqrt(x0 - e[1]), std::sqrt(x0 - e[2])};
    check(flips_agree(x0, s,
                      [](const Complex& z) { return std::pair{z.real(), z.imag()}; }),
          "complex backend");
    ++n_c;
  }
  log << n_q << " over Q, " << n_fp << " over F_p, " << n_ext << " over F_p^3, " << n_c
      << " over C; all 8 sign choices give one candidate set";
  o.detail = log.str();
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, 1.0, example_over_q},       {2, 5.0, example_over_fp},
      {3, 60.0, oracle_equivalence},  {4, 0.0, rational_both_directions},
      {5, 0.0, uniqueness_odd_order},   {6, 0.0, meeting_point_and_alt_formulas},
      {7, 10.0, complex_backend},     {8, 0.0, codec_roundtrip},
      {9, 0.0, sign_flip_invariance},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    std::printf("criterion %d: %s  [%.3f s]  %s\n", c.id, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
