#include "halving/prime_field.hpp"

#include <algorithm>
#include <ostream>
#include <random>

#include "halving/detail/poly_fp.hpp"
#include "halving/errors.hpp"

namespace halving {

using detail::Poly;

PrimeFieldPtr PrimeField::make(const BigInt& p) {
  if (p < BigInt(3) || p.is_even()) {
    throw DomainError("modulus must be an odd prime, got " + p.to_string());
  }
  return PrimeFieldPtr(new PrimeField(p));
}

FpElem::FpElem(const BigInt& v, PrimeFieldPtr field)
    : value_(v.mod(field->p())), field_(std::move(field)) {}

void require_same_field(const FpElem& a, const FpElem& b) {
  if (a.field() != b.field() && a.modulus() != b.modulus()) {
    throw ContextMismatch("F_p elements with different moduli " + a.modulus().to_string() +
                          " and " + b.modulus().to_string());
  }
}

FpElem FpElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_p");
  return FpElem(*invmod(value_, modulus()), field_);
}

FpElem FpElem::pow(const BigInt& e) const {
  if (e.sign() < 0) return inverse().pow(-e);
  return FpElem(powmod(value_, e, modulus()), field_);
}

FpElem FpElem::operator-() const { return FpElem(-value_, field_); }

FpElem operator+(const FpElem& a, const FpElem& b) {
  require_same_field(a, b);
  return FpElem(a.value_ + b.value_, a.field_);
}

FpElem operator-(const FpElem& a, const FpElem& b) {
  require_same_field(a, b);
  return FpElem(a.value_ - b.value_, a.field_);
}

FpElem operator*(const FpElem& a, const FpElem& b) {
  require_same_field(a, b);
  return FpElem(a.value_ * b.value_, a.field_);
}

FpElem operator/(const FpElem& a, const FpElem& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const FpElem& a, const FpElem& b) {
  return a.value_ == b.value_ && a.modulus() == b.modulus();
}

std::ostream& operator<<(std::ostream& os, const FpElem& a) { return os << a.value(); }

int legendre(const FpElem& a) {
  if (a.is_zero()) return 0;
  const BigInt e = (a.modulus() - BigInt(1)) / BigInt(2);
  return a.pow(e).value() == BigInt(1) ? 1 : -1;
}

namespace {

FpElem canonical(const FpElem& r) {
  const FpElem neg = -r;
  return neg.value() < r.value() ? neg : r;
}

std::optional<FpElem> verified(const FpElem& r, const FpElem& a) {
  if (r * r != a) return std::nullopt;
  return canonical(r);
}

}  // namespace

std::optional<FpElem> fp_sqrt_exponent(const FpElem& a) {
  if (!a.field()->is_3_mod_4()) return std::nullopt;
  const BigInt e = (a.modulus() + BigInt(1)) / BigInt(4);
  return verified(a.pow(e), a);
}

std::optional<FpElem> fp_sqrt_tonelli(const FpElem& a) {
  if (a.is_zero()) return a;
  if (legendre(a) != 1) return std::nullopt;
  const BigInt& p = a.modulus();
  BigInt q = p - BigInt(1);
  unsigned s = 0;
  while (q.is_even()) {
    q = q / BigInt(2);
    ++s;
  }
  long z = 2;
  while (legendre(FpElem(z, a.field())) != -1) ++z;

  FpElem c = FpElem(z, a.field()).pow(q);
  FpElem r = a.pow((q + BigInt(1)) / BigInt(2));
  FpElem t = a.pow(q);
  unsigned m = s;
  const FpElem one(1, a.field());
  while (t != one) {
    unsigned i = 0;
    FpElem t2 = t;
    while (t2 != one) {
      t2 = t2 * t2;
      ++i;
    }
    FpElem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  return verified(r, a);
}

std::optional<FpElem> fp_sqrt(const FpElem& a) {
  if (a.is_zero()) return a;
  if (legendre(a) != 1) return std::nullopt;
  if (a.field()->is_3_mod_4()) return fp_sqrt_exponent(a);
  return fp_sqrt_tonelli(a);
}

// ---------------------------------------------------------------------------
// Cubic factorization: gcd(X^p - X, f) isolates the product of the linear
// factors, which is then split by random equal-degree splitting.

namespace {

void split_linear(const Poly& h, const BigInt& p, std::mt19937_64& rng,
                  std::vector<BigInt>& roots) {
  const int deg = detail::degree(h);
  if (deg <= 0) return;
  if (deg == 1) {
    roots.push_back((-h[0]).mod(p));
    return;
  }
  const BigInt half = (p - BigInt(1)) / BigInt(2);
  for (;;) {
    const Poly probe{random_below(p, rng), BigInt(1)};  // X + a
    Poly g = detail::poly_powmod(probe, half, h, p);
    g = detail::poly_sub(g, Poly{BigInt(1)}, p);
    g = detail::poly_gcd(g, h, p);
    const int dg = detail::degree(g);
    if (dg > 0 && dg < deg) {
      Poly q, r;
      detail::poly_divmod(h, g, p, q, r);
      split_linear(g, p, rng, roots);
      split_linear(detail::poly_make_monic(q, p), p, rng, roots);
      return;
    }
  }
}

}  // namespace

CubicFactorization cubic_roots_fp(const FpElem& c2, const FpElem& c1, const FpElem& c0,
                                  std::uint64_t seed) {
  require_same_field(c2, c1);
  require_same_field(c1, c0);
  const auto& field = c0.field();
  const BigInt& p = field->p();
  const Poly f{c0.value(), c1.value(), c2.value(), BigInt(1)};

  std::mt19937_64 rng(seed);
  const Poly x{BigInt(0), BigInt(1)};
  const Poly xp = detail::poly_powmod(x, p, f, p);
  const Poly linear_part = detail::poly_gcd(detail::poly_sub(xp, x, p), f, p);

  std::vector<BigInt> raw_roots;
  split_linear(linear_part, p, rng, raw_roots);
  std::sort(raw_roots.begin(), raw_roots.end());

  CubicFactorization out;
  for (const auto& r : raw_roots) out.roots.emplace_back(r, field);
  out.repeated_root = detail::degree(detail::poly_gcd(f, detail::poly_derivative(f, p), p)) > 0;

  auto to_elems = [&](const Poly& poly) {
    std::vector<FpElem> v;
    for (const auto& c : poly) v.emplace_back(c, field);
    return v;
  };

  // Peel linear factors, with multiplicity, off f.
  Poly rest = f;
  for (const auto& r : raw_roots) {
    const Poly lin{(-r).mod(p), BigInt(1)};
    for (;;) {
      Poly q, rem;
      detail::poly_divmod(rest, lin, p, q, rem);
      if (!rem.empty()) break;
      out.factors.push_back(to_elems(lin));
      out.factor_degrees.push_back(1);
      rest = q;
      if (detail::degree(rest) == 0) break;
    }
  }
  if (detail::degree(rest) > 0) {
    out.factors.push_back(to_elems(rest));
    out.factor_degrees.push_back(detail::degree(rest));
  }
  std::sort(out.factor_degrees.begin(), out.factor_degrees.end());
  return out;
}

}  // namespace halving
