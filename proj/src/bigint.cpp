#include "halving/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "halving/errors.hpp"

namespace halving {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

BigInt BigInt::from_string(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(mpz_class(std::string(s), 10));
}

BigInt BigInt::pow(const BigInt& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
  return BigInt(r);
}

std::size_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

BigInt BigInt::mod(const BigInt& m) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
  return BigInt(r);
}

BigInt BigInt::floor_div(const BigInt& d) const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return BigInt(r);
}

bool BigInt::divisible_by(const BigInt& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(r);
}

BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), b.v_.get_mpz_t(), e.v_.get_mpz_t(), m.v_.get_mpz_t());
  return BigInt(r);
}

std::optional<BigInt> invmod(const BigInt& a, const BigInt& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.v_.get_mpz_t(), m.v_.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return BigInt(r);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  mpz_class r;
  mpz_tdiv_q(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(r);
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return BigInt(r);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

IsqrtResult isqrt(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("isqrt of negative integer " + n.to_string());
  mpz_class root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.raw().get_mpz_t());
  return {BigInt(root), rem == 0};
}

BigInt random_below(const BigInt& n, std::mt19937_64& rng) {
  if (n.sign() <= 0) throw DomainError("random_below needs a positive bound");
  // 64 surplus bits keep the modulo bias negligible.
  const std::size_t words = n.bit_length() / 64 + 2;
  mpz_class acc = 0;
  for (std::size_t i = 0; i < words; ++i) {
    acc <<= 64;
    const std::uint64_t w = rng();
    acc += mpz_class(static_cast<unsigned long>(w >> 32)) << 32;
    acc += static_cast<unsigned long>(w & 0xffffffffULL);
  }
  return BigInt(acc).mod(n);
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::from_string(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
  BigInt den = BigInt::from_string(s.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  return Rational(BigInt::from_string(s.substr(0, slash)), std::move(den));
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational");
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  // Reduced form means q is a square iff both parts are.
  const auto n = isqrt(q.num());
  if (!n.exact) return std::nullopt;
  const auto d = isqrt(q.den());
  if (!d.exact) return std::nullopt;
  return Rational(n.root, d.root);
}

// ---------------------------------------------------------------------------
// Rational roots of a cubic.
//
// After clearing denominators to A3 x^3 + A2 x^2 + A1 x + A0 and substituting
// x = y / A3, rational roots correspond to integer roots of the monic
//   g(y) = y^3 + A2 y^2 + A1 A3 y + A0 A3^2.
// Integer roots are located exactly: the integers around the two critical
// points are tested directly and every remaining stretch, on which g is
// monotone, is bisected.

namespace {

struct MonicCubic {
  BigInt b, c, d;
  BigInt operator()(const BigInt& y) const { return ((y + b) * y + c) * y + d; }
};

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -((-a).floor_div(b)); }

void bisect_monotone(const MonicCubic& g, BigInt lo, BigInt hi, std::vector<BigInt>& out) {
  if (lo > hi) return;
  const int slo = g(lo).sign();
  const int shi = g(hi).sign();
  if (slo == 0) out.push_back(lo);
  if (shi == 0) out.push_back(hi);
  if (slo == 0 || shi == 0 || slo == shi) return;
  while (hi - lo > BigInt(1)) {
    BigInt mid = (lo + hi).floor_div(BigInt(2));
    const int sm = g(mid).sign();
    if (sm == 0) {
      out.push_back(mid);
      return;
    }
    if (sm == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
}

std::vector<BigInt> integer_roots(const MonicCubic& g) {
  std::vector<BigInt> roots;
  const BigInt bound = BigInt(1) + std::max({g.b.abs(), g.c.abs(), g.d.abs()});
  const BigInt crit_disc = g.b * g.b - BigInt(3) * g.c;
  if (crit_disc.sign() <= 0) {
    bisect_monotone(g, -bound, bound, roots);
  } else {
    const BigInt s = isqrt(crit_disc).root;
    const BigInt three(3);
    // Integer windows that certainly contain the two real critical points.
    const BigInt l1 = (-g.b - s - BigInt(1)).floor_div(three) - BigInt(1);
    const BigInt u1 = ceil_div(-g.b - s, three) + BigInt(1);
    const BigInt l2 = (-g.b + s).floor_div(three) - BigInt(1);
    const BigInt u2 = ceil_div(-g.b + s + BigInt(1), three) + BigInt(1);
    for (BigInt y = l1; y <= u1; y += BigInt(1)) {
      if (g(y).is_zero()) roots.push_back(y);
    }
    for (BigInt y = std::max(l2, u1 + BigInt(1)); y <= u2; y += BigInt(1)) {
      if (g(y).is_zero()) roots.push_back(y);
    }
    bisect_monotone(g, -bound, l1 - BigInt(1), roots);
    bisect_monotone(g, u1 + BigInt(1), l2 - BigInt(1), roots);
    bisect_monotone(g, std::max(u2, u1) + BigInt(1), bound, roots);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

BigInt lcm(const BigInt& a, const BigInt& b) { return (a * b).abs() / gcd(a, b); }

}  // namespace

std::vector<Rational> rational_roots_cubic(const Rational& c2, const Rational& c1,
                                           const Rational& c0) {
  const BigInt a3 = lcm(lcm(c2.den(), c1.den()), c0.den());
  const BigInt a2 = c2.num() * (a3 / c2.den());
  const BigInt a1 = c1.num() * (a3 / c1.den());
  const BigInt a0 = c0.num() * (a3 / c0.den());
  const MonicCubic g{a2, a1 * a3, a0 * a3 * a3};

  std::vector<Rational> out;
  for (const BigInt& y : integer_roots(g)) out.emplace_back(y, a3);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace halving
