#include "halving/detail/poly_fp.hpp"

#include <algorithm>

#include "halving/errors.hpp"

namespace halving::detail {

void trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!f[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

Poly poly_add(const Poly& a, const Poly& b, const BigInt& p) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigInt s = i < a.size() ? a[i] : BigInt(0);
    if (i < b.size()) s += b[i];
    r[i] = s.mod(p);
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b, const BigInt& p) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigInt s = i < a.size() ? a[i] : BigInt(0);
    if (i < b.size()) s -= b[i];
    r[i] = s.mod(p);
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const BigInt& p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = c.mod(p);
  trim(r);
  return r;
}

void poly_divmod(const Poly& a, const Poly& b, const BigInt& p, Poly& q, Poly& r) {
  const int db = degree(b);
  if (db < 0) throw DomainError("polynomial division by zero");
  r = a;
  for (auto& c : r) c = c.mod(p);
  trim(r);
  const int da = degree(r);
  if (da < db) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(da - db + 1), BigInt(0));
  const BigInt lead_inv = *invmod(b[static_cast<std::size_t>(db)], p);
  for (int i = da; i >= db; --i) {
    const BigInt coef = (r[static_cast<std::size_t>(i)] * lead_inv).mod(p);
    if (coef.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = coef;
    for (int j = 0; j <= db; ++j) {
      auto& t = r[static_cast<std::size_t>(i - db + j)];
      t = (t - coef * b[static_cast<std::size_t>(j)]).mod(p);
    }
  }
  trim(q);
  trim(r);
}

Poly poly_rem(const Poly& a, const Poly& m, const BigInt& p) {
  Poly q, r;
  poly_divmod(a, m, p, q, r);
  return r;
}

Poly poly_make_monic(const Poly& f, const BigInt& p) {
  Poly r = f;
  trim(r);
  if (r.empty()) return r;
  const BigInt inv = *invmod(r.back(), p);
  for (auto& c : r) c = (c * inv).mod(p);
  return r;
}

Poly poly_gcd(Poly a, Poly b, const BigInt& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(a, p);
}

Poly poly_powmod(const Poly& base, const BigInt& e, const Poly& m, const BigInt& p) {
  Poly result = poly_rem(Poly{BigInt(1)}, m, p);
  Poly b = poly_rem(base, m, p);
  const std::size_t bits = e.bit_length();
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_rem(poly_mul(result, result, p), m, p);
    if (e.bit(i)) result = poly_rem(poly_mul(result, b, p), m, p);
  }
  return result;
}

Poly poly_derivative(const Poly& f, const BigInt& p) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    r[i - 1] = (f[i] * BigInt(static_cast<long>(i))).mod(p);
  }
  trim(r);
  return r;
}

BigInt poly_eval(const Poly& f, const BigInt& x, const BigInt& p) {
  BigInt acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]).mod(p);
  return acc;
}

}  // namespace halving::detail
