#pragma once

#include <optional>

#include "halving/bigint.hpp"

namespace halving::detail {

/// Square root in a finite field of odd order q, given a non-residue z.
/// Returns some root (not canonicalized) or nullopt for non-squares.
template <class E>
std::optional<E> tonelli_shanks(const E& a, const BigInt& q, const E& z) {
  if (is_zero(a)) return a;
  const E one = make_like(a, 1);

  BigInt odd = q - BigInt(1);
  unsigned s = 0;
  while (odd.is_even()) {
    odd = odd / BigInt(2);
    ++s;
  }
  // r = a^((odd+1)/2), t = a^odd from a single exponentiation.
  const E x = a.pow((odd - BigInt(1)) / BigInt(2));
  E r = a * x;
  E t = r * x;
  E c = z.pow(odd);
  unsigned m = s;
  while (t != one) {
    unsigned i = 0;
    E t2 = t;
    while (t2 != one) {
      t2 = t2 * t2;
      if (++i == m) return std::nullopt;  // a is not a square
    }
    E b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  return r;
}

/// Square-and-multiply for field elements, e >= 0.
template <class E>
E field_pow(const E& base, const BigInt& e) {
  E result = make_like(base, 1);
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    result = result * result;
    if (e.bit(i)) result = result * base;
  }
  return result;
}

}  // namespace halving::detail
