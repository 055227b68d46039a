#pragma once

// Dense univariate polynomials over F_p, coefficients low degree first.
// Only what the cubic splitter and the quotient-ring fields need.

#include <random>
#include <vector>

#include "halving/bigint.hpp"

namespace halving::detail {

using Poly = std::vector<BigInt>;

void trim(Poly& f);
/// -1 for the zero polynomial.
int degree(const Poly& f);

Poly poly_add(const Poly& a, const Poly& b, const BigInt& p);
Poly poly_sub(const Poly& a, const Poly& b, const BigInt& p);
Poly poly_mul(const Poly& a, const Poly& b, const BigInt& p);

/// Quotient and remainder of a by a nonzero b.
void poly_divmod(const Poly& a, const Poly& b, const BigInt& p, Poly& q, Poly& r);
Poly poly_rem(const Poly& a, const Poly& m, const BigInt& p);
Poly poly_make_monic(const Poly& f, const BigInt& p);
/// Monic gcd (zero polynomial when both inputs are zero).
Poly poly_gcd(Poly a, Poly b, const BigInt& p);
/// base^e mod m.
Poly poly_powmod(const Poly& base, const BigInt& e, const Poly& m, const BigInt& p);
Poly poly_derivative(const Poly& f, const BigInt& p);
BigInt poly_eval(const Poly& f, const BigInt& x, const BigInt& p);

}  // namespace halving::detail
