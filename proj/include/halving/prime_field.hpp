#pragma once

// Arithmetic in F_p for odd primes p, quadratic residues, square roots and
// the factorization shape of cubics over F_p.
//
// Primality of p is the caller's contract and is never checked.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "halving/bigint.hpp"

namespace halving {

class PrimeField;
using PrimeFieldPtr = std::shared_ptr<const PrimeField>;

class PrimeField {
 public:
  /// p must be an odd prime >= 3 (oddness is checked, primality is not).
  static PrimeFieldPtr make(const BigInt& p);

  const BigInt& p() const { return p_; }
  bool is_3_mod_4() const { return p_.mod(BigInt(4)) == BigInt(3); }

 private:
  explicit PrimeField(BigInt p) : p_(std::move(p)) {}
  BigInt p_;
};

class FpElem {
 public:
  FpElem(const BigInt& v, PrimeFieldPtr field);
  FpElem(long v, PrimeFieldPtr field) : FpElem(BigInt(v), std::move(field)) {}

  const BigInt& value() const { return value_; }
  const PrimeFieldPtr& field() const { return field_; }
  const BigInt& modulus() const { return field_->p(); }
  bool is_zero() const { return value_.is_zero(); }

  /// Throws DomainError for zero.
  FpElem inverse() const;
  /// Square-and-multiply; negative exponents invert first.
  FpElem pow(const BigInt& e) const;

  FpElem operator-() const;
  friend FpElem operator+(const FpElem& a, const FpElem& b);
  friend FpElem operator-(const FpElem& a, const FpElem& b);
  friend FpElem operator*(const FpElem& a, const FpElem& b);
  friend FpElem operator/(const FpElem& a, const FpElem& b);
  FpElem& operator+=(const FpElem& o) { return *this = *this + o; }
  FpElem& operator-=(const FpElem& o) { return *this = *this - o; }
  FpElem& operator*=(const FpElem& o) { return *this = *this * o; }

  /// Elements of different moduli compare unequal.
  friend bool operator==(const FpElem& a, const FpElem& b);
  /// Orders by residue; used for canonical output order.
  friend bool operator<(const FpElem& a, const FpElem& b) { return a.value_ < b.value_; }

 private:
  BigInt value_;
  PrimeFieldPtr field_;
};

std::ostream& operator<<(std::ostream& os, const FpElem& a);

inline FpElem make_like(const FpElem& ref, long v) { return FpElem(v, ref.field()); }
inline bool is_zero(const FpElem& a) { return a.is_zero(); }

/// Throws ContextMismatch unless a and b share a modulus.
void require_same_field(const FpElem& a, const FpElem& b);

/// Euler criterion: 0, +1 or -1.
int legendre(const FpElem& a);

/// Canonical square root: the smaller of r and p - r. nullopt for non-residues.
std::optional<FpElem> fp_sqrt(const FpElem& a);
/// The a^((p+1)/4) route; only valid for p = 3 mod 4, nullopt otherwise.
std::optional<FpElem> fp_sqrt_exponent(const FpElem& a);
/// Tonelli-Shanks route, any odd p.
std::optional<FpElem> fp_sqrt_tonelli(const FpElem& a);

/// Shape of the factorization of a monic cubic over F_p.
struct CubicFactorization {
  std::vector<FpElem> roots;                 // distinct roots in F_p, ascending
  std::vector<int> factor_degrees;           // ascending: {1,1,1}, {1,2} or {3}
  std::vector<std::vector<FpElem>> factors;  // monic irreducible factors, low degree first
  bool repeated_root = false;                // cubic not squarefree
};

/// Factors X^3 + c2 X^2 + c1 X + c0. Randomized splitting draws from seed only;
/// the result does not depend on it.
CubicFactorization cubic_roots_fp(const FpElem& c2, const FpElem& c1, const FpElem& c0,
                                  std::uint64_t seed);

}  // namespace halving
