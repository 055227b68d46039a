#pragma once

// Arbitrary-precision integers and reduced rationals.
//
// BigInt and Rational are thin value types over GMP. Decimal strings are the
// only serialization; Rational additionally accepts "num/den".

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace halving {

class BigInt {
 public:
  BigInt() = default;
  BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal integer. Throws std::invalid_argument.
  static BigInt from_string(std::string_view s);
  std::string to_string() const { return v_.get_str(10); }

  static BigInt pow(const BigInt& base, unsigned long exp);
  /// 10^digits.
  static BigInt pow10(unsigned digits) { return pow(BigInt(10), digits); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool is_even() const { return !is_odd(); }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const { return v_.get_si(); }
  /// Number of bits in |v| (0 for zero).
  std::size_t bit_length() const;
  bool bit(std::size_t i) const { return mpz_tstbit(v_.get_mpz_t(), i) != 0; }

  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }

  /// Least nonnegative residue modulo m > 0.
  BigInt mod(const BigInt& m) const;
  /// Floor division.
  BigInt floor_div(const BigInt& d) const;
  bool divisible_by(const BigInt& d) const;

  friend BigInt gcd(const BigInt& a, const BigInt& b);
  /// (b^e) mod m for e >= 0, m > 0.
  friend BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m);
  /// Inverse modulo m; nullopt when gcd(a, m) != 1.
  friend std::optional<BigInt> invmod(const BigInt& a, const BigInt& m);

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  /// Truncating division (C semantics).
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  /// Truncating remainder (sign follows the dividend).
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

/// Floor square root of n >= 0 together with an exactness flag.
struct IsqrtResult {
  BigInt root;
  bool exact = false;
};

/// Throws DomainError for negative input.
IsqrtResult isqrt(const BigInt& n);

/// Uniform-ish value in [0, n) drawn from rng; n must be positive.
BigInt random_below(const BigInt& n, std::mt19937_64& rng);

/// Exact rational kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : num_(v), den_(1) {}   // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Reduces; throws DomainError on zero denominator.
  Rational(BigInt num, BigInt den);

  /// Accepts "n" or "n/d" with decimal n, d. Throws std::invalid_argument.
  static Rational from_string(std::string_view s);
  std::string to_string() const;

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }

  Rational inverse() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DomainError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Field-element protocol shared with the finite-field types.
inline Rational make_like(const Rational&, long v) { return Rational(v); }
inline bool is_zero(const Rational& q) { return q.is_zero(); }

/// Nonnegative r with r^2 == q when q is the square of a rational, else nullopt.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Distinct rational roots of x^3 + c2 x^2 + c1 x + c0, ascending.
std::vector<Rational> rational_roots_cubic(const Rational& c2, const Rational& c1,
                                           const Rational& c0);

}  // namespace halving
