#pragma once

// Quotient-ring fields F_{p^D} = F_p[X]/(g) for D in {1, 2, 3}, and the
// quadratic tower F_{p^{2D}} = F_{p^D}[Y]/(Y^2 - ns) used when a square root
// does not exist in F_{p^D}.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "halving/bigint.hpp"
#include "halving/prime_field.hpp"

namespace halving {

class FieldCtx;
class TowerCtx;
class ExtElem;
class TowerElem;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;
using TowerCtxPtr = std::shared_ptr<const TowerCtx>;

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  /// F_p itself, as the degree-1 quotient F_p[X]/(X).
  static FieldCtxPtr prime(PrimeFieldPtr fp);
  /// F_p[X]/(g) for a monic g given low degree first (size D + 1, D in 1..3).
  /// Throws DomainError when g is not monic or not irreducible.
  static FieldCtxPtr make(PrimeFieldPtr fp, const std::vector<FpElem>& g);

  const PrimeFieldPtr& prime_field() const { return fp_; }
  const BigInt& p() const { return fp_->p(); }
  int degree() const { return degree_; }
  /// Monic modulus, low degree first, size degree() + 1.
  const std::vector<BigInt>& modulus() const { return modulus_; }
  /// Field order p^D.
  const BigInt& order() const { return order_; }
  /// First quadratic non-residue found by choose_nonresidue.
  ExtElem nonresidue() const;

  ExtElem zero() const;
  ExtElem one() const;
  ExtElem from_int(long v) const;
  ExtElem from_int(const BigInt& v) const;
  ExtElem embed(const FpElem& a) const;
  /// The class of X (only meaningful for D > 1).
  ExtElem generator() const;
  ExtElem from_coeffs(std::vector<BigInt> coeffs) const;

 private:
  FieldCtx(PrimeFieldPtr fp, std::vector<BigInt> modulus);

  PrimeFieldPtr fp_;
  std::vector<BigInt> modulus_;
  int degree_;
  BigInt order_;
  // Stored as raw coordinates: an ExtElem would keep its own context alive.
  std::vector<BigInt> nonresidue_;
};

/// Element of F_{p^D}: coefficients in the basis 1, X, ..., X^{D-1}.
class ExtElem {
 public:
  ExtElem(std::vector<BigInt> coeffs, FieldCtxPtr ctx);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const FieldCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const;

  ExtElem inverse() const;
  ExtElem pow(const BigInt& e) const;

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  friend ExtElem operator/(const ExtElem& a, const ExtElem& b);
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
  friend bool operator==(const ExtElem& a, const ExtElem& b);

  /// "c2*X^2 + c1*X + c0" (the constant alone when D = 1).
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
  FieldCtxPtr ctx_;
};

std::ostream& operator<<(std::ostream& os, const ExtElem& a);

inline ExtElem make_like(const ExtElem& ref, long v) { return ref.ctx()->from_int(v); }
inline bool is_zero(const ExtElem& a) { return a.is_zero(); }

/// Lexicographic order on coefficient vectors, constant term first.
bool canonical_less(const ExtElem& a, const ExtElem& b);

class TowerCtx : public std::enable_shared_from_this<TowerCtx> {
 public:
  /// Y^2 = ns with ns = choose_nonresidue(base, seed).
  static TowerCtxPtr make(FieldCtxPtr base, std::uint64_t seed);

  const FieldCtxPtr& base() const { return base_; }
  ExtElem ns() const { return base_->from_coeffs(ns_); }
  /// p^{2D}.
  const BigInt& order() const { return order_; }
  TowerElem nonresidue() const;

  TowerElem zero() const;
  TowerElem one() const;
  TowerElem from_int(long v) const;
  TowerElem embed(const ExtElem& a) const;
  /// The class of Y.
  TowerElem y() const;

 private:
  TowerCtx(FieldCtxPtr base, std::vector<BigInt> ns);

  FieldCtxPtr base_;
  std::vector<BigInt> ns_;
  BigInt order_;
  std::vector<BigInt> nonresidue_u_;
  std::vector<BigInt> nonresidue_v_;
};

/// u + v*Y in F_{p^D}[Y]/(Y^2 - ns).
class TowerElem {
 public:
  TowerElem(ExtElem u, ExtElem v, TowerCtxPtr ctx);

  const ExtElem& u() const { return u_; }
  const ExtElem& v() const { return v_; }
  const TowerCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

  TowerElem inverse() const;
  TowerElem pow(const BigInt& e) const;

  TowerElem operator-() const;
  friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
  friend TowerElem operator/(const TowerElem& a, const TowerElem& b);
  TowerElem& operator+=(const TowerElem& o) { return *this = *this + o; }
  TowerElem& operator-=(const TowerElem& o) { return *this = *this - o; }
  TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }
  friend bool operator==(const TowerElem& a, const TowerElem& b);

  std::string to_string() const;

 private:
  ExtElem u_;
  ExtElem v_;
  TowerCtxPtr ctx_;
};

std::ostream& operator<<(std::ostream& os, const TowerElem& a);

inline TowerElem make_like(const TowerElem& ref, long v) { return ref.ctx()->from_int(v); }
inline bool is_zero(const TowerElem& a) { return a.is_zero(); }

bool canonical_less(const TowerElem& a, const TowerElem& b);

/// a^p.
ExtElem frobenius(const ExtElem& a);
TowerElem frobenius(const TowerElem& a);

/// Fixed by Frobenius, i.e. a lies in F_p.
bool in_base_field(const ExtElem& a);
bool in_base_field(const TowerElem& a);
/// The constant coefficient when every higher coordinate vanishes.
std::optional<FpElem> project_to_fp(const ExtElem& a);
std::optional<FpElem> project_to_fp(const TowerElem& a);

/// a^((q-1)/2) == -1 where q = p^D.
bool is_nonresidue(const ExtElem& a);

/// Canonical square root in F_{p^D}, verified by squaring.
std::optional<ExtElem> ext_sqrt(const ExtElem& a);
/// Exponent route a^((q+1)/4); nullopt unless q = 3 mod 4 and a is a square.
std::optional<ExtElem> ext_sqrt_exponent(const ExtElem& a);
/// Tonelli-Shanks route, any odd q.
std::optional<ExtElem> ext_sqrt_tonelli(const ExtElem& a);

/// Total square root of a base element inside the tower.
TowerElem sqrt_in_tower(const TowerCtxPtr& tower, const ExtElem& a);
/// Canonical square root of an arbitrary tower element, when it exists there.
std::optional<TowerElem> tower_sqrt(const TowerElem& a);

/// First quadratic non-residue in a deterministic scan (constants 2, 3, ...,
/// then X + c, X^2 + c, ...). The seed is only consulted past the scan cap.
ExtElem choose_nonresidue(const FieldCtxPtr& ctx, std::uint64_t seed);

// Field objects for the generic halving code.

struct ExtField {
  using Elem = ExtElem;
  FieldCtxPtr ctx;
  std::optional<ExtElem> sqrt(const ExtElem& a) const { return ext_sqrt(a); }
};

struct TowerField {
  using Elem = TowerElem;
  TowerCtxPtr ctx;
  std::optional<TowerElem> sqrt(const TowerElem& a) const { return tower_sqrt(a); }
};

}  // namespace halving
