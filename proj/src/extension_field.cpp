#include "halving/extension_field.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "halving/detail/poly_fp.hpp"
#include "halving/detail/sqrt.hpp"
#include "halving/errors.hpp"

namespace halving {

namespace {

constexpr long kScanCap = 64;

void require_same_ctx(const ExtElem& a, const ExtElem& b) {
  if (a.ctx() == b.ctx()) return;
  if (a.ctx()->p() == b.ctx()->p() && a.ctx()->modulus() == b.ctx()->modulus()) return;
  throw ContextMismatch("extension-field elements from different fields");
}

void require_same_ctx(const TowerElem& a, const TowerElem& b) {
  if (a.ctx() == b.ctx()) return;
  require_same_ctx(a.u(), b.u());
  if (a.ctx()->ns() != b.ctx()->ns()) {
    throw ContextMismatch("tower elements with different non-residues");
  }
}

bool lex_less(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(PrimeFieldPtr fp, std::vector<BigInt> modulus)
    : fp_(std::move(fp)),
      modulus_(std::move(modulus)),
      degree_(static_cast<int>(modulus_.size()) - 1),
      order_(BigInt::pow(fp_->p(), static_cast<unsigned long>(degree_))) {}

FieldCtxPtr FieldCtx::prime(PrimeFieldPtr fp) {
  std::shared_ptr<FieldCtx> ctx(new FieldCtx(std::move(fp), {BigInt(0), BigInt(1)}));
  ctx->nonresidue_ = choose_nonresidue(ctx, 0).coeffs();
  return ctx;
}

FieldCtxPtr FieldCtx::make(PrimeFieldPtr fp, const std::vector<FpElem>& g) {
  const std::size_t size = g.size();
  if (size < 2 || size > 4) throw DomainError("modulus degree must be 1, 2 or 3");
  if (g.back().value() != BigInt(1)) throw DomainError("modulus polynomial must be monic");
  std::vector<BigInt> coeffs;
  for (const auto& c : g) {
    require_same_field(c, g.front());
    if (c.modulus() != fp->p()) throw ContextMismatch("modulus coefficients over another F_p");
    coeffs.push_back(c.value());
  }
  // A polynomial of degree <= 3 is irreducible iff it has no root in F_p.
  if (size > 2) {
    const detail::Poly x{BigInt(0), BigInt(1)};
    const auto xp = detail::poly_powmod(x, fp->p(), coeffs, fp->p());
    if (detail::degree(detail::poly_gcd(detail::poly_sub(xp, x, fp->p()), coeffs, fp->p())) > 0) {
      throw DomainError("modulus polynomial is reducible over F_p");
    }
  }
  std::shared_ptr<FieldCtx> ctx(new FieldCtx(std::move(fp), std::move(coeffs)));
  ctx->nonresidue_ = choose_nonresidue(ctx, 0).coeffs();
  return ctx;
}

ExtElem FieldCtx::nonresidue() const { return from_coeffs(nonresidue_); }
ExtElem FieldCtx::zero() const { return from_int(0); }
ExtElem FieldCtx::one() const { return from_int(1); }
ExtElem FieldCtx::from_int(long v) const { return from_int(BigInt(v)); }

ExtElem FieldCtx::from_int(const BigInt& v) const {
  std::vector<BigInt> c(static_cast<std::size_t>(degree_), BigInt(0));
  c[0] = v;
  return ExtElem(std::move(c), shared_from_this());
}

ExtElem FieldCtx::embed(const FpElem& a) const {
  if (a.modulus() != p()) throw ContextMismatch("embedding an element of another F_p");
  return from_int(a.value());
}

ExtElem FieldCtx::generator() const {
  if (degree_ == 1) return from_int((-modulus_[0]).mod(p()));
  std::vector<BigInt> c(static_cast<std::size_t>(degree_), BigInt(0));
  c[1] = BigInt(1);
  return ExtElem(std::move(c), shared_from_this());
}

ExtElem FieldCtx::from_coeffs(std::vector<BigInt> coeffs) const {
  return ExtElem(std::move(coeffs), shared_from_this());
}

// ---------------------------------------------------------------------------
// ExtElem

ExtElem::ExtElem(std::vector<BigInt> coeffs, FieldCtxPtr ctx)
    : coeffs_(std::move(coeffs)), ctx_(std::move(ctx)) {
  const auto d = static_cast<std::size_t>(ctx_->degree());
  if (coeffs_.size() > d) {
    // Reduce a longer representative modulo g.
    coeffs_ = detail::poly_rem(coeffs_, ctx_->modulus(), ctx_->p());
  }
  coeffs_.resize(d, BigInt(0));
  for (auto& c : coeffs_) c = c.mod(ctx_->p());
}

bool ExtElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c.is_zero(); });
}

ExtElem ExtElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_{p^D}");
  // Extended Euclid against the modulus; g irreducible leaves a constant gcd.
  const BigInt& p = ctx_->p();
  detail::Poly r0 = ctx_->modulus();
  detail::Poly r1 = coeffs_;
  detail::trim(r1);
  detail::Poly s0, s1{BigInt(1)};
  while (detail::degree(r1) > 0) {
    detail::Poly q, r;
    detail::poly_divmod(r0, r1, p, q, r);
    detail::Poly s = detail::poly_sub(s0, detail::poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const BigInt c = *invmod(r1.front(), p);
  for (auto& x : s1) x = (x * c).mod(p);
  return ExtElem(std::move(s1), ctx_);
}

ExtElem ExtElem::pow(const BigInt& e) const {
  if (e.sign() < 0) return inverse().pow(-e);
  return detail::field_pow(*this, e);
}

ExtElem ExtElem::operator-() const {
  std::vector<BigInt> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return ExtElem(std::move(c), ctx_);
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  require_same_ctx(a, b);
  std::vector<BigInt> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return ExtElem(std::move(c), a.ctx_);
}

ExtElem operator-(const ExtElem& a, const ExtElem& b) {
  require_same_ctx(a, b);
  std::vector<BigInt> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return ExtElem(std::move(c), a.ctx_);
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  require_same_ctx(a, b);
  const std::size_t d = a.coeffs_.size();
  const mpz_class& p = a.ctx_->p().raw();
  std::vector<mpz_class> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs_[i].raw().get_mpz_t(),
                 b.coeffs_[j].raw().get_mpz_t());
    }
  }
  const auto& g = a.ctx_->modulus();
  mpz_class top;
  for (std::size_t i = prod.size(); i-- > d;) {
    mpz_mod(top.get_mpz_t(), prod[i].get_mpz_t(), p.get_mpz_t());
    if (top == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      mpz_submul(prod[i - d + j].get_mpz_t(), top.get_mpz_t(), g[j].raw().get_mpz_t());
    }
  }
  std::vector<BigInt> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    mpz_mod(prod[i].get_mpz_t(), prod[i].get_mpz_t(), p.get_mpz_t());
    out.emplace_back(std::move(prod[i]));
  }
  return ExtElem(std::move(out), a.ctx_);
}

ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }

bool operator==(const ExtElem& a, const ExtElem& b) {
  require_same_ctx(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string ExtElem::to_string() const {
  std::ostringstream os;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    os << coeffs_[i];
    if (i >= 2) os << "*X^" << i << " + ";
    if (i == 1) os << "*X + ";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExtElem& a) { return os << a.to_string(); }

bool canonical_less(const ExtElem& a, const ExtElem& b) { return lex_less(a.coeffs(), b.coeffs()); }

// ---------------------------------------------------------------------------
// TowerCtx / TowerElem

TowerCtx::TowerCtx(FieldCtxPtr base, std::vector<BigInt> ns)
    : base_(std::move(base)), ns_(std::move(ns)), order_(base_->order() * base_->order()) {}

TowerCtxPtr TowerCtx::make(FieldCtxPtr base, std::uint64_t seed) {
  ExtElem ns = choose_nonresidue(base, seed);
  std::shared_ptr<TowerCtx> tower(new TowerCtx(base, ns.coeffs()));

  // Scan Y + c, then X*Y + c, ... for a non-residue of the tower itself.
  const TowerCtxPtr view = tower;
  const TowerElem one = view->one();
  const TowerElem minus_one = -one;
  const BigInt half = (tower->order_ - BigInt(1)) / BigInt(2);
  std::mt19937_64 rng(seed);
  for (long attempt = 0;; ++attempt) {
    std::vector<BigInt> v(static_cast<std::size_t>(base->degree()), BigInt(0));
    std::vector<BigInt> u(static_cast<std::size_t>(base->degree()), BigInt(0));
    if (attempt < kScanCap) {
      v[0] = BigInt(1);
      u[0] = BigInt(attempt);
    } else {
      for (auto& c : u) c = random_below(base->p(), rng);
      for (auto& c : v) c = random_below(base->p(), rng);
    }
    const TowerElem z(base->from_coeffs(u), base->from_coeffs(v), view);
    if (z.pow(half) == minus_one) {
      tower->nonresidue_u_ = z.u().coeffs();
      tower->nonresidue_v_ = z.v().coeffs();
      return tower;
    }
  }
}

TowerElem TowerCtx::nonresidue() const {
  return TowerElem(base_->from_coeffs(nonresidue_u_), base_->from_coeffs(nonresidue_v_),
                   shared_from_this());
}

TowerElem TowerCtx::zero() const { return from_int(0); }
TowerElem TowerCtx::one() const { return from_int(1); }
TowerElem TowerCtx::from_int(long v) const { return embed(base_->from_int(v)); }

TowerElem TowerCtx::embed(const ExtElem& a) const {
  return TowerElem(a, base_->zero(), shared_from_this());
}

TowerElem TowerCtx::y() const { return TowerElem(base_->zero(), base_->one(), shared_from_this()); }

TowerElem::TowerElem(ExtElem u, ExtElem v, TowerCtxPtr ctx)
    : u_(std::move(u)), v_(std::move(v)), ctx_(std::move(ctx)) {
  require_same_ctx(u_, v_);
}

TowerElem TowerElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in the tower");
  // (u + vY)^{-1} = (u - vY) / (u^2 - ns v^2)
  const ExtElem norm = u_ * u_ - ctx_->ns() * v_ * v_;
  const ExtElem inv = norm.inverse();
  return TowerElem(u_ * inv, -(v_ * inv), ctx_);
}

TowerElem TowerElem::pow(const BigInt& e) const {
  if (e.sign() < 0) return inverse().pow(-e);
  return detail::field_pow(*this, e);
}

TowerElem TowerElem::operator-() const { return TowerElem(-u_, -v_, ctx_); }

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
  require_same_ctx(a, b);
  return TowerElem(a.u_ + b.u_, a.v_ + b.v_, a.ctx_);
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) {
  require_same_ctx(a, b);
  return TowerElem(a.u_ - b.u_, a.v_ - b.v_, a.ctx_);
}

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
  require_same_ctx(a, b);
  return TowerElem(a.u_ * b.u_ + a.ctx_->ns() * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_, a.ctx_);
}

TowerElem operator/(const TowerElem& a, const TowerElem& b) { return a * b.inverse(); }

bool operator==(const TowerElem& a, const TowerElem& b) {
  require_same_ctx(a, b);
  return a.u_ == b.u_ && a.v_ == b.v_;
}

std::string TowerElem::to_string() const {
  return "(" + u_.to_string() + ") + (" + v_.to_string() + ")*Y";
}

std::ostream& operator<<(std::ostream& os, const TowerElem& a) { return os << a.to_string(); }

bool canonical_less(const TowerElem& a, const TowerElem& b) {
  if (a.u() != b.u()) return canonical_less(a.u(), b.u());
  return canonical_less(a.v(), b.v());
}

// ---------------------------------------------------------------------------
// Frobenius and subfield membership

ExtElem frobenius(const ExtElem& a) { return a.pow(a.ctx()->p()); }
TowerElem frobenius(const TowerElem& a) { return a.pow(a.ctx()->base()->p()); }

bool in_base_field(const ExtElem& a) { return frobenius(a) == a; }
bool in_base_field(const TowerElem& a) { return frobenius(a) == a; }

std::optional<FpElem> project_to_fp(const ExtElem& a) {
  const auto& c = a.coeffs();
  if (std::any_of(c.begin() + 1, c.end(), [](const BigInt& x) { return !x.is_zero(); })) {
    return std::nullopt;
  }
  return FpElem(c[0], a.ctx()->prime_field());
}

std::optional<FpElem> project_to_fp(const TowerElem& a) {
  if (!a.v().is_zero()) return std::nullopt;
  return project_to_fp(a.u());
}

// ---------------------------------------------------------------------------
// Square roots

namespace {

template <class E>
E canonical_root(const E& r) {
  const E neg = -r;
  return canonical_less(neg, r) ? neg : r;
}

template <class E>
std::optional<E> verified_root(const std::optional<E>& r, const E& a) {
  if (!r || *r * *r != a) return std::nullopt;
  return canonical_root(*r);
}

}  // namespace

bool is_nonresidue(const ExtElem& a) {
  if (a.is_zero()) return false;
  const BigInt half = (a.ctx()->order() - BigInt(1)) / BigInt(2);
  return a.pow(half) == -a.ctx()->one();
}

std::optional<ExtElem> ext_sqrt_exponent(const ExtElem& a) {
  const BigInt& q = a.ctx()->order();
  if (q.mod(BigInt(4)) != BigInt(3)) return std::nullopt;
  return verified_root(std::optional<ExtElem>(a.pow((q + BigInt(1)) / BigInt(4))), a);
}

std::optional<ExtElem> ext_sqrt_tonelli(const ExtElem& a) {
  return verified_root(detail::tonelli_shanks(a, a.ctx()->order(), a.ctx()->nonresidue()), a);
}

std::optional<ExtElem> ext_sqrt(const ExtElem& a) {
  if (a.is_zero()) return a;
  if (a.ctx()->order().mod(BigInt(4)) == BigInt(3)) return ext_sqrt_exponent(a);
  return ext_sqrt_tonelli(a);
}

TowerElem sqrt_in_tower(const TowerCtxPtr& tower, const ExtElem& a) {
  if (auto r = ext_sqrt(a)) return tower->embed(*r);
  // a is a non-residue, so a / ns is a residue and sqrt(a) = sqrt(a / ns) * Y.
  const auto s = ext_sqrt(a / tower->ns());
  if (!s) throw DomainError("tower non-residue is not a non-residue");
  return TowerElem(tower->base()->zero(), *s, tower);
}

std::optional<TowerElem> tower_sqrt(const TowerElem& a) {
  if (a.v().is_zero()) return canonical_root(sqrt_in_tower(a.ctx(), a.u()));
  return verified_root(detail::tonelli_shanks(a, a.ctx()->order(), a.ctx()->nonresidue()), a);
}

ExtElem choose_nonresidue(const FieldCtxPtr& ctx, std::uint64_t seed) {
  const auto d = static_cast<std::size_t>(ctx->degree());
  const BigInt& p = ctx->p();
  const long small_p = p.fits_long() ? p.to_long() : kScanCap + 2;
  const long width = std::min<long>(small_p, kScanCap);

  // Constants 2, 3, ..., then X^k + c for k = 1 .. D-1.
  for (long c = 2; c < width; ++c) {
    const ExtElem z = ctx->from_int(c);
    if (is_nonresidue(z)) return z;
  }
  for (std::size_t k = 1; k < d; ++k) {
    for (long c = 0; c < width; ++c) {
      std::vector<BigInt> coeffs(d, BigInt(0));
      coeffs[0] = BigInt(c);
      coeffs[k] = BigInt(1);
      const ExtElem z = ctx->from_coeffs(std::move(coeffs));
      if (is_nonresidue(z)) return z;
    }
  }
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<BigInt> coeffs(d);
    for (auto& c : coeffs) c = random_below(p, rng);
    const ExtElem z = ctx->from_coeffs(std::move(coeffs));
    if (is_nonresidue(z)) return z;
  }
}

}  // namespace halving
