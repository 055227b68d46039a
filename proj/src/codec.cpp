#include "halving/codec.hpp"

#include <stdexcept>

#include "halving/errors.hpp"

namespace halving {

void validate_codec_params(const CodecParams& params) {
  require_nonsingular(params.curve);
  require_on_curve(params.curve, params.base);
  if (params.order.sign() <= 0 || params.order.is_even()) {
    throw DomainError("codec needs an odd group order, got " + params.order.to_string());
  }
  if (!scalar_mul(params.curve, params.order, params.base).is_infinity()) {
    throw DomainError("order * base is not infinity");
  }
  if (!two_torsion(params.curve).empty()) {
    throw DomainError("curve has points of order 2; halving would not be unique");
  }
}

CodecKey CodecKey::from_binary(std::string_view bits) {
  CodecKey key;
  for (const char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("key must be a string of 0 and 1");
    key.bits_.push_back(c == '1');
  }
  return key;
}

CodecKey CodecKey::from_integer(const BigInt& value) {
  if (value.sign() < 0) throw std::invalid_argument("key must be nonnegative");
  CodecKey key;
  for (std::size_t i = value.bit_length(); i-- > 0;) key.bits_.push_back(value.bit(i));
  return key;
}

BigInt CodecKey::value() const {
  BigInt v(0);
  for (const bool b : bits_) v = v * BigInt(2) + BigInt(b ? 1 : 0);
  return v;
}

std::string CodecKey::to_string() const {
  std::string s;
  for (const bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

FpPoint encode_message(const BigInt& message, const CodecParams& params) {
  if (message.sign() < 0) throw DomainError("message must be nonnegative");
  const BigInt window = BigInt::pow10(params.pad);
  const auto& field = params.curve.a4.field();
  if (window * (message + BigInt(1)) >= field->p()) {
    throw DomainError("message too large for p with pad " + std::to_string(params.pad));
  }
  const BigInt start = window * message;
  for (BigInt i(0); i < window; i += BigInt(1)) {
    const FpElem x(start + i, field);
    if (auto y = fp_sqrt(params.curve.rhs(x))) return FpPoint(x, *y);
  }
  throw DomainError("no curve point with x in the padding window");
}

BigInt decode_message(const FpPoint& q, const CodecParams& params) {
  if (q.is_infinity()) throw DomainError("cannot decode the point at infinity");
  return q.x().value().floor_div(BigInt::pow10(params.pad));
}

FpPoint encrypt(const FpPoint& q, const CodecKey& key, const CodecParams& params) {
  require_on_curve(params.curve, q);
  FpPoint acc = q;
  for (const bool b : key.bits()) {
    acc = double_point(params.curve, acc);
    if (b) acc = add(params.curve, acc, params.base);
  }
  return acc;
}

FpPoint decrypt(const FpPoint& q, const CodecKey& key, const CodecParams& params,
                std::uint64_t seed) {
  require_on_curve(params.curve, q);
  const FpHalver halver(params.curve, seed);
  FpPoint acc = q;
  const auto& bits = key.bits();
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (*it) acc = sub(params.curve, acc, params.base);
    auto halves = halver.halve(acc);
    if (halves.empty()) throw DomainError("ciphertext point has no half: corrupted input");
    if (halves.size() != 1) throw DomainError("halving is not unique: curve has 2-torsion");
    acc = std::move(halves.front());
  }
  return acc;
}

}  // namespace halving
