#pragma once

// Toy message cipher on a curve of odd order over F_p.
//
// A message T becomes the point with x = 10^pad * T + i for the least i that
// gives a point. Encryption folds the key bits most significant first,
// Q <- 2Q + b P; decryption walks the bits backwards with Q <- (Q - b P) / 2,
// halving being unique because the group has no element of order 2. So
//
//   encrypt(Q, key) = 2^|key| Q + int(key) P.
//
// This is a demonstration of invertibility, not a secure cryptosystem.

#include <cstdint>
#include <string>
#include <vector>

#include "halving/bigint.hpp"
#include "halving/finite_halving.hpp"

namespace halving {

struct CodecParams {
  FpCurve curve;
  FpPoint base;
  BigInt order;  // trusted group order of the curve, must be odd
  unsigned pad = 2;
};

/// Checks order odd, order * base = infinity and no 2-torsion over F_p.
/// Throws DomainError on violation.
void validate_codec_params(const CodecParams& params);

/// Key bits, most significant first. Leading zeros are significant.
class CodecKey {
 public:
  /// From a string of '0' / '1'; throws std::invalid_argument otherwise.
  static CodecKey from_binary(std::string_view bits);
  /// Binary expansion of a nonnegative integer (empty for zero).
  static CodecKey from_integer(const BigInt& value);

  const std::vector<bool>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  BigInt value() const;
  std::string to_string() const;

 private:
  std::vector<bool> bits_;
};

/// Throws DomainError when 10^pad (T + 1) >= p or no point exists in the window.
FpPoint encode_message(const BigInt& message, const CodecParams& params);
/// floor(x / 10^pad); throws DomainError for the point at infinity.
BigInt decode_message(const FpPoint& q, const CodecParams& params);

FpPoint encrypt(const FpPoint& q, const CodecKey& key, const CodecParams& params);
/// Throws DomainError if a halving step is empty or not unique.
FpPoint decrypt(const FpPoint& q, const CodecKey& key, const CodecParams& params,
                std::uint64_t seed = 0);

}  // namespace halving
