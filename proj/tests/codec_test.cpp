#include <gtest/gtest.h>

#include <random>

#include "halving/codec.hpp"
#include "halving/errors.hpp"

namespace halving {
namespace {

// y^2 = x^3 + x + 11 over F_9973 has 9869 points, an odd number.
CodecParams fixture() {
  const auto f = PrimeField::make(BigInt(9973));
  const FpCurve c = make_fp_curve(f, BigInt(0), BigInt(1), BigInt(11));
  const FpElem x(BigInt(3), f);
  const FpPoint base(x, fp_sqrt(c.rhs(x)).value());
  return CodecParams{c, base, BigInt(9869), 2};
}

FpPoint random_point(const CodecParams& params, std::mt19937_64& rng) {
  const auto& f = params.curve.a4.field();
  for (;;) {
    const FpElem x(random_below(f->p(), rng), f);
    if (auto y = fp_sqrt(params.curve.rhs(x))) {
      return (rng() & 1) ? FpPoint(x, *y) : FpPoint(x, -*y);
    }
  }
}

CodecKey random_key(std::mt19937_64& rng, std::size_t bits) {
  std::string s;
  for (std::size_t i = 0; i < bits; ++i) s.push_back((rng() & 1) ? '1' : '0');
  return CodecKey::from_binary(s);
}

TEST(Codec, FixtureOrder) {
  const auto params = fixture();
  EXPECT_EQ(group_order_bf(params.curve), params.order);
  EXPECT_NO_THROW(validate_codec_params(params));
}

TEST(Codec, ValidateRejects) {
  auto params = fixture();
  params.order = BigInt(9870);
  EXPECT_THROW(validate_codec_params(params), DomainError);
  params.order = BigInt(9867);
  EXPECT_THROW(validate_codec_params(params), DomainError);
  // y^2 = x^3 - x has full 2-torsion; order 8 over F_7 fails before that.
  const auto f7 = PrimeField::make(BigInt(7));
  const FpCurve c = make_fp_curve(f7, BigInt(0), BigInt(-1), BigInt(0));
  CodecParams bad{c, FpPoint(FpElem(0, f7), FpElem(0, f7)), BigInt(1), 1};
  EXPECT_THROW(validate_codec_params(bad), DomainError);
}

TEST(CodecKey, Parsing) {
  EXPECT_EQ(CodecKey::from_binary("0011").value(), BigInt(3));
  EXPECT_EQ(CodecKey::from_binary("0011").size(), 4U);
  EXPECT_EQ(CodecKey::from_integer(BigInt(11)).to_string(), "1011");
  EXPECT_EQ(CodecKey::from_integer(BigInt(0)).size(), 0U);
  EXPECT_THROW(CodecKey::from_binary("102"), std::invalid_argument);
  EXPECT_THROW(CodecKey::from_integer(BigInt(-1)), std::invalid_argument);
}

TEST(Encrypt, SmallKeys) {
  const auto params = fixture();
  std::mt19937_64 rng(71);
  const FpPoint q = random_point(params, rng);
  const auto& c = params.curve;
  const auto& p = params.base;
  EXPECT_EQ(encrypt(q, CodecKey::from_binary(""), params), q);
  EXPECT_EQ(encrypt(q, CodecKey::from_binary("0"), params), double_point(c, q));
  EXPECT_EQ(encrypt(q, CodecKey::from_binary("1"), params), add(c, double_point(c, q), p));
  EXPECT_EQ(encrypt(q, CodecKey::from_binary("10"), params),
            double_point(c, add(c, double_point(c, q), p)));
  // 16 Q + 11 P.
  EXPECT_EQ(encrypt(q, CodecKey::from_binary("1011"), params),
            add(c, scalar_mul(c, BigInt(16), q), scalar_mul(c, BigInt(11), p)));
  EXPECT_THROW(encrypt(FpPoint(FpElem(0, c.a4.field()), FpElem(0, c.a4.field())),
                       CodecKey::from_binary("1"), params),
               NotOnCurve);
}

TEST(Decrypt, RoundTripAndClosedForm) {
  const auto params = fixture();
  std::mt19937_64 rng(72);
  for (int i = 0; i < 40; ++i) {
    const FpPoint q = random_point(params, rng);
    const CodecKey key = random_key(rng, 1 + rng() % 64);
    const FpPoint ct = encrypt(q, key, params);
    const BigInt two_n = BigInt::pow(BigInt(2), key.size());
    EXPECT_EQ(ct, add(params.curve, scalar_mul(params.curve, two_n, q),
                      scalar_mul(params.curve, key.value(), params.base)));
    EXPECT_EQ(decrypt(ct, key, params, i), q);
  }
  const FpPoint q = random_point(params, rng);
  EXPECT_EQ(decrypt(q, CodecKey::from_binary(""), params), q);
  EXPECT_EQ(decrypt(encrypt(FpPoint::infinity(), CodecKey::from_binary("1011"), params),
                    CodecKey::from_binary("1011"), params),
            FpPoint::infinity());
}

TEST(Decrypt, WrongKeyDiffers) {
  const auto params = fixture();
  std::mt19937_64 rng(73);
  int differ = 0;
  for (int i = 0; i < 30; ++i) {
    const FpPoint q = random_point(params, rng);
    const CodecKey key = random_key(rng, 32);
    std::string flipped = key.to_string();
    flipped[rng() % flipped.size()] ^= 1;
    const FpPoint ct = encrypt(q, key, params);
    differ += decrypt(ct, CodecKey::from_binary(flipped), params) != q ? 1 : 0;
  }
  EXPECT_EQ(differ, 30);
}

TEST(Message, EncodeDecode) {
  const auto params = fixture();
  const FpPoint zero = encode_message(BigInt(0), params);
  EXPECT_EQ(decode_message(zero, params), BigInt(0));
  EXPECT_LT(zero.x().value(), BigInt(100));
  // Smallest i: every x below the chosen one has a non-residue rhs.
  for (long i = 0; i < zero.x().value().to_long(); ++i) {
    EXPECT_FALSE(fp_sqrt(params.curve.rhs(FpElem(BigInt(i), params.curve.a4.field()))));
  }
  const FpPoint m42 = encode_message(BigInt(42), params);
  EXPECT_EQ(m42.x().value().floor_div(BigInt(100)), BigInt(42));
  EXPECT_TRUE(on_curve(params.curve, m42));
  for (long t = 0; t < 99; ++t) {
    EXPECT_EQ(decode_message(encode_message(BigInt(t), params), params), BigInt(t));
  }
  EXPECT_THROW(encode_message(BigInt(99), params), DomainError);
  EXPECT_THROW(encode_message(BigInt(-1), params), DomainError);
  EXPECT_THROW(decode_message(FpPoint::infinity(), params), DomainError);
}

TEST(Message, FullPipeline) {
  const auto params = fixture();
  const CodecKey key = CodecKey::from_integer(BigInt::from_string("12345678901234567890"));
  for (long t : {0L, 7L, 42L, 98L}) {
    const FpPoint ct = encrypt(encode_message(BigInt(t), params), key, params);
    EXPECT_EQ(decode_message(decrypt(ct, key, params), params), BigInt(t));
  }
}

}  // namespace
}  // namespace halving
