#include "sdcred/ec.h"

#include <bit>
#include <cstring>

#include "detail/h2c.h"
#include "detail/pairing.h"
#include "sdcred/errors.h"

namespace sdcred {

using detail::Fp;
using detail::Fp2;
using detail::Fp12;
using detail::Fr;
using detail::G1Jac;
using detail::G2Jac;

namespace {

Fr F(const Scalar& s) { return std::bit_cast<Fr>(s.repr); }
Scalar S(const Fr& f) {
  Scalar out;
  out.repr = std::bit_cast<std::array<std::uint64_t, 4>>(f);
  return out;
}

G1Jac P1(const GroupElementG1& g) { return std::bit_cast<G1Jac>(g.repr); }
GroupElementG1 W1(const G1Jac& p) {
  GroupElementG1 out;
  out.repr = std::bit_cast<std::array<std::uint64_t, 18>>(p);
  return out;
}

G2Jac P2(const GroupElementG2& g) { return std::bit_cast<G2Jac>(g.repr); }
GroupElementG2 W2(const G2Jac& p) {
  GroupElementG2 out;
  out.repr = std::bit_cast<std::array<std::uint64_t, 36>>(p);
  return out;
}

Fp12 GT(const PairingOutput& g) { return std::bit_cast<Fp12>(g.repr); }
PairingOutput WT(const Fp12& f) {
  PairingOutput out;
  out.repr = std::bit_cast<std::array<std::uint64_t, 72>>(f);
  return out;
}

Bytes dst_for(const char* kind, const Bytes& tag) {
  Bytes out = str_bytes(std::string("SDCRED-V01-") + kind);
  append(out, tag);
  out.push_back('_');
  return out;
}

}  // namespace

Scalar Scalar::zero() { return S(Fr::zero()); }
Scalar Scalar::one() { return S(Fr::one()); }
Scalar Scalar::from_u64(std::uint64_t x) { return S(Fr::from_u64(x)); }

Scalar Scalar::from_bytes(const std::array<std::uint8_t, 32>& in) {
  Fr out;
  if (!Fr::from_bytes_le(in.data(), &out)) {
    throw DecodeError("scalar bytes not canonical");
  }
  return S(out);
}

std::array<std::uint8_t, 32> Scalar::to_bytes() const {
  std::array<std::uint8_t, 32> out;
  F(*this).to_bytes_le(out.data());
  return out;
}

Scalar Scalar::operator+(const Scalar& o) const { return S(F(*this) + F(o)); }
Scalar Scalar::operator-(const Scalar& o) const { return S(F(*this) - F(o)); }
Scalar Scalar::operator*(const Scalar& o) const { return S(F(*this) * F(o)); }
Scalar Scalar::neg() const { return S(F(*this).neg()); }
Scalar Scalar::inverse() const { return S(detail::fr_inv(F(*this))); }
bool Scalar::is_zero() const { return F(*this).is_zero(); }

Scalar Scalar::random(Rng& rng) {
  Bytes b = rng.bytes(48);
  return S(Fr::from_bytes_be_reduce(b.data(), b.size()));
}

GroupElementG1::GroupElementG1() {
  repr = std::bit_cast<std::array<std::uint64_t, 18>>(G1Jac::infinity());
}
GroupElementG1 GroupElementG1::generator() { return W1(detail::g1_generator()); }
GroupElementG1 GroupElementG1::identity() { return GroupElementG1(); }
GroupElementG1 GroupElementG1::operator+(const GroupElementG1& o) const {
  return W1(P1(*this) + P1(o));
}
GroupElementG1 GroupElementG1::operator-(const GroupElementG1& o) const {
  return W1(P1(*this) - P1(o));
}
GroupElementG1 GroupElementG1::neg() const { return W1(P1(*this).neg()); }
GroupElementG1 GroupElementG1::operator*(const Scalar& k) const {
  return W1(detail::mul_fr(P1(*this), F(k)));
}
bool GroupElementG1::is_identity() const { return P1(*this).is_infinity(); }
bool GroupElementG1::operator==(const GroupElementG1& o) const {
  return P1(*this) == P1(o);
}

GroupElementG2::GroupElementG2() {
  repr = std::bit_cast<std::array<std::uint64_t, 36>>(G2Jac::infinity());
}
GroupElementG2 GroupElementG2::generator() { return W2(detail::g2_generator()); }
GroupElementG2 GroupElementG2::identity() { return GroupElementG2(); }
GroupElementG2 GroupElementG2::operator+(const GroupElementG2& o) const {
  return W2(P2(*this) + P2(o));
}
GroupElementG2 GroupElementG2::operator-(const GroupElementG2& o) const {
  return W2(P2(*this) - P2(o));
}
GroupElementG2 GroupElementG2::neg() const { return W2(P2(*this).neg()); }
GroupElementG2 GroupElementG2::operator*(const Scalar& k) const {
  return W2(detail::mul_fr(P2(*this), F(k)));
}
bool GroupElementG2::is_identity() const { return P2(*this).is_infinity(); }
bool GroupElementG2::operator==(const GroupElementG2& o) const {
  return P2(*this) == P2(o);
}

// zcash-style compressed encodings: bit7 compressed flag, bit6 infinity,
// bit5 set when y is the lexicographically larger root.

std::array<std::uint8_t, 48> GroupElementG1::serialize() const {
  std::array<std::uint8_t, 48> out{};
  G1Jac p = P1(*this);
  if (p.is_infinity()) {
    out[0] = 0xc0;
    return out;
  }
  Fp ax, ay;
  p.to_affine(&ax, &ay);
  ax.to_bytes_be(out.data());
  out[0] |= 0x80;
  if (ay.cmp_canonical(ay.neg()) > 0) out[0] |= 0x20;
  return out;
}

GroupElementG1 GroupElementG1::deserialize(const std::uint8_t* in, std::size_t len) {
  if (len != 48) throw DecodeError("g1 encoding must be 48 bytes");
  std::uint8_t flags = in[0];
  if (!(flags & 0x80)) throw DecodeError("g1 encoding missing compressed flag");
  bool infinity = flags & 0x40;
  bool y_large = flags & 0x20;
  std::uint8_t body[48];
  std::memcpy(body, in, 48);
  body[0] &= 0x1f;
  if (infinity) {
    if (y_large) throw DecodeError("g1 infinity with sign flag");
    for (int i = 0; i < 48; ++i) {
      if (body[i]) throw DecodeError("g1 infinity with nonzero body");
    }
    return identity();
  }
  Fp x;
  if (!Fp::from_bytes_be(body, &x)) throw DecodeError("g1 x not canonical");
  Fp rhs = x.sqr() * x + detail::g1_b();
  Fp y;
  if (!detail::fp_sqrt(rhs, &y)) throw DecodeError("g1 x not on curve");
  if ((y.cmp_canonical(y.neg()) > 0) != y_large) y = y.neg();
  G1Jac p = G1Jac::from_affine(x, y);
  if (!detail::g1_in_subgroup(p)) throw DecodeError("g1 point not in subgroup");
  return W1(p);
}

std::array<std::uint8_t, 96> GroupElementG2::serialize() const {
  std::array<std::uint8_t, 96> out{};
  G2Jac p = P2(*this);
  if (p.is_infinity()) {
    out[0] = 0xc0;
    return out;
  }
  Fp2 ax, ay;
  p.to_affine(&ax, &ay);
  ax.c1.to_bytes_be(out.data());
  ax.c0.to_bytes_be(out.data() + 48);
  out[0] |= 0x80;
  // lexicographic order on (c1, c0)
  Fp2 ny = ay.neg();
  int cmp = ay.c1.cmp_canonical(ny.c1);
  if (cmp == 0) cmp = ay.c0.cmp_canonical(ny.c0);
  if (cmp > 0) out[0] |= 0x20;
  return out;
}

GroupElementG2 GroupElementG2::deserialize(const std::uint8_t* in, std::size_t len) {
  if (len != 96) throw DecodeError("g2 encoding must be 96 bytes");
  std::uint8_t flags = in[0];
  if (!(flags & 0x80)) throw DecodeError("g2 encoding missing compressed flag");
  bool infinity = flags & 0x40;
  bool y_large = flags & 0x20;
  std::uint8_t body[96];
  std::memcpy(body, in, 96);
  body[0] &= 0x1f;
  if (infinity) {
    if (y_large) throw DecodeError("g2 infinity with sign flag");
    for (int i = 0; i < 96; ++i) {
      if (body[i]) throw DecodeError("g2 infinity with nonzero body");
    }
    return identity();
  }
  Fp2 x;
  if (!Fp::from_bytes_be(body, &x.c1)) throw DecodeError("g2 x not canonical");
  if (!Fp::from_bytes_be(body + 48, &x.c0)) throw DecodeError("g2 x not canonical");
  Fp2 rhs = x.sqr() * x + detail::g2_b();
  Fp2 y;
  if (!detail::fp2_sqrt(rhs, &y)) throw DecodeError("g2 x not on curve");
  Fp2 ny = y.neg();
  int cmp = y.c1.cmp_canonical(ny.c1);
  if (cmp == 0) cmp = y.c0.cmp_canonical(ny.c0);
  if ((cmp > 0) != y_large) y = ny;
  G2Jac p = G2Jac::from_affine(x, y);
  if (!detail::g2_in_subgroup(p)) throw DecodeError("g2 point not in subgroup");
  return W2(p);
}

PairingOutput PairingOutput::identity() { return WT(Fp12::one()); }
PairingOutput PairingOutput::operator*(const PairingOutput& o) const {
  return WT(GT(*this) * GT(o));
}
bool PairingOutput::is_identity() const { return GT(*this) == Fp12::one(); }

std::vector<std::uint8_t> PairingOutput::serialize() const {
  Fp12 f = GT(*this);
  std::vector<std::uint8_t> out(576);
  for (int j = 0; j < 6; ++j) {
    const Fp2& c = f.flat(j);
    c.c0.to_bytes_be(out.data() + 96 * j);
    c.c1.to_bytes_be(out.data() + 96 * j + 48);
  }
  return out;
}

Scalar hash_to_scalar(const Bytes& domain_tag, const Bytes& data) {
  Bytes dst = dst_for("SCALAR_", domain_tag);
  Bytes u = detail::expand_message_xmd(data, dst, 48);
  return S(Fr::from_bytes_be_reduce(u.data(), u.size()));
}

GroupElementG1 hash_to_point_g1(const Bytes& domain_tag, const Bytes& message) {
  Bytes dst = dst_for("BLS12381G1_XMD:SHA-256_SSWU_RO_", domain_tag);
  return W1(detail::hash_to_curve_g1(message, dst));
}

GroupElementG2 hash_to_point_g2(const Bytes& domain_tag, const Bytes& message) {
  Bytes dst = dst_for("BLS12381G2_XMD:SHA-256_SSWU_RO_", domain_tag);
  return W2(detail::hash_to_curve_g2(message, dst));
}

PairingOutput pairing(const GroupElementG2& a, const GroupElementG1& b) {
  return WT(detail::pairing_single(P2(a), P1(b)));
}

PairingOutput pairing_product(const std::vector<GroupElementG2>& a,
                              const std::vector<GroupElementG1>& b) {
  if (a.size() != b.size()) throw Error("pairing_product length mismatch");
  std::vector<detail::PairingInput> inputs;
  inputs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inputs.push_back({P2(a[i]), P1(b[i])});
  return WT(detail::pairing_product(inputs));
}

GroupElementG1 msm_g1(const std::vector<GroupElementG1>& points,
                      const std::vector<Scalar>& scalars) {
  if (points.size() != scalars.size()) throw Error("msm length mismatch");
  std::vector<G1Jac> ps(points.size());
  std::vector<Fr> ss(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    ps[i] = P1(points[i]);
    ss[i] = F(scalars[i]);
  }
  return W1(detail::msm(ps, ss));
}

}  // namespace sdcred
