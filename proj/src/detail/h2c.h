#pragma once

#include <cstring>

#include "detail/curve.h"
#include "sdcred/bytes.h"
#include "sdcred/sha256.h"

// Hash-to-curve for G1 and G2: expand_message_xmd over SHA-256, simplified
// SWU on the isogenous curves, then the 11- and 3-isogeny maps.

namespace sdcred::detail {

inline Bytes expand_message_xmd(const Bytes& msg, const Bytes& dst_in,
                                std::size_t length) {
  Bytes dst = dst_in;
  if (dst.size() > 255) {
    Bytes longer = str_bytes("H2C-OVERSIZE-DST-");
    append(longer, dst);
    Digest d = sha256(longer);
    dst.assign(d.begin(), d.end());
  }
  std::size_t ell = (length + 31) / 32;
  Bytes dst_prime = dst;
  dst_prime.push_back(static_cast<std::uint8_t>(dst.size()));

  Sha256 h0;
  std::uint8_t z_pad[64] = {0};
  h0.update(z_pad, 64);
  h0.update(msg);
  std::uint8_t lib[3] = {static_cast<std::uint8_t>(length >> 8),
                         static_cast<std::uint8_t>(length), 0};
  h0.update(lib, 3);
  h0.update(dst_prime);
  Digest b0 = h0.finish();

  Digest prev;
  {
    Sha256 h1;
    h1.update(b0);
    std::uint8_t one = 1;
    h1.update(&one, 1);
    h1.update(dst_prime);
    prev = h1.finish();
  }
  Bytes out(prev.begin(), prev.end());
  for (std::size_t i = 2; i <= ell; ++i) {
    Digest mixed;
    for (int j = 0; j < 32; ++j) mixed[j] = b0[j] ^ prev[j];
    Sha256 hi;
    hi.update(mixed);
    std::uint8_t idx = static_cast<std::uint8_t>(i);
    hi.update(&idx, 1);
    hi.update(dst_prime);
    prev = hi.finish();
    append(out, prev.data(), 32);
  }
  out.resize(length);
  return out;
}

// count field elements of extension degree 1 or 2, L = 64
inline void hash_to_field_fp(const Bytes& msg, const Bytes& dst, Fp out[2]) {
  Bytes data = expand_message_xmd(msg, dst, 2 * 64);
  for (int i = 0; i < 2; ++i) {
    out[i] = Fp::from_bytes_be_reduce(data.data() + 64 * i, 64);
  }
}

inline void hash_to_field_fp2(const Bytes& msg, const Bytes& dst, Fp2 out[2]) {
  Bytes data = expand_message_xmd(msg, dst, 4 * 64);
  for (int i = 0; i < 2; ++i) {
    out[i].c0 = Fp::from_bytes_be_reduce(data.data() + 128 * i, 64);
    out[i].c1 = Fp::from_bytes_be_reduce(data.data() + 128 * i + 64, 64);
  }
}

inline int fp_sgn0(const Fp& x) { return x.canonical_is_odd() ? 1 : 0; }

struct SswuG1Consts {
  Fp a, b, z;
  SswuG1Consts()
      : a(Fp::from_canonical(kSswuG1A)),
        b(Fp::from_canonical(kSswuG1B)),
        z(Fp::from_canonical(kSswuG1Z)) {}
};

struct SswuG2Consts {
  Fp2 a, b, z;
  SswuG2Consts() {
    a = {Fp::from_canonical(kSswuG2A[0]), Fp::from_canonical(kSswuG2A[1])};
    b = {Fp::from_canonical(kSswuG2B[0]), Fp::from_canonical(kSswuG2B[1])};
    z = {Fp::from_canonical(kSswuG2Z[0]), Fp::from_canonical(kSswuG2Z[1])};
  }
};

// Simplified SWU on an AB != 0 curve; returns an affine point on that curve.
inline void sswu_g1(const Fp& u, Fp* x, Fp* y) {
  static const SswuG1Consts k;
  Fp u2 = u.sqr();
  Fp zu2 = k.z * u2;
  Fp tv1 = zu2.sqr() + zu2;
  Fp x1;
  if (tv1.is_zero()) {
    x1 = k.b * fp_inv(k.z * k.a);
  } else {
    x1 = k.b.neg() * fp_inv(k.a) * (Fp::one() + fp_inv(tv1));
  }
  Fp gx1 = (x1.sqr() + k.a) * x1 + k.b;
  if (fp_is_square(gx1)) {
    *x = x1;
    fp_sqrt(gx1, y);
  } else {
    Fp x2 = zu2 * x1;
    Fp gx2 = (x2.sqr() + k.a) * x2 + k.b;
    *x = x2;
    fp_sqrt(gx2, y);
  }
  if (fp_sgn0(u) != fp_sgn0(*y)) *y = y->neg();
}

inline void sswu_g2(const Fp2& u, Fp2* x, Fp2* y) {
  static const SswuG2Consts k;
  Fp2 u2 = u.sqr();
  Fp2 zu2 = k.z * u2;
  Fp2 tv1 = zu2.sqr() + zu2;
  Fp2 x1;
  if (tv1.is_zero()) {
    x1 = k.b * (k.z * k.a).inv();
  } else {
    x1 = k.b.neg() * k.a.inv() * (Fp2::one() + tv1.inv());
  }
  Fp2 gx1 = (x1.sqr() + k.a) * x1 + k.b;
  if (fp2_is_square(gx1)) {
    *x = x1;
    fp2_sqrt(gx1, y);
  } else {
    Fp2 x2 = zu2 * x1;
    Fp2 gx2 = (x2.sqr() + k.a) * x2 + k.b;
    *x = x2;
    fp2_sqrt(gx2, y);
  }
  if (fp2_sgn0(u) != fp2_sgn0(*y)) *y = y->neg();
}

template <typename F, int N>
F horner(const F (&coeffs)[N], const F& x) {
  F acc = coeffs[N - 1];
  for (int i = N - 2; i >= 0; --i) acc = acc * x + coeffs[i];
  return acc;
}

struct Iso11Consts {
  Fp xnum[12], xden[11], ynum[16], yden[16];
  Iso11Consts() {
    for (int i = 0; i < 12; ++i) xnum[i] = Fp::from_canonical(kIso11XNum[i]);
    for (int i = 0; i < 11; ++i) xden[i] = Fp::from_canonical(kIso11XDen[i]);
    for (int i = 0; i < 16; ++i) ynum[i] = Fp::from_canonical(kIso11YNum[i]);
    for (int i = 0; i < 16; ++i) yden[i] = Fp::from_canonical(kIso11YDen[i]);
  }
};

struct Iso3Consts {
  Fp2 xnum[4], xden[3], ynum[4], yden[4];
  Iso3Consts() {
    for (int i = 0; i < 4; ++i) {
      xnum[i] = {Fp::from_canonical(kIso3XNum[i][0]), Fp::from_canonical(kIso3XNum[i][1])};
      ynum[i] = {Fp::from_canonical(kIso3YNum[i][0]), Fp::from_canonical(kIso3YNum[i][1])};
      yden[i] = {Fp::from_canonical(kIso3YDen[i][0]), Fp::from_canonical(kIso3YDen[i][1])};
    }
    for (int i = 0; i < 3; ++i) {
      xden[i] = {Fp::from_canonical(kIso3XDen[i][0]), Fp::from_canonical(kIso3XDen[i][1])};
    }
  }
};

inline G1Jac iso11_map(const Fp& x, const Fp& y) {
  static const Iso11Consts k;
  Fp xn = horner(k.xnum, x);
  Fp xd = horner(k.xden, x);
  Fp yn = horner(k.ynum, x);
  Fp yd = horner(k.yden, x);
  return G1Jac::from_affine(xn * fp_inv(xd), y * yn * fp_inv(yd));
}

inline G2Jac iso3_map(const Fp2& x, const Fp2& y) {
  static const Iso3Consts k;
  Fp2 xn = horner(k.xnum, x);
  Fp2 xd = horner(k.xden, x);
  Fp2 yn = horner(k.ynum, x);
  Fp2 yd = horner(k.yden, x);
  return G2Jac::from_affine(xn * xd.inv(), y * yn * yd.inv());
}

inline G1Jac hash_to_curve_g1(const Bytes& msg, const Bytes& dst) {
  Fp u[2];
  hash_to_field_fp(msg, dst, u);
  Fp x0, y0, x1, y1;
  sswu_g1(u[0], &x0, &y0);
  sswu_g1(u[1], &x1, &y1);
  G1Jac q = iso11_map(x0, y0) + iso11_map(x1, y1);
  return g1_clear_cofactor(q);
}

inline G2Jac hash_to_curve_g2(const Bytes& msg, const Bytes& dst) {
  Fp2 u[2];
  hash_to_field_fp2(msg, dst, u);
  Fp2 x0, y0, x1, y1;
  sswu_g2(u[0], &x0, &y0);
  sswu_g2(u[1], &x1, &y1);
  G2Jac q = iso3_map(x0, y0) + iso3_map(x1, y1);
  return g2_clear_cofactor(q);
}

}  // namespace sdcred::detail
