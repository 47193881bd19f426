#pragma once

#include <cstdint>
#include <cstring>

#include "detail/curve_constants.h"

namespace sdcred::detail {

using u128 = unsigned __int128;

// Fixed-size Montgomery-form field element. Params supplies the modulus,
// -mod^-1 mod 2^64, and R^2; values stay reduced below the modulus.
template <typename Params>
struct Mont {
  static constexpr int kLimbs = Params::kLimbs;
  std::uint64_t v[Params::kLimbs];

  static Mont zero() {
    Mont out{};
    return out;
  }

  static Mont one() {
    Mont out;
    std::memcpy(out.v, Params::kR, sizeof(out.v));
    return out;
  }

  static Mont from_u64(std::uint64_t x) {
    Mont out{};
    out.v[0] = x;
    return to_mont(out);
  }

  // Raw little-endian limbs, already reduced, canonical (non-Montgomery) form.
  static Mont from_canonical(const std::uint64_t* limbs) {
    Mont out;
    std::memcpy(out.v, limbs, sizeof(out.v));
    return to_mont(out);
  }

  static Mont to_mont(const Mont& a) { return mul_raw(a, r2()); }

  Mont from_mont() const {
    Mont one_raw{};
    one_raw.v[0] = 1;
    return mul_raw(*this, one_raw);
  }

  static Mont r2() {
    Mont out;
    std::memcpy(out.v, Params::kR2, sizeof(out.v));
    return out;
  }

  bool is_zero() const {
    std::uint64_t acc = 0;
    for (int i = 0; i < kLimbs; ++i) acc |= v[i];
    return acc == 0;
  }

  bool operator==(const Mont& o) const {
    return std::memcmp(v, o.v, sizeof(v)) == 0;
  }
  bool operator!=(const Mont& o) const { return !(*this == o); }

  static int cmp_limbs(const std::uint64_t* a, const std::uint64_t* b) {
    for (int i = kLimbs - 1; i >= 0; --i) {
      if (a[i] < b[i]) return -1;
      if (a[i] > b[i]) return 1;
    }
    return 0;
  }

  static std::uint64_t add_limbs(std::uint64_t* out, const std::uint64_t* a,
                                 const std::uint64_t* b) {
    std::uint64_t carry = 0;
    for (int i = 0; i < kLimbs; ++i) {
      u128 s = (u128)a[i] + b[i] + carry;
      out[i] = (std::uint64_t)s;
      carry = (std::uint64_t)(s >> 64);
    }
    return carry;
  }

  static std::uint64_t sub_limbs(std::uint64_t* out, const std::uint64_t* a,
                                 const std::uint64_t* b) {
    std::uint64_t borrow = 0;
    for (int i = 0; i < kLimbs; ++i) {
      u128 d = (u128)a[i] - b[i] - borrow;
      out[i] = (std::uint64_t)d;
      borrow = (std::uint64_t)(d >> 64) & 1;
    }
    return borrow;
  }

  Mont operator+(const Mont& o) const {
    Mont out;
    std::uint64_t carry = add_limbs(out.v, v, o.v);
    if (carry || cmp_limbs(out.v, Params::kMod) >= 0) {
      sub_limbs(out.v, out.v, Params::kMod);
    }
    return out;
  }

  Mont operator-(const Mont& o) const {
    Mont out;
    if (sub_limbs(out.v, v, o.v)) add_limbs(out.v, out.v, Params::kMod);
    return out;
  }

  Mont neg() const {
    if (is_zero()) return *this;
    Mont out;
    sub_limbs(out.v, Params::kMod, v);
    return out;
  }

  Mont dbl() const { return *this + *this; }

  static Mont mul_raw(const Mont& a, const Mont& b) {
    std::uint64_t t[kLimbs + 2] = {0};
    for (int i = 0; i < kLimbs; ++i) {
      std::uint64_t carry = 0;
      for (int j = 0; j < kLimbs; ++j) {
        u128 cur = (u128)a.v[j] * b.v[i] + t[j] + carry;
        t[j] = (std::uint64_t)cur;
        carry = (std::uint64_t)(cur >> 64);
      }
      u128 s = (u128)t[kLimbs] + carry;
      t[kLimbs] = (std::uint64_t)s;
      t[kLimbs + 1] = (std::uint64_t)(s >> 64);

      std::uint64_t m = t[0] * Params::kInv;
      carry = (std::uint64_t)(((u128)m * Params::kMod[0] + t[0]) >> 64);
      for (int j = 1; j < kLimbs; ++j) {
        u128 cur = (u128)m * Params::kMod[j] + t[j] + carry;
        t[j - 1] = (std::uint64_t)cur;
        carry = (std::uint64_t)(cur >> 64);
      }
      s = (u128)t[kLimbs] + carry;
      t[kLimbs - 1] = (std::uint64_t)s;
      t[kLimbs] = t[kLimbs + 1] + (std::uint64_t)(s >> 64);
    }
    Mont out;
    std::memcpy(out.v, t, sizeof(out.v));
    if (t[kLimbs] || cmp_limbs(out.v, Params::kMod) >= 0) {
      sub_limbs(out.v, out.v, Params::kMod);
    }
    return out;
  }

  Mont operator*(const Mont& o) const { return mul_raw(*this, o); }

  Mont sqr() const { return mul_raw(*this, *this); }

  // exp given as little-endian limbs; not constant time.
  Mont pow(const std::uint64_t* exp, int exp_limbs) const {
    int top = exp_limbs - 1;
    while (top >= 0 && exp[top] == 0) --top;
    if (top < 0) return one();
    Mont acc = one();
    bool started = false;
    for (int i = top; i >= 0; --i) {
      for (int bit = 63; bit >= 0; --bit) {
        if (started) acc = acc.sqr();
        if ((exp[i] >> bit) & 1) {
          if (started) {
            acc = acc * *this;
          } else {
            acc = *this;
            started = true;
          }
        }
      }
    }
    return acc;
  }

  // canonical little-endian bytes, kLimbs*8 long
  void to_bytes_le(std::uint8_t* out) const {
    Mont c = from_mont();
    for (int i = 0; i < kLimbs; ++i) {
      for (int j = 0; j < 8; ++j) {
        out[8 * i + j] = static_cast<std::uint8_t>(c.v[i] >> (8 * j));
      }
    }
  }

  void to_bytes_be(std::uint8_t* out) const {
    Mont c = from_mont();
    for (int i = 0; i < kLimbs; ++i) {
      for (int j = 0; j < 8; ++j) {
        out[8 * (kLimbs - 1 - i) + (7 - j)] = static_cast<std::uint8_t>(c.v[i] >> (8 * j));
      }
    }
  }

  // Strict decode: rejects values >= modulus. Little-endian input.
  static bool from_bytes_le(const std::uint8_t* in, Mont* out) {
    Mont raw{};
    for (int i = 0; i < kLimbs; ++i) {
      std::uint64_t limb = 0;
      for (int j = 0; j < 8; ++j) limb |= (std::uint64_t)in[8 * i + j] << (8 * j);
      raw.v[i] = limb;
    }
    if (cmp_limbs(raw.v, Params::kMod) >= 0) return false;
    *out = to_mont(raw);
    return true;
  }

  static bool from_bytes_be(const std::uint8_t* in, Mont* out) {
    std::uint8_t le[kLimbs * 8];
    for (int i = 0; i < kLimbs * 8; ++i) le[i] = in[kLimbs * 8 - 1 - i];
    return from_bytes_le(le, out);
  }

  // Reduces an arbitrary-length big-endian byte string mod the modulus.
  static Mont from_bytes_be_reduce(const std::uint8_t* in, std::size_t len) {
    Mont acc = zero();
    Mont b256 = from_u64(256);
    for (std::size_t i = 0; i < len; ++i) {
      acc = acc * b256 + from_u64(in[i]);
    }
    return acc;
  }

  // Canonical-form parity and comparisons (for serialization sign rules).
  bool canonical_is_odd() const { return from_mont().v[0] & 1; }

  int cmp_canonical(const Mont& o) const {
    Mont a = from_mont();
    Mont b = o.from_mont();
    return cmp_limbs(a.v, b.v);
  }
};

struct FpParams {
  static constexpr int kLimbs = 6;
  static constexpr const std::uint64_t* kMod = kFpModulus;
  static constexpr std::uint64_t kInv = kFpInv;
  static constexpr const std::uint64_t* kR = kFpR;
  static constexpr const std::uint64_t* kR2 = kFpR2;
};

struct FrParams {
  static constexpr int kLimbs = 4;
  static constexpr const std::uint64_t* kMod = kFrModulus;
  static constexpr std::uint64_t kInv = kFrInv;
  static constexpr const std::uint64_t* kR = kFrR;
  static constexpr const std::uint64_t* kR2 = kFrR2;
};

using Fp = Mont<FpParams>;
using Fr = Mont<FrParams>;

inline Fp fp_inv(const Fp& a) { return a.pow(kFpPminus2, 6); }
inline Fr fr_inv(const Fr& a) { return a.pow(kFrRminus2, 4); }

inline bool fp_is_square(const Fp& a) {
  if (a.is_zero()) return true;
  return a.pow(kFpPminus1Div2, 6) == Fp::one();
}

// sqrt via (p+1)/4; returns false if a is not a square.
inline bool fp_sqrt(const Fp& a, Fp* out) {
  Fp cand = a.pow(kFpPplus1Div4, 6);
  if (cand.sqr() != a) return false;
  *out = cand;
  return true;
}

}  // namespace sdcred::detail
