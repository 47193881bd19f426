#pragma once

#include "detail/mont.h"

// Extension tower: Fp2 = Fp[i]/(i^2+1), Fp6 = Fp2[v]/(v^3 - xi) with
// xi = 1+i, Fp12 = Fp6[w]/(w^2 - v).

namespace sdcred::detail {

struct Fp2 {
  Fp c0, c1;

  static Fp2 zero() { return {Fp::zero(), Fp::zero()}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp2& o) const { return !(*this == o); }

  Fp2 operator+(const Fp2& o) const { return {c0 + o.c0, c1 + o.c1}; }
  Fp2 operator-(const Fp2& o) const { return {c0 - o.c0, c1 - o.c1}; }
  Fp2 neg() const { return {c0.neg(), c1.neg()}; }
  Fp2 conj() const { return {c0, c1.neg()}; }
  Fp2 dbl() const { return {c0.dbl(), c1.dbl()}; }

  Fp2 operator*(const Fp2& o) const {
    Fp ac = c0 * o.c0;
    Fp bd = c1 * o.c1;
    Fp cross = (c0 + c1) * (o.c0 + o.c1);
    return {ac - bd, cross - ac - bd};
  }

  Fp2 mul_fp(const Fp& s) const { return {c0 * s, c1 * s}; }

  Fp2 sqr() const {
    Fp t = (c0 + c1) * (c0 - c1);
    return {t, (c0 * c1).dbl()};
  }

  // multiply by xi = 1+i
  Fp2 mul_xi() const { return {c0 - c1, c0 + c1}; }

  Fp2 inv() const {
    Fp norm = c0.sqr() + c1.sqr();
    Fp ni = fp_inv(norm);
    return {c0 * ni, (c1 * ni).neg()};
  }
};

inline bool fp2_is_square(const Fp2& x) {
  return fp_is_square(x.c0.sqr() + x.c1.sqr());
}

// Complex-method square root; returns false when x is a non-residue.
inline bool fp2_sqrt(const Fp2& x, Fp2* out) {
  if (x.c1.is_zero()) {
    Fp r;
    if (fp_sqrt(x.c0, &r)) {
      *out = {r, Fp::zero()};
      return true;
    }
    if (!fp_sqrt(x.c0.neg(), &r)) return false;
    *out = {Fp::zero(), r};
    return true;
  }
  Fp n;
  if (!fp_sqrt(x.c0.sqr() + x.c1.sqr(), &n)) return false;
  Fp inv2 = fp_inv(Fp::from_u64(2));
  Fp delta = (x.c0 + n) * inv2;
  if (!fp_is_square(delta)) {
    delta = (x.c0 - n) * inv2;
    if (!fp_is_square(delta)) return false;
  }
  Fp x0;
  if (!fp_sqrt(delta, &x0)) return false;
  Fp x1 = x.c1 * fp_inv(x0.dbl());
  Fp2 cand{x0, x1};
  if (cand.sqr() != x) return false;
  *out = cand;
  return true;
}

inline int fp2_sgn0(const Fp2& x) {
  int sign0 = x.c0.canonical_is_odd() ? 1 : 0;
  int zero0 = x.c0.is_zero() ? 1 : 0;
  int sign1 = x.c1.canonical_is_odd() ? 1 : 0;
  return sign0 | (zero0 & sign1);
}

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {Fp2::zero(), Fp2::zero(), Fp2::zero()}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fp6& o) const {
    return c0 == o.c0 && c1 == o.c1 && c2 == o.c2;
  }

  Fp6 operator+(const Fp6& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
  Fp6 operator-(const Fp6& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
  Fp6 neg() const { return {c0.neg(), c1.neg(), c2.neg()}; }

  Fp6 operator*(const Fp6& o) const {
    Fp2 t0 = c0 * o.c0;
    Fp2 t1 = c1 * o.c1;
    Fp2 t2 = c2 * o.c2;
    Fp2 r0 = t0 + ((c1 + c2) * (o.c1 + o.c2) - (t1 + t2)).mul_xi();
    Fp2 r1 = (c0 + c1) * (o.c0 + o.c1) - (t0 + t1) + t2.mul_xi();
    Fp2 r2 = (c0 + c2) * (o.c0 + o.c2) - (t0 + t2) + t1;
    return {r0, r1, r2};
  }

  Fp6 sqr() const { return *this * *this; }

  // multiply by v
  Fp6 mul_v() const { return {c2.mul_xi(), c0, c1}; }

  Fp6 inv() const {
    Fp2 t0 = c0.sqr() - (c1 * c2).mul_xi();
    Fp2 t1 = c2.sqr().mul_xi() - c0 * c1;
    Fp2 t2 = c1.sqr() - c0 * c2;
    Fp2 d = c0 * t0 + (c2 * t1 + c1 * t2).mul_xi();
    Fp2 di = d.inv();
    return {t0 * di, t1 * di, t2 * di};
  }
};

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp12& o) const { return !(*this == o); }

  Fp12 operator*(const Fp12& o) const {
    Fp6 ac = c0 * o.c0;
    Fp6 bd = c1 * o.c1;
    Fp6 cross = (c0 + c1) * (o.c0 + o.c1);
    return {ac + bd.mul_v(), cross - (ac + bd)};
  }

  Fp12 sqr() const { return *this * *this; }

  // conjugate; equals inverse on the cyclotomic subgroup
  Fp12 conj() const { return {c0, c1.neg()}; }

  Fp12 inv() const {
    Fp6 t = (c0 * c0 - (c1 * c1).mul_v()).inv();
    return {c0 * t, (c1 * t).neg()};
  }

  // coefficient of w^j in the flat basis [a0,b0,a1,b1,a2,b2]
  Fp2& flat(int j) {
    Fp6& part = (j % 2 == 0) ? c0 : c1;
    int idx = j / 2;
    return idx == 0 ? part.c0 : (idx == 1 ? part.c1 : part.c2);
  }
  const Fp2& flat(int j) const { return const_cast<Fp12*>(this)->flat(j); }
};

// Frobenius tables in Montgomery form, built on first use.
struct FrobTables {
  Fp2 w[3][6];
  FrobTables() {
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < 6; ++j) {
        w[k][j] = {Fp::from_canonical(kFrobW[k][j][0]),
                   Fp::from_canonical(kFrobW[k][j][1])};
      }
    }
  }
};

inline const FrobTables& frob_tables() {
  static const FrobTables tables;
  return tables;
}

// x -> x^(p^k) for k in 1..3
inline Fp12 fp12_frob(const Fp12& x, int k) {
  const FrobTables& t = frob_tables();
  Fp12 out;
  for (int j = 0; j < 6; ++j) {
    Fp2 c = x.flat(j);
    if (k % 2 == 1) c = c.conj();
    out.flat(j) = c * t.w[k - 1][j];
  }
  return out;
}

// exponent as little-endian limbs; requires a unitary base if negate is set
inline Fp12 fp12_pow_u64(const Fp12& x, std::uint64_t e, bool negate) {
  Fp12 acc = Fp12::one();
  bool started = false;
  for (int bit = 63; bit >= 0; --bit) {
    if (started) acc = acc.sqr();
    if ((e >> bit) & 1) {
      if (started) {
        acc = acc * x;
      } else {
        acc = x;
        started = true;
      }
    }
  }
  if (!started) return Fp12::one();
  return negate ? acc.conj() : acc;
}

}  // namespace sdcred::detail
