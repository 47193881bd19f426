#pragma once

#include <array>
#include <vector>

#include "detail/tower.h"

namespace sdcred::detail {

inline Fp field_inv(const Fp& x) { return fp_inv(x); }
inline Fp2 field_inv(const Fp2& x) { return x.inv(); }

// Jacobian point on y^2 = x^3 + b; z == 0 marks infinity.
template <typename F>
struct Jac {
  F x, y, z;

  static Jac infinity() { return {F::one(), F::one(), F::zero()}; }
  bool is_infinity() const { return z.is_zero(); }

  static Jac from_affine(const F& ax, const F& ay) { return {ax, ay, F::one()}; }

  void to_affine(F* ax, F* ay) const {
    F zi = field_inv(z);
    F zi2 = zi.sqr();
    *ax = x * zi2;
    *ay = y * zi2 * zi;
  }

  Jac neg() const { return {x, y.neg(), z}; }

  bool operator==(const Jac& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    F z1s = z.sqr();
    F z2s = o.z.sqr();
    if (x * z2s != o.x * z1s) return false;
    return y * z2s * o.z == o.y * z1s * z;
  }
  bool operator!=(const Jac& o) const { return !(*this == o); }

  Jac dbl() const {
    if (is_infinity()) return *this;
    F a = x.sqr();
    F b = y.sqr();
    F c = b.sqr();
    F t = (x + b).sqr() - a - c;
    F d = t.dbl();
    F e = a.dbl() + a;
    F f = e.sqr();
    F x3 = f - d.dbl();
    F c8 = c.dbl().dbl().dbl();
    F y3 = e * (d - x3) - c8;
    F z3 = (y * z).dbl();
    return {x3, y3, z3};
  }

  Jac operator+(const Jac& o) const {
    if (is_infinity()) return o;
    if (o.is_infinity()) return *this;
    F z1z1 = z.sqr();
    F z2z2 = o.z.sqr();
    F u1 = x * z2z2;
    F u2 = o.x * z1z1;
    F s1 = y * o.z * z2z2;
    F s2 = o.y * z * z1z1;
    F h = u2 - u1;
    F r = s2 - s1;
    if (h.is_zero()) {
      if (r.is_zero()) return dbl();
      return infinity();
    }
    F hh = h.sqr();
    F hhh = h * hh;
    F v = u1 * hh;
    F x3 = r.sqr() - hhh - v.dbl();
    F y3 = r * (v - x3) - s1 * hhh;
    F z3 = z * o.z * h;
    return {x3, y3, z3};
  }

  Jac operator-(const Jac& o) const { return *this + o.neg(); }
};

using G1Jac = Jac<Fp>;
using G2Jac = Jac<Fp2>;

inline Fp g1_b() { return Fp::from_u64(4); }
inline Fp2 g2_b() { return {Fp::from_u64(4), Fp::from_u64(4)}; }

template <typename F>
bool on_curve_affine(const F& x, const F& y, const F& b) {
  return y.sqr() == x.sqr() * x + b;
}

inline G1Jac g1_generator() {
  return G1Jac::from_affine(Fp::from_canonical(kG1GenX), Fp::from_canonical(kG1GenY));
}

inline G2Jac g2_generator() {
  Fp2 gx{Fp::from_canonical(kG2GenX[0]), Fp::from_canonical(kG2GenX[1])};
  Fp2 gy{Fp::from_canonical(kG2GenY[0]), Fp::from_canonical(kG2GenY[1])};
  return G2Jac::from_affine(gx, gy);
}

template <typename F>
Jac<F> mul_u64(const Jac<F>& p, std::uint64_t k) {
  Jac<F> acc = Jac<F>::infinity();
  for (int bit = 63; bit >= 0; --bit) {
    acc = acc.dbl();
    if ((k >> bit) & 1) acc = acc + p;
  }
  return acc;
}

// width-4 NAF digits, least significant first, over 4 little-endian limbs
inline std::vector<int> wnaf4_digits(const std::uint64_t limbs[4]) {
  std::uint64_t v[5] = {limbs[0], limbs[1], limbs[2], limbs[3], 0};
  auto is_zero = [&] {
    return (v[0] | v[1] | v[2] | v[3] | v[4]) == 0;
  };
  auto shr1 = [&] {
    for (int i = 0; i < 5; ++i) {
      v[i] >>= 1;
      if (i + 1 < 5) v[i] |= v[i + 1] << 63;
    }
  };
  std::vector<int> digits;
  digits.reserve(260);
  while (!is_zero()) {
    if (v[0] & 1) {
      int d = static_cast<int>(v[0] & 0xf);
      if (d >= 8) d -= 16;
      if (d >= 0) {
        std::uint64_t borrow = static_cast<std::uint64_t>(d);
        for (int i = 0; i < 5 && borrow; ++i) {
          std::uint64_t before = v[i];
          v[i] -= borrow;
          borrow = v[i] > before ? 1 : 0;
        }
      } else {
        std::uint64_t carry = static_cast<std::uint64_t>(-d);
        for (int i = 0; i < 5 && carry; ++i) {
          v[i] += carry;
          carry = v[i] < carry ? 1 : 0;
        }
      }
      digits.push_back(d);
    } else {
      digits.push_back(0);
    }
    shr1();
  }
  return digits;
}

// scalar given as canonical little-endian limbs of Fr
template <typename F>
Jac<F> mul_scalar(const Jac<F>& p, const std::uint64_t limbs[4]) {
  std::vector<int> digits = wnaf4_digits(limbs);
  if (digits.empty() || p.is_infinity()) return Jac<F>::infinity();
  Jac<F> table[4];  // p, 3p, 5p, 7p
  table[0] = p;
  Jac<F> p2 = p.dbl();
  for (int i = 1; i < 4; ++i) table[i] = table[i - 1] + p2;
  Jac<F> acc = Jac<F>::infinity();
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    acc = acc.dbl();
    int d = digits[static_cast<std::size_t>(i)];
    if (d > 0) acc = acc + table[(d - 1) / 2];
    if (d < 0) acc = acc + table[(-d - 1) / 2].neg();
  }
  return acc;
}

inline Jac<Fp> mul_fr(const Jac<Fp>& p, const Fr& k) {
  Fr c = k.from_mont();
  return mul_scalar(p, c.v);
}

inline Jac<Fp2> mul_fr(const Jac<Fp2>& p, const Fr& k) {
  Fr c = k.from_mont();
  return mul_scalar(p, c.v);
}

// Joint width-4 NAF over a shared doubling chain; points and scalars must
// have equal length. Beats bucket methods up to a few hundred points, which
// covers every multiscalar multiplication in this codebase.
template <typename F>
Jac<F> msm(const std::vector<Jac<F>>& points, const std::vector<Fr>& scalars) {
  std::size_t n = points.size();
  if (n == 0) return Jac<F>::infinity();
  std::vector<std::array<Jac<F>, 4>> tables(n);  // p, 3p, 5p, 7p
  std::vector<std::vector<int>> digits(n);
  std::size_t longest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Fr c = scalars[i].from_mont();
    digits[i] = wnaf4_digits(c.v);
    longest = std::max(longest, digits[i].size());
    tables[i][0] = points[i];
    Jac<F> p2 = points[i].dbl();
    for (int k = 1; k < 4; ++k) tables[i][k] = tables[i][k - 1] + p2;
  }
  Jac<F> acc = Jac<F>::infinity();
  for (std::size_t j = longest; j-- > 0;) {
    acc = acc.dbl();
    for (std::size_t i = 0; i < n; ++i) {
      if (j >= digits[i].size()) continue;
      int d = digits[i][j];
      if (d > 0) acc = acc + tables[i][(d - 1) / 2];
      if (d < 0) acc = acc + tables[i][(-d - 1) / 2].neg();
    }
  }
  return acc;
}

// psi endomorphism tables for G2 (untwist-Frobenius-twist)
struct PsiConsts {
  Fp2 px, py;
  PsiConsts() {
    px = {Fp::from_canonical(kPsiX[0]), Fp::from_canonical(kPsiX[1])};
    py = {Fp::from_canonical(kPsiY[0]), Fp::from_canonical(kPsiY[1])};
  }
};

inline const PsiConsts& psi_consts() {
  static const PsiConsts c;
  return c;
}

inline G2Jac g2_psi(const G2Jac& p) {
  const PsiConsts& c = psi_consts();
  return {c.px * p.x.conj(), c.py * p.y.conj(), p.z.conj()};
}

// [|z|]P for the BLS parameter (z itself is negative)
template <typename F>
Jac<F> mul_x_abs(const Jac<F>& p) {
  return mul_u64(p, kBlsXAbs);
}

inline bool g1_in_subgroup(const G1Jac& p) {
  if (p.is_infinity()) return true;
  return mul_scalar(p, kFrModulus).is_infinity();
}

// Q in G2 iff psi(Q) == [z]Q, i.e. psi(Q) + [|z|]Q is the identity.
inline bool g2_in_subgroup(const G2Jac& p) {
  if (p.is_infinity()) return true;
  return g2_psi(p) + mul_x_abs(p) == G2Jac::infinity();
}

// Budroni-Pintore fast cofactor clearing for G2.
inline G2Jac g2_clear_cofactor(const G2Jac& p) {
  G2Jac zp = mul_x_abs(p).neg();   // [z]P
  G2Jac t0 = zp - p;               // [z-1]P
  G2Jac t1 = mul_x_abs(t0).neg() - p;  // [z^2-z-1]P
  G2Jac t2 = g2_psi(t0);           // psi([z-1]P)
  G2Jac t3 = g2_psi(g2_psi(p.dbl()));  // psi^2([2]P)
  return t1 + t2 + t3;
}

inline G1Jac g1_clear_cofactor(const G1Jac& p) { return mul_u64(p, kG1HEff); }

}  // namespace sdcred::detail
