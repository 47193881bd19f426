#pragma once

#include <vector>

#include "detail/curve.h"

namespace sdcred::detail {

// Sparse line value with nonzero coefficients at w^0, w^2, w^3.
struct LineEval {
  Fp2 a0, a1, b1;

  Fp12 to_fp12() const {
    Fp12 out{};
    out.c0 = {a0, a1, Fp2::zero()};
    out.c1 = {Fp2::zero(), b1, Fp2::zero()};
    return out;
  }
};

// Doubling step: advances t and evaluates the tangent line at (xp, yp).
// Lines carry an Fp2 scale factor, removed later by the final exponentiation.
inline LineEval miller_dbl(G2Jac* t, const Fp& xp, const Fp& yp) {
  Fp2 a = t->x.sqr();
  Fp2 b = t->y.sqr();
  Fp2 e = a.dbl() + a;
  Fp2 zsq = t->z.sqr();
  Fp2 z3 = (t->y * t->z).dbl();
  LineEval l;
  l.a0 = e * t->x - b.dbl();
  l.a1 = (e * zsq).mul_fp(xp).neg();
  l.b1 = (z3 * zsq).mul_fp(yp);

  Fp2 c = b.sqr();
  Fp2 d = ((t->x + b).sqr() - a - c).dbl();
  Fp2 x3 = e.sqr() - d.dbl();
  Fp2 y3 = e * (d - x3) - c.dbl().dbl().dbl();
  *t = {x3, y3, z3};
  return l;
}

// Mixed addition step with affine q; line through t and q evaluated at (xp, yp).
inline LineEval miller_add(G2Jac* t, const Fp2& xq, const Fp2& yq, const Fp& xp,
                           const Fp& yp) {
  Fp2 zsq = t->z.sqr();
  Fp2 u2 = xq * zsq;
  Fp2 s2 = yq * t->z * zsq;
  Fp2 h = u2 - t->x;
  Fp2 r = s2 - t->y;
  Fp2 z3 = t->z * h;
  LineEval l;
  l.a0 = r * xq - yq * z3;
  l.a1 = r.mul_fp(xp).neg();
  l.b1 = z3.mul_fp(yp);

  Fp2 hh = h.sqr();
  Fp2 hhh = h * hh;
  Fp2 v = t->x * hh;
  Fp2 x3 = r.sqr() - hhh - v.dbl();
  Fp2 y3 = r * (v - x3) - t->y * hhh;
  *t = {x3, y3, z3};
  return l;
}

// Ate Miller loop over |z|; result still needs the final exponentiation.
// p1 and q2 must be affine (z == 1 after to_affine conversion by caller).
inline Fp12 miller_loop(const Fp2& xq, const Fp2& yq, const Fp& xp, const Fp& yp) {
  Fp12 f = Fp12::one();
  G2Jac t = G2Jac::from_affine(xq, yq);
  for (int bit = 62; bit >= 0; --bit) {
    f = f.sqr();
    f = f * miller_dbl(&t, xp, yp).to_fp12();
    if ((kBlsXAbs >> bit) & 1) {
      f = f * miller_add(&t, xq, yq, xp, yp).to_fp12();
    }
  }
  return f.conj();  // z < 0
}

inline Fp12 pow_x_abs(const Fp12& y) { return fp12_pow_u64(y, kBlsXAbs, false); }

// y^(z-1) for unitary y; z is negative so this is conj(y^(|z|+1)).
inline Fp12 pow_z_minus_1(const Fp12& y) { return (pow_x_abs(y) * y).conj(); }

inline Fp12 final_exponentiation(const Fp12& f) {
  // easy part: f^((p^6-1)(p^2+1))
  Fp12 t = f.conj() * f.inv();
  t = fp12_frob(t, 2) * t;
  // hard part: t^((z-1)^2 (z+p) (z^2+p^2-1) + 3), a multiple-of-3 variant
  Fp12 a = pow_z_minus_1(pow_z_minus_1(t));
  Fp12 d = pow_x_abs(a).conj() * fp12_frob(a, 1);
  Fp12 e = pow_x_abs(pow_x_abs(d));
  Fp12 g = e * fp12_frob(d, 2) * d.conj();
  Fp12 t3 = t * t.sqr();
  return g * t3;
}

struct PairingInput {
  G2Jac q;
  G1Jac p;
};

// Product of pairings sharing one final exponentiation. Infinity on either
// side contributes the identity factor.
inline Fp12 pairing_product(const std::vector<PairingInput>& inputs) {
  Fp12 f = Fp12::one();
  bool any = false;
  for (const PairingInput& in : inputs) {
    if (in.q.is_infinity() || in.p.is_infinity()) continue;
    Fp2 xq, yq;
    in.q.to_affine(&xq, &yq);
    Fp xp, yp;
    in.p.to_affine(&xp, &yp);
    f = f * miller_loop(xq, yq, xp, yp);
    any = true;
  }
  if (!any) return Fp12::one();
  return final_exponentiation(f);
}

inline Fp12 pairing_single(const G2Jac& q, const G1Jac& p) {
  return pairing_product({{q, p}});
}

}  // namespace sdcred::detail
