#include <doctest.h>
#include <bit>

#include "derived_vectors.h"
#include "detail/curve.h"
#include "sdcred/bytes.h"
#include "sdcred/ec.h"
#include "sdcred/errors.h"
#include "sdcred/rng.h"

using namespace sdcred;
using detail::Fp;
using detail::Fp2;
using detail::Fr;
using detail::G1Jac;
using detail::G2Jac;

namespace {

Scalar scalar_from_be_hex(const std::string& hex) {
  Bytes b = from_hex(hex);
  Fr f = Fr::from_bytes_be_reduce(b.data(), b.size());
  Scalar s;
  std::uint8_t le[32];
  f.to_bytes_le(le);
  std::array<std::uint8_t, 32> arr;
  std::copy(le, le + 32, arr.begin());
  return Scalar::from_bytes(arr);
}

}  // namespace

TEST_CASE("generators are on curve, have order r, and serialize to the known bytes") {
  G1Jac g1 = detail::g1_generator();
  G2Jac g2 = detail::g2_generator();
  Fp x1, y1;
  g1.to_affine(&x1, &y1);
  CHECK(detail::on_curve_affine(x1, y1, detail::g1_b()));
  Fp2 x2, y2;
  g2.to_affine(&x2, &y2);
  CHECK(detail::on_curve_affine(x2, y2, detail::g2_b()));

  CHECK(detail::mul_scalar(g1, detail::kFrModulus).is_infinity());
  CHECK(detail::mul_scalar(g2, detail::kFrModulus).is_infinity());
  CHECK(detail::g1_in_subgroup(g1));
  CHECK(detail::g2_in_subgroup(g2));

  CHECK(to_hex(GroupElementG1::generator().serialize()) == testvec::kG1Gen);
  CHECK(to_hex(GroupElementG2::generator().serialize()) == testvec::kG2Gen);
}

TEST_CASE("group law consistency") {
  DrbgRng rng(str_bytes("curve-law"));
  GroupElementG1 g = GroupElementG1::generator();
  GroupElementG2 h = GroupElementG2::generator();

  // small multiples by repeated addition vs scalar mul
  GroupElementG1 acc = GroupElementG1::identity();
  GroupElementG2 acc2 = GroupElementG2::identity();
  for (int k = 1; k <= 20; ++k) {
    acc = acc + g;
    acc2 = acc2 + h;
    CHECK(acc == g * Scalar::from_u64(static_cast<std::uint64_t>(k)));
    CHECK(acc2 == h * Scalar::from_u64(static_cast<std::uint64_t>(k)));
  }

  for (int i = 0; i < 10; ++i) {
    Scalar a = Scalar::random(rng);
    Scalar b = Scalar::random(rng);
    CHECK(g * a + g * b == g * (a + b));
    CHECK(h * a + h * b == h * (a + b));
    CHECK((g * a) * b == g * (a * b));
    CHECK(g * a + (g * a).neg() == GroupElementG1::identity());
  }
  CHECK(g * Scalar::zero() == GroupElementG1::identity());
  CHECK(GroupElementG1::identity() + g == g);
}

TEST_CASE("known scalar multiples") {
  Scalar seven = Scalar::from_u64(7);
  CHECK(to_hex((GroupElementG1::generator() * seven).serialize()) == testvec::kG1GenX7);
  CHECK(to_hex((GroupElementG2::generator() * seven).serialize()) == testvec::kG2GenX7);
  Scalar big = scalar_from_be_hex(testvec::kBigScalar);
  CHECK(to_hex((GroupElementG1::generator() * big).serialize()) == testvec::kG1GenXBig);
  CHECK(to_hex((GroupElementG2::generator() * big).serialize()) == testvec::kG2GenXBig);
}

TEST_CASE("serialization roundtrips") {
  DrbgRng rng(str_bytes("curve-ser"));
  for (int i = 0; i < 10; ++i) {
    Scalar k = Scalar::random(rng);
    GroupElementG1 p = GroupElementG1::generator() * k;
    auto enc = p.serialize();
    CHECK(GroupElementG1::deserialize(enc.data(), enc.size()) == p);
    GroupElementG2 q = GroupElementG2::generator() * k;
    auto enc2 = q.serialize();
    CHECK(GroupElementG2::deserialize(enc2.data(), enc2.size()) == q);
  }
  auto inf1 = GroupElementG1::identity().serialize();
  CHECK(inf1[0] == 0xc0);
  CHECK(GroupElementG1::deserialize(inf1.data(), inf1.size()).is_identity());
  auto inf2 = GroupElementG2::identity().serialize();
  CHECK(GroupElementG2::deserialize(inf2.data(), inf2.size()).is_identity());
}

TEST_CASE("deserialize rejects malformed encodings") {
  auto enc = GroupElementG1::generator().serialize();
  auto bad = enc;
  bad[0] &= 0x7f;  // clear compressed flag
  CHECK_THROWS_AS(GroupElementG1::deserialize(bad.data(), bad.size()), DecodeError);
  CHECK_THROWS_AS(GroupElementG1::deserialize(enc.data(), 47), DecodeError);

  // x >= p
  auto big = enc;
  for (int i = 1; i < 48; ++i) big[i] = 0xff;
  big[0] = 0x9f;
  CHECK_THROWS_AS(GroupElementG1::deserialize(big.data(), big.size()), DecodeError);

  // x whose rhs is a non-residue
  auto off = enc;
  bool threw_off_curve = false;
  for (int tweak = 1; tweak < 60 && !threw_off_curve; ++tweak) {
    off[47] = static_cast<std::uint8_t>(enc[47] + tweak);
    try {
      GroupElementG1::deserialize(off.data(), off.size());
    } catch (const DecodeError&) {
      threw_off_curve = true;
    }
  }
  CHECK(threw_off_curve);

  // infinity with junk body
  std::array<std::uint8_t, 48> inf{};
  inf[0] = 0xc0;
  inf[20] = 1;
  CHECK_THROWS_AS(GroupElementG1::deserialize(inf.data(), inf.size()), DecodeError);

  auto enc2 = GroupElementG2::generator().serialize();
  auto bad2 = enc2;
  bad2[0] &= 0x7f;
  CHECK_THROWS_AS(GroupElementG2::deserialize(bad2.data(), bad2.size()), DecodeError);
}

TEST_CASE("deserialize rejects points outside the prime-order subgroup") {
  // walk x values until one lands on the curve; cofactor > 1 makes the hit
  // overwhelmingly likely to sit outside G1
  int rejected = 0;
  int found = 0;
  for (std::uint64_t xi = 2; xi < 200 && found < 3; ++xi) {
    Fp x = Fp::from_u64(xi);
    Fp rhs = x.sqr() * x + detail::g1_b();
    Fp y;
    if (!detail::fp_sqrt(rhs, &y)) continue;
    G1Jac p = G1Jac::from_affine(x, y);
    if (detail::g1_in_subgroup(p)) continue;
    ++found;
    std::array<std::uint8_t, 48> enc{};
    x.to_bytes_be(enc.data());
    enc[0] |= 0x80;
    if (y.cmp_canonical(y.neg()) > 0) enc[0] |= 0x20;
    try {
      GroupElementG1::deserialize(enc.data(), enc.size());
    } catch (const DecodeError&) {
      ++rejected;
    }
  }
  CHECK(found == 3);
  CHECK(rejected == 3);

  // same story on the twist
  found = rejected = 0;
  for (std::uint64_t xi = 1; xi < 100 && found < 2; ++xi) {
    Fp2 x{Fp::from_u64(xi), Fp::from_u64(1)};
    Fp2 rhs = x.sqr() * x + detail::g2_b();
    Fp2 y;
    if (!detail::fp2_sqrt(rhs, &y)) continue;
    G2Jac p = G2Jac::from_affine(x, y);
    if (detail::g2_in_subgroup(p)) continue;
    ++found;
    std::array<std::uint8_t, 96> enc{};
    x.c1.to_bytes_be(enc.data());
    x.c0.to_bytes_be(enc.data() + 48);
    enc[0] |= 0x80;
    Fp2 ny = y.neg();
    int cmp = y.c1.cmp_canonical(ny.c1);
    if (cmp == 0) cmp = y.c0.cmp_canonical(ny.c0);
    if (cmp > 0) enc[0] |= 0x20;
    try {
      GroupElementG2::deserialize(enc.data(), enc.size());
    } catch (const DecodeError&) {
      ++rejected;
    }
  }
  CHECK(found == 2);
  CHECK(rejected == 2);
}

TEST_CASE("psi eigenvalue and cofactor clearing") {
  DrbgRng rng(str_bytes("curve-psi"));
  G2Jac g2 = detail::g2_generator();
  for (int i = 0; i < 5; ++i) {
    Scalar k = Scalar::random(rng);
    Fr fk = std::bit_cast<Fr>(k.repr);
    G2Jac q = detail::mul_fr(g2, fk);
    // psi(Q) == [z]Q on the subgroup
    CHECK(detail::g2_psi(q) + detail::mul_x_abs(q) == G2Jac::infinity());
  }
  // clearing an arbitrary twist point lands in the subgroup
  for (std::uint64_t xi = 1; xi < 60; ++xi) {
    Fp2 x{Fp::from_u64(xi), Fp::from_u64(3)};
    Fp2 rhs = x.sqr() * x + detail::g2_b();
    Fp2 y;
    if (!detail::fp2_sqrt(rhs, &y)) continue;
    G2Jac cleared = detail::g2_clear_cofactor(G2Jac::from_affine(x, y));
    CHECK(detail::g2_in_subgroup(cleared));
  }
}

TEST_CASE("msm agrees with the naive sum") {
  DrbgRng rng(str_bytes("curve-msm"));
  for (std::size_t n : {0u, 1u, 2u, 5u, 16u, 33u}) {
    std::vector<GroupElementG1> pts;
    std::vector<Scalar> sc;
    GroupElementG1 expect = GroupElementG1::identity();
    for (std::size_t i = 0; i < n; ++i) {
      Scalar base = Scalar::random(rng);
      Scalar k = Scalar::random(rng);
      GroupElementG1 p = GroupElementG1::generator() * base;
      pts.push_back(p);
      sc.push_back(k);
      expect = expect + p * k;
    }
    CHECK(msm_g1(pts, sc) == expect);
  }
}
