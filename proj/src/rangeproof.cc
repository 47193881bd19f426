#include "sdcred/rangeproof.h"

#include <span>

#include "sdcred/errors.h"
#include "sdcred/transcript.h"

namespace sdcred::rangeproof {

namespace {

constexpr std::uint32_t kMaxBits = 64;

Bytes pser(const GroupElementG1& p) {
  auto enc = p.serialize();
  return Bytes(enc.begin(), enc.end());
}

std::uint32_t log2_bits(std::uint32_t n_bits) {
  switch (n_bits) {
    case 8: return 3;
    case 16: return 4;
    case 32: return 5;
    case 64: return 6;
  }
  throw UnsupportedBitWidthError("bit width must be 8, 16, 32, or 64");
}

void validate_statement(const RangeStatement& stmt) {
  std::uint32_t rounds = log2_bits(stmt.bits);
  (void)rounds;
  if (stmt.lo >= stmt.hi) throw ParameterError("lo must be strictly below hi");
  std::uint64_t span = stmt.hi - stmt.lo;
  if (stmt.bits < 64 && span > (std::uint64_t{1} << stmt.bits) - 1) {
    throw ParameterError("range wider than the stated bit width");
  }
}

std::vector<GroupElementG1> derive_gens(const char* tag) {
  std::vector<GroupElementG1> out;
  out.reserve(kMaxBits);
  for (std::uint32_t i = 0; i < kMaxBits; ++i) {
    Bytes msg;
    append_u32le(msg, i);
    out.push_back(hash_to_point_g1(str_bytes(tag), msg));
  }
  return out;
}

Scalar inner(std::span<const Scalar> a, std::span<const Scalar> b) {
  Scalar acc = Scalar::zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

// powers[i] = base^i
std::vector<Scalar> powers(const Scalar& base, std::uint32_t n) {
  std::vector<Scalar> out(n);
  out[0] = Scalar::one();
  for (std::uint32_t i = 1; i < n; ++i) out[i] = out[i - 1] * base;
  return out;
}

Transcript statement_transcript(const pedersen::PedersenParams& params,
                                const RangeStatement& stmt) {
  Transcript tr(str_bytes("range-proof"));
  tr.absorb(str_bytes("gval"), pser(params.G_val));
  tr.absorb(str_bytes("gblind"), pser(params.G_blind));
  tr.absorb(str_bytes("commitment"), pser(stmt.commitment));
  Bytes lo, hi, bits;
  append_u64le(lo, stmt.lo);
  append_u64le(hi, stmt.hi);
  append_u32le(bits, stmt.bits);
  tr.absorb(str_bytes("lo"), lo);
  tr.absorb(str_bytes("hi"), hi);
  tr.absorb(str_bytes("bits"), bits);
  return tr;
}

// Replays the sub-proof transcript schedule shared by proving and verifying:
// absorb A and S, draw y and z, absorb T1 and T2, draw x, absorb the final
// scalar triple, draw w.
struct Challenges {
  Scalar y, z, x, w;
};

Challenges replay_challenges(Transcript& tr, const GroupElementG1& A,
                             const GroupElementG1& S, const GroupElementG1& T1,
                             const GroupElementG1& T2, const Scalar& taux,
                             const Scalar& mu, const Scalar& that) {
  Challenges ch;
  tr.absorb(str_bytes("A"), pser(A));
  tr.absorb(str_bytes("S"), pser(S));
  ch.y = tr.challenge(str_bytes("y"));
  ch.z = tr.challenge(str_bytes("z"));
  tr.absorb(str_bytes("T1"), pser(T1));
  tr.absorb(str_bytes("T2"), pser(T2));
  ch.x = tr.challenge(str_bytes("x"));
  Bytes tmt;
  auto put = [&tmt](const Scalar& s) {
    auto enc = s.to_bytes();
    tmt.insert(tmt.end(), enc.begin(), enc.end());
  };
  put(taux);
  put(mu);
  put(that);
  tr.absorb(str_bytes("tmt"), tmt);
  ch.w = tr.challenge(str_bytes("w"));
  return ch;
}

void prove_sub(Transcript& tr, const pedersen::PedersenParams& params,
               std::span<const GroupElementG1> g, std::span<const GroupElementG1> h,
               std::uint32_t n, std::uint64_t v, const Scalar& gamma, Rng& rng,
               RangeProof* out) {
  tr.absorb(str_bytes("sub"),
            pser(pedersen::commit(params, Scalar::from_u64(v), gamma)));

  std::vector<Scalar> aL(n), aR(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    aL[i] = Scalar::from_u64((v >> i) & 1);
    aR[i] = aL[i] - Scalar::one();
  }

  Scalar alpha = Scalar::random(rng);
  std::vector<GroupElementG1> basis;
  basis.reserve(2 * n + 1);
  basis.push_back(params.G_blind);
  basis.insert(basis.end(), g.begin(), g.end());
  basis.insert(basis.end(), h.begin(), h.end());

  std::vector<Scalar> coeffs;
  coeffs.reserve(2 * n + 1);
  coeffs.push_back(alpha);
  coeffs.insert(coeffs.end(), aL.begin(), aL.end());
  coeffs.insert(coeffs.end(), aR.begin(), aR.end());
  GroupElementG1 A = msm_g1(basis, coeffs);

  Scalar rho = Scalar::random(rng);
  std::vector<Scalar> sL(n), sR(n);
  for (auto& s : sL) s = Scalar::random(rng);
  for (auto& s : sR) s = Scalar::random(rng);
  coeffs.clear();
  coeffs.push_back(rho);
  coeffs.insert(coeffs.end(), sL.begin(), sL.end());
  coeffs.insert(coeffs.end(), sR.begin(), sR.end());
  GroupElementG1 S = msm_g1(basis, coeffs);

  tr.absorb(str_bytes("A"), pser(A));
  tr.absorb(str_bytes("S"), pser(S));
  Scalar y = tr.challenge(str_bytes("y"));
  Scalar z = tr.challenge(str_bytes("z"));

  std::vector<Scalar> ypow = powers(y, n);
  std::vector<Scalar> two = powers(Scalar::from_u64(2), n);
  Scalar zz = z * z;

  std::vector<Scalar> l0(n), r0(n), r1(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    l0[i] = aL[i] - z;
    r0[i] = ypow[i] * (aR[i] + z) + zz * two[i];
    r1[i] = ypow[i] * sR[i];
  }
  Scalar t1 = inner(l0, r1) + inner(sL, r0);
  Scalar t2 = inner(sL, r1);
  Scalar tau1 = Scalar::random(rng);
  Scalar tau2 = Scalar::random(rng);
  GroupElementG1 T1 = pedersen::commit(params, t1, tau1);
  GroupElementG1 T2 = pedersen::commit(params, t2, tau2);

  tr.absorb(str_bytes("T1"), pser(T1));
  tr.absorb(str_bytes("T2"), pser(T2));
  Scalar x = tr.challenge(str_bytes("x"));

  std::vector<Scalar> l(n), r(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    l[i] = l0[i] + sL[i] * x;
    r[i] = r0[i] + r1[i] * x;
  }
  Scalar that = inner(l, r);
  Scalar taux = tau2 * x * x + tau1 * x + zz * gamma;
  Scalar mu = alpha + rho * x;

  Bytes tmt;
  for (const Scalar* s : {&taux, &mu, &that}) {
    auto enc = s->to_bytes();
    tmt.insert(tmt.end(), enc.begin(), enc.end());
  }
  tr.absorb(str_bytes("tmt"), tmt);
  Scalar w = tr.challenge(str_bytes("w"));

  // The folded generator vectors stay virtual: gcoef/hcoef carry each original
  // base's accumulated fold product (hcoef starts at y^-i for the h-rescale),
  // and every L/R becomes a single multiscalar multiplication over the fixed
  // bases. Same group elements as the textbook fold, a fraction of the cost.
  Scalar yinv = y.inverse();
  std::vector<Scalar> gcoef(n, Scalar::one());
  std::vector<Scalar> hcoef = powers(yinv, n);

  std::vector<Scalar> a = l, b = r;
  std::vector<std::pair<GroupElementG1, GroupElementG1>> lrs;
  std::size_t len = n;
  while (len > 1) {
    std::size_t half = len / 2;
    std::span<const Scalar> a_lo(a.data(), half), a_hi(a.data() + half, half);
    std::span<const Scalar> b_lo(b.data(), half), b_hi(b.data() + half, half);

    std::vector<GroupElementG1> lp, rp;
    std::vector<Scalar> lc, rc;
    lp.reserve(n + 1);
    lc.reserve(n + 1);
    rp.reserve(n + 1);
    rc.reserve(n + 1);
    for (std::uint32_t k = 0; k < n; ++k) {
      std::size_t pos = k % len;
      if (pos >= half) {
        lp.push_back(g[k]);
        lc.push_back(a[pos - half] * gcoef[k]);
        rp.push_back(h[k]);
        rc.push_back(b[pos - half] * hcoef[k]);
      } else {
        lp.push_back(h[k]);
        lc.push_back(b[half + pos] * hcoef[k]);
        rp.push_back(g[k]);
        rc.push_back(a[half + pos] * gcoef[k]);
      }
    }
    lp.push_back(params.G_val);
    lc.push_back(w * inner(a_lo, b_hi));
    rp.push_back(params.G_val);
    rc.push_back(w * inner(a_hi, b_lo));
    GroupElementG1 L = msm_g1(lp, lc);
    GroupElementG1 R = msm_g1(rp, rc);

    tr.absorb(str_bytes("L"), pser(L));
    tr.absorb(str_bytes("R"), pser(R));
    Scalar u = tr.challenge(str_bytes("u"));
    Scalar uinv = u.inverse();

    for (std::uint32_t k = 0; k < n; ++k) {
      bool hi_half = (k % len) >= half;
      gcoef[k] = gcoef[k] * (hi_half ? u : uinv);
      hcoef[k] = hcoef[k] * (hi_half ? uinv : u);
    }
    std::vector<Scalar> a2(half), b2(half);
    for (std::size_t i = 0; i < half; ++i) {
      a2[i] = a[i] * u + a[half + i] * uinv;
      b2[i] = b[i] * uinv + b[half + i] * u;
    }
    a = std::move(a2);
    b = std::move(b2);
    len = half;
    lrs.emplace_back(L, R);
  }

  out->round_commitments.insert(out->round_commitments.end(), {A, S, T1, T2});
  out->final_scalars.insert(out->final_scalars.end(), {taux, mu, that, a[0], b[0]});
  out->inner_product_rounds.insert(out->inner_product_rounds.end(), lrs.begin(),
                                   lrs.end());
}

bool verify_sub(Transcript& tr, const pedersen::PedersenParams& params,
                std::span<const GroupElementG1> g, std::span<const GroupElementG1> h,
                std::uint32_t n, const GroupElementG1& c,
                std::span<const GroupElementG1> commits,
                std::span<const Scalar> scalars,
                std::span<const std::pair<GroupElementG1, GroupElementG1>> ipa) {
  tr.absorb(str_bytes("sub"), pser(c));
  const GroupElementG1 &A = commits[0], &S = commits[1], &T1 = commits[2],
                       &T2 = commits[3];
  const Scalar &taux = scalars[0], &mu = scalars[1], &that = scalars[2],
               &a = scalars[3], &b = scalars[4];
  Challenges ch = replay_challenges(tr, A, S, T1, T2, taux, mu, that);

  std::vector<Scalar> ypow = powers(ch.y, n);
  std::vector<Scalar> two = powers(Scalar::from_u64(2), n);
  Scalar sum_y = Scalar::zero();
  for (const Scalar& s : ypow) sum_y = sum_y + s;
  Scalar sum_2 = two[n - 1] + two[n - 1] - Scalar::one();
  Scalar zz = ch.z * ch.z;
  Scalar delta = (ch.z - zz) * sum_y - zz * ch.z * sum_2;

  // that*G + taux*B == zz*C + delta*G + x*T1 + x^2*T2
  GroupElementG1 eq1 =
      msm_g1({params.G_val, params.G_blind, c, T1, T2},
             {that - delta, taux, zz.neg(), ch.x.neg(), (ch.x * ch.x).neg()});
  if (!eq1.is_identity()) return false;

  // Replay the inner-product rounds, then fold everything into one
  // multi-scalar multiplication instead of folding the generator vectors.
  std::size_t rounds = ipa.size();
  std::vector<Scalar> u(rounds), uinv(rounds);
  for (std::size_t j = 0; j < rounds; ++j) {
    tr.absorb(str_bytes("L"), pser(ipa[j].first));
    tr.absorb(str_bytes("R"), pser(ipa[j].second));
    u[j] = tr.challenge(str_bytes("u"));
    uinv[j] = u[j].inverse();
  }

  // s[i] = prod over rounds j of u_j when bit (rounds-1-j) of i is set,
  // else u_j^-1; the inverse vector is s reversed.
  std::vector<Scalar> s(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Scalar acc = Scalar::one();
    for (std::size_t j = 0; j < rounds; ++j) {
      bool hi_half = (i >> (rounds - 1 - j)) & 1;
      acc = acc * (hi_half ? u[j] : uinv[j]);
    }
    s[i] = acc;
  }

  Scalar yinv = ch.y.inverse();
  std::vector<Scalar> yinvpow = powers(yinv, n);

  std::vector<GroupElementG1> points;
  std::vector<Scalar> coeffs;
  points.reserve(2 * n + 2 * rounds + 4);
  coeffs.reserve(points.capacity());

  points.push_back(A);
  coeffs.push_back(Scalar::one());
  points.push_back(S);
  coeffs.push_back(ch.x);
  points.push_back(params.G_blind);
  coeffs.push_back(mu.neg());
  points.push_back(params.G_val);
  coeffs.push_back(ch.w * (that - a * b));
  for (std::uint32_t i = 0; i < n; ++i) {
    points.push_back(g[i]);
    coeffs.push_back((ch.z + a * s[i]).neg());
    points.push_back(h[i]);
    coeffs.push_back(yinvpow[i] * (ch.z * ypow[i] + zz * two[i] - b * s[n - 1 - i]));
  }
  for (std::size_t j = 0; j < rounds; ++j) {
    points.push_back(ipa[j].first);
    coeffs.push_back(u[j] * u[j]);
    points.push_back(ipa[j].second);
    coeffs.push_back(uinv[j] * uinv[j]);
  }
  return msm_g1(points, coeffs).is_identity();
}

}  // namespace

const std::vector<GroupElementG1>& vector_gens_g() {
  static const std::vector<GroupElementG1> gens = derive_gens("BP-G");
  return gens;
}

const std::vector<GroupElementG1>& vector_gens_h() {
  static const std::vector<GroupElementG1> gens = derive_gens("BP-H");
  return gens;
}

std::size_t proof_size_elements(std::uint32_t n_bits) {
  return 9 + 2 * static_cast<std::size_t>(log2_bits(n_bits));
}

RangeProof prove_range(const pedersen::PedersenParams& params, const Scalar& value,
                       const pedersen::Salt& salt, const RangeStatement& stmt,
                       Rng& rng) {
  validate_statement(stmt);
  auto enc = value.to_bytes();
  for (std::size_t i = 8; i < enc.size(); ++i) {
    if (enc[i] != 0) throw OutOfRangeError("value exceeds 64 bits");
  }
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | enc[i];
  if (v < stmt.lo || v > stmt.hi) throw OutOfRangeError("value outside [lo, hi]");
  if (pedersen::commit(params, value, salt) != stmt.commitment) {
    throw ParameterError("statement commitment does not open to (value, salt)");
  }

  std::span<const GroupElementG1> g(vector_gens_g().data(), stmt.bits);
  std::span<const GroupElementG1> h(vector_gens_h().data(), stmt.bits);
  Transcript tr = statement_transcript(params, stmt);
  RangeProof proof;
  prove_sub(tr, params, g, h, stmt.bits, v - stmt.lo, salt, rng, &proof);
  prove_sub(tr, params, g, h, stmt.bits, stmt.hi - v, salt.neg(), rng, &proof);
  return proof;
}

bool verify_range(const pedersen::PedersenParams& params, const RangeStatement& stmt,
                  const RangeProof& proof) {
  validate_statement(stmt);
  std::size_t rounds = log2_bits(stmt.bits);
  if (proof.round_commitments.size() != 8 || proof.final_scalars.size() != 10 ||
      proof.inner_product_rounds.size() != 2 * rounds) {
    throw MalformedProofError("proof shape does not match the statement");
  }

  std::span<const GroupElementG1> g(vector_gens_g().data(), stmt.bits);
  std::span<const GroupElementG1> h(vector_gens_h().data(), stmt.bits);
  Transcript tr = statement_transcript(params, stmt);

  GroupElementG1 c1 =
      pedersen::shift_commitment(params, stmt.commitment, Scalar::from_u64(stmt.lo));
  GroupElementG1 c2 = params.G_val * Scalar::from_u64(stmt.hi) - stmt.commitment;

  std::span<const GroupElementG1> commits(proof.round_commitments);
  std::span<const Scalar> scalars(proof.final_scalars);
  std::span<const std::pair<GroupElementG1, GroupElementG1>> ipa(
      proof.inner_product_rounds);

  if (!verify_sub(tr, params, g, h, stmt.bits, c1, commits.first(4),
                  scalars.first(5), ipa.first(rounds))) {
    return false;
  }
  return verify_sub(tr, params, g, h, stmt.bits, c2, commits.subspan(4),
                    scalars.subspan(5), ipa.subspan(rounds));
}

Bytes RangeProof::serialize() const {
  Bytes out;
  append_u32le(out, static_cast<std::uint32_t>(round_commitments.size()));
  for (const auto& p : round_commitments) append(out, pser(p));
  append_u32le(out, static_cast<std::uint32_t>(final_scalars.size()));
  for (const auto& s : final_scalars) {
    auto enc = s.to_bytes();
    out.insert(out.end(), enc.begin(), enc.end());
  }
  append_u32le(out, static_cast<std::uint32_t>(inner_product_rounds.size()));
  for (const auto& [l, r] : inner_product_rounds) {
    append(out, pser(l));
    append(out, pser(r));
  }
  return out;
}

RangeProof RangeProof::deserialize(const Bytes& in) {
  constexpr std::uint32_t kMaxListLen = 1024;
  std::size_t pos = 0;
  auto need = [&](std::size_t n) {
    if (in.size() - pos < n) throw MalformedProofError("truncated proof");
  };
  auto read_u32 = [&]() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | in[pos + i];
    pos += 4;
    if (v > kMaxListLen) throw MalformedProofError("implausible list length");
    return v;
  };
  auto read_point = [&]() {
    need(48);
    GroupElementG1 p;
    try {
      p = GroupElementG1::deserialize(in.data() + pos, 48);
    } catch (const DecodeError&) {
      throw MalformedProofError("invalid group element in proof");
    }
    pos += 48;
    return p;
  };
  auto read_scalar = [&]() {
    need(32);
    std::array<std::uint8_t, 32> buf;
    std::copy(in.begin() + pos, in.begin() + pos + 32, buf.begin());
    pos += 32;
    try {
      return Scalar::from_bytes(buf);
    } catch (const DecodeError&) {
      throw MalformedProofError("invalid scalar in proof");
    }
  };

  RangeProof proof;
  std::uint32_t n_commits = read_u32();
  for (std::uint32_t i = 0; i < n_commits; ++i) {
    proof.round_commitments.push_back(read_point());
  }
  std::uint32_t n_scalars = read_u32();
  for (std::uint32_t i = 0; i < n_scalars; ++i) {
    proof.final_scalars.push_back(read_scalar());
  }
  std::uint32_t n_rounds = read_u32();
  for (std::uint32_t i = 0; i < n_rounds; ++i) {
    GroupElementG1 l = read_point();
    GroupElementG1 r = read_point();
    proof.inner_product_rounds.emplace_back(l, r);
  }
  if (pos != in.size()) throw MalformedProofError("trailing bytes after proof");
  return proof;
}

}  // namespace sdcred::rangeproof
