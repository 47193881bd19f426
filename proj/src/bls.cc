#include "sdcred/bls.h"

#include "sdcred/errors.h"

namespace sdcred::bls {

KeyTriple keygen(const Bytes& seed) {
  Scalar sk = Scalar::zero();
  for (std::uint32_t counter = 0; sk.is_zero(); ++counter) {
    Bytes material = seed;
    append_u32le(material, counter);
    sk = hash_to_scalar(str_bytes("KEYGEN"), material);
  }
  PrivateKey priv{sk};
  PublicKey pub{GroupElementG1::generator() * sk};
  auto enc = pub.to_bytes();
  PossessionProof pop{sign(priv, Bytes(enc.begin(), enc.end()), str_bytes("POP"))};
  return {priv, pub, pop};
}

Signature sign(const PrivateKey& sk, const Bytes& message, const Bytes& domain) {
  return {hash_to_point_g2(domain, message) * sk.scalar};
}

bool verify(const PublicKey& pk, const Bytes& message, const Bytes& domain,
            const Signature& sig) {
  if (pk.point.is_identity()) return false;
  GroupElementG2 h = hash_to_point_g2(domain, message);
  // e(H(m), pk) * e(sig, -g1) == 1
  PairingOutput check = pairing_product(
      {h, sig.point}, {pk.point, GroupElementG1::generator().neg()});
  return check.is_identity();
}

bool verify_possession(const PublicKey& pk, const PossessionProof& pop) {
  auto enc = pk.to_bytes();
  return verify(pk, Bytes(enc.begin(), enc.end()), str_bytes("POP"), pop.sig_on_pk);
}

Signature aggregate(const std::vector<Signature>& sigs) {
  if (sigs.empty()) throw EmptyAggregateError("nothing to aggregate");
  GroupElementG2 acc = GroupElementG2::identity();
  for (const Signature& s : sigs) acc = acc + s.point;
  return {acc};
}

bool aggregate_verify(const std::vector<AggregateEntry>& entries,
                      const Signature& agg) {
  if (entries.empty()) throw EmptyAggregateError("nothing to verify");
  std::vector<GroupElementG2> g2s;
  std::vector<GroupElementG1> g1s;
  g2s.reserve(entries.size() + 1);
  g1s.reserve(entries.size() + 1);
  for (const AggregateEntry& e : entries) {
    if (e.pk.point.is_identity()) return false;
    g2s.push_back(hash_to_point_g2(e.domain, e.message));
    g1s.push_back(e.pk.point);
  }
  g2s.push_back(agg.point);
  g1s.push_back(GroupElementG1::generator().neg());
  return pairing_product(g2s, g1s).is_identity();
}

}  // namespace sdcred::bls
