#pragma once

#include <vector>

#include "sdcred/bytes.h"
#include "sdcred/ec.h"

// Minimal-pubkey BLS: public keys in G1 (48 bytes), signatures in G2
// (96 bytes). Every key ships with a proof of possession.

namespace sdcred::bls {

struct PrivateKey {
  Scalar scalar;

  std::array<std::uint8_t, 32> to_bytes() const { return scalar.to_bytes(); }
  static PrivateKey from_bytes(const std::array<std::uint8_t, 32>& in) {
    return {Scalar::from_bytes(in)};
  }
};

struct PublicKey {
  GroupElementG1 point;

  std::array<std::uint8_t, 48> to_bytes() const { return point.serialize(); }
  static PublicKey from_bytes(const std::uint8_t* in, std::size_t len) {
    return {GroupElementG1::deserialize(in, len)};
  }
  bool operator==(const PublicKey& o) const { return point == o.point; }
};

struct Signature {
  GroupElementG2 point;

  std::array<std::uint8_t, 96> to_bytes() const { return point.serialize(); }
  static Signature from_bytes(const std::uint8_t* in, std::size_t len) {
    return {GroupElementG2::deserialize(in, len)};
  }
  bool operator==(const Signature& o) const { return point == o.point; }
};

// Signature over the key's own serialized bytes under the "POP" domain.
struct PossessionProof {
  Signature sig_on_pk;
};

struct KeyTriple {
  PrivateKey sk;
  PublicKey pk;
  PossessionProof pop;
};

// Deterministic: the same seed always yields the same triple.
KeyTriple keygen(const Bytes& seed);

Signature sign(const PrivateKey& sk, const Bytes& message, const Bytes& domain);
bool verify(const PublicKey& pk, const Bytes& message, const Bytes& domain,
            const Signature& sig);

bool verify_possession(const PublicKey& pk, const PossessionProof& pop);

// Throws EmptyAggregateError when sigs is empty.
Signature aggregate(const std::vector<Signature>& sigs);

struct AggregateEntry {
  PublicKey pk;
  Bytes message;
  Bytes domain;
};

bool aggregate_verify(const std::vector<AggregateEntry>& entries,
                      const Signature& agg);

}  // namespace sdcred::bls
