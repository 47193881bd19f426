#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdcred/bls.h"
#include "sdcred/format.h"
#include "sdcred/merkle.h"
#include "sdcred/pedersen.h"
#include "sdcred/rng.h"

// Issuance: attributes are committed with per-attribute salts, the commitment
// bytes become Merkle leaves in format order, and the issuer (or several
// issuers, or issuers plus the holder) signs the root.

namespace sdcred {

struct Attribute {
  std::string name;
  pedersen::AttributeValue value;

  bool operator==(const Attribute&) const = default;
};

struct Credential {
  std::string format_id;
  std::vector<Attribute> attributes;  // format order
  std::vector<pedersen::Salt> salts;  // parallel to attributes
  merkle::MerkleRoot root{};
  bls::Signature issuer_signature;
  std::vector<bls::PublicKey> issuer_keys;
  std::optional<bls::PublicKey> holder_key;
  // Which batch member this is. Never serialized and never in the tree:
  // a version is only unlinkable while nothing public ties it to its batch.
  std::uint64_t version_index = 0;

  // Canonical JSON (sorted keys, lowercase hex, compact). The wallet storage
  // unit; version_index is deliberately omitted.
  std::string to_json() const;
  // Throws DecodeError on malformed input.
  static Credential from_json(const std::string& text);
};

// The public half of an issuance: what the registry stores per credential.
struct IssuanceRecord {
  merkle::MerkleRoot root{};
  bls::Signature signature;  // issuer aggregate only, never the holder co-sig
  std::vector<bls::PublicKey> issuer_keys;
  std::string format_id;
};

struct CredentialBatch {
  std::vector<Credential> versions;
};

struct ValidationResult {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Integer attributes whose commitments the holder computed; the issuer uses
// them as leaves without ever seeing the salts. The credential then carries a
// zero salt in those slots, which the holder replaces with the real one.
using SuppliedCommitments = std::map<std::string, pedersen::Commitment>;

// A Merkle leaf is the leaf label of the serialized commitment.
Digest commitment_leaf(const pedersen::Commitment& c);

// Recomputes the leaf digests of a credential from its own attributes and
// salts. Shared by validation and presentation building.
std::vector<Digest> credential_leaves(const Credential& cred);

bls::PublicKey public_key_of(const bls::PrivateKey& sk);

// Signature domain every root signature lives under, issuer and holder alike.
const Bytes& cred_root_domain();

// Throws FormatError when values disagree with the format's arity or declared
// types, or when a supplied commitment names a missing or non-integer field.
std::pair<Credential, IssuanceRecord> issue(const CredentialFormat& format,
                                            const std::vector<pedersen::AttributeValue>& values,
                                            const bls::PrivateKey& issuer_sk, Rng& rng,
                                            const SuppliedCommitments& supplied = {});

// Every issuer signs the identical root; the credential carries the aggregate.
// A singleton list is exactly issue(); an empty one throws EmptyAggregateError.
std::pair<Credential, IssuanceRecord> issue_multi_issuer(
    const CredentialFormat& format, const std::vector<pedersen::AttributeValue>& values,
    const std::vector<bls::PrivateKey>& issuer_sks, Rng& rng,
    const SuppliedCommitments& supplied = {});

// Folds the holder's signature over the root into the credential's aggregate
// and records the holder key. Throws InvalidCredentialError when the incoming
// signature does not verify or a holder key is already present.
Credential co_sign_holder(const Credential& cred, const bls::PrivateKey& holder_sk);

// count independent issuances of the same values, each with fresh salts.
// Throws ParameterError when count is zero.
std::pair<CredentialBatch, std::vector<IssuanceRecord>> issue_versions(
    const CredentialFormat& format, const std::vector<pedersen::AttributeValue>& values,
    const bls::PrivateKey& issuer_sk, std::size_t count, Rng& rng);

// True iff the root recomputes from the credential's values and salts, matches
// the record, and the aggregate signature verifies under the credential's keys
// (holder included once co-signed). Never throws; the reason names the first
// failed check.
ValidationResult validate(const Credential& cred, const IssuanceRecord& record);

}  // namespace sdcred
