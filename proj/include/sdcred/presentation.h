#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdcred/bls.h"
#include "sdcred/credential.h"
#include "sdcred/merkle.h"
#include "sdcred/rangeproof.h"
#include "sdcred/registry.h"
#include "sdcred/rng.h"

// Selective-disclosure presentations. The holder picks, per credential, which
// attributes to open and which integer attributes to prove in range; every
// hidden attribute contributes only Merkle frontier nodes. One aggregated
// signature covers all issuer root signatures plus the holder's signature
// over a manifest of the slice roots and the verifier's nonce.

namespace sdcred {

struct RangeRequest {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint32_t bits = 0;
};

struct CredentialRequest {
  std::vector<std::string> disclose;
  std::map<std::string, RangeRequest> range_prove;
};

// One entry per credential, in the same order as the credentials handed to
// build. The nonce is mandatory; all-zero is the reserved value for offline
// presentations that no live verifier challenged.
struct DisclosureRequest {
  std::vector<CredentialRequest> credentials;
  Bytes nonce;
};

struct DisclosedAttribute {
  std::string name;
  pedersen::AttributeValue value;
  pedersen::Salt salt;
};

struct RangedAttribute {
  std::string name;
  rangeproof::RangeStatement statement;
  rangeproof::RangeProof proof;
};

struct CredentialSlice {
  std::string format_id;
  merkle::MerkleRoot claimed_root{};
  std::vector<DisclosedAttribute> disclosed;
  std::vector<RangedAttribute> ranged;
  // The multiproof frontier. Leaf positions are not serialized: both sides
  // derive them from attribute names and the registered format, so a verifier
  // never trusts prover-supplied indices.
  std::map<merkle::NodeKey, Digest> aux_nodes;
  std::vector<bls::PublicKey> issuer_keys;
  // True when the credential's aggregate also contains the holder's signature
  // over the root; the verifier then charges that entry to holder_key.
  bool holder_cosigned = false;
};

struct Presentation {
  std::vector<CredentialSlice> slices;
  bls::PublicKey holder_key;
  Bytes nonce;
  bls::Signature aggregated_signature;

  std::string to_json() const;
  // Throws DecodeError on malformed input.
  static Presentation from_json(const std::string& text);
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Every check is always evaluated and listed, pass or fail.
struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  // First failed check's "name: detail", or empty when all passed.
  std::string first_failure() const;
};

// Signature domain of the holder's manifest signature ("PRESENT").
const Bytes& present_domain();

Digest manifest_digest(const std::vector<merkle::MerkleRoot>& roots, const Bytes& nonce);

// Errors: FormatError for a requested attribute the credential lacks,
// TypeError for a range request on a text attribute, OutOfRangeError when the
// value lies outside the requested bounds, ParameterError for an ill-formed
// request, InvalidCredentialError for credentials that do not validate or are
// bound to a different holder.
Presentation build(const std::vector<Credential>& creds, const bls::PrivateKey& holder_sk,
                   const DisclosureRequest& request, Rng& rng);

// Per slice: (1) range proofs, (2) leaf labels from disclosed values and
// ranged commitments against the registered format, (3) root recomputation
// through the multiproof, (4) root match against the claimed root and the
// registry record; then (5) the aggregated signature over everything plus the
// holder's manifest entry. Throws UnknownFormatError for an unregistered
// format and UntrustedKeyError for any key the registry does not vouch for;
// all other failures land in the report.
VerificationReport verify(const Presentation& p, const RegistryView& registry);

// Structural holder-binding check, no registry needed: the aggregated
// signature must account for holder_key's manifest entry and, for every
// co-signed slice, holder_key's own signature over that root.
bool verify_report_is_binding(const Presentation& p);

}  // namespace sdcred
