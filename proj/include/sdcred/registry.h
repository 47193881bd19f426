#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdcred/bls.h"
#include "sdcred/credential.h"
#include "sdcred/format.h"
#include "sdcred/merkle.h"

// The public registry: keys with proofs of possession, credential formats,
// and issuance records. One writer owns a store; readers take immutable
// snapshots. The file-backed flavor appends one canonical JSON line per
// record and rebuilds its index on load.

namespace sdcred {

enum class KeyRole : std::uint8_t { kIssuer, kHolder };

struct KeyRecord {
  std::string owner_id;
  KeyRole role = KeyRole::kIssuer;
  bls::PublicKey pk;
  bls::PossessionProof pop;
};

class RegistryView {
 public:
  struct State;  // defined with the store implementation

  RegistryView();  // empty

  const CredentialFormat* find_format(const std::string& format_id) const;
  std::optional<IssuanceRecord> lookup_root(const merkle::MerkleRoot& root) const;
  bool has_key(const bls::PublicKey& pk, KeyRole role) const;

  const std::vector<KeyRecord>& keys() const;
  const std::vector<CredentialFormat>& formats() const;
  const std::vector<IssuanceRecord>& issuances() const;

 private:
  friend class RegistryStore;
  std::shared_ptr<const State> state_;
};

enum class OpenMode : std::uint8_t { kReadWrite, kReadOnly };

class RegistryStore {
 public:
  RegistryStore();  // in-memory

  // Loads and strictly re-validates every line. Read-write mode creates the
  // file when missing and takes an exclusive lock; a second writer gets
  // EnvironmentError. Read-only mode takes no lock and requires the file to
  // exist.
  static RegistryStore open(const std::filesystem::path& path,
                            OpenMode mode = OpenMode::kReadWrite);

  // Idempotent for an exact duplicate. Throws RogueKeyError when the proof of
  // possession fails, ParameterError when the same (owner, pk) arrives with a
  // different role.
  KeyRecord register_key(const std::string& owner_id, KeyRole role,
                         const bls::PublicKey& pk, const bls::PossessionProof& pop);

  // Formats are immutable: identical re-registration returns the same id,
  // a conflicting one throws ImmutableFormatError.
  std::string register_format(const CredentialFormat& format);

  // Requires every issuer key registered with issuer role (UntrustedKeyError),
  // a verifying aggregate signature (InvalidCredentialError), a known format
  // (UnknownFormatError), and a fresh root (DuplicateRootError).
  void record_issuance(const IssuanceRecord& record);

  // Immutable snapshot; never observes later writes.
  RegistryView snapshot() const;

  // The full log as canonical JSON lines; byte-identical to what the
  // file-backed store keeps on disk.
  std::string serialize() const;

  // Re-verifies every stored record from scratch and returns how many were
  // walked. Throws the matching domain error on the first violation.
  std::size_t audit() const;

  RegistryStore(const RegistryStore&) = delete;
  RegistryStore& operator=(const RegistryStore&) = delete;
  RegistryStore(RegistryStore&&) = default;
  RegistryStore& operator=(RegistryStore&&) = default;

 private:
  struct File;
  std::shared_ptr<const RegistryView::State> state_;
  std::shared_ptr<File> file_;  // null for in-memory stores

  void persist(const std::string& line);
};

}  // namespace sdcred
