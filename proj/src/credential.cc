#include "sdcred/credential.h"

#include "jsonio.h"
#include "sdcred/errors.h"

namespace sdcred {

namespace {

const Bytes kRootDomain = str_bytes("CRED-ROOT");

Bytes root_bytes(const merkle::MerkleRoot& root) {
  return Bytes(root.begin(), root.end());
}

void check_values(const CredentialFormat& format,
                  const std::vector<pedersen::AttributeValue>& values) {
  if (values.size() != format.fields.size()) {
    throw FormatError("expected " + std::to_string(format.fields.size()) +
                      " values, got " + std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const FieldSpec& f = format.fields[i];
    bool is_int = std::holds_alternative<std::uint64_t>(values[i]);
    if ((f.type == AttributeType::kInt) != is_int) {
      throw FormatError("value type mismatch for field " + f.name);
    }
  }
}

void check_supplied(const CredentialFormat& format, const SuppliedCommitments& supplied) {
  for (const auto& [name, c] : supplied) {
    (void)c;
    auto idx = format.index_of(name);
    if (!idx) throw FormatError("supplied commitment for unknown field " + name);
    if (format.fields[*idx].type != AttributeType::kInt) {
      throw FormatError("supplied commitment for non-integer field " + name);
    }
  }
}

std::vector<bls::AggregateEntry> root_entries(const Credential& cred) {
  std::vector<bls::AggregateEntry> entries;
  entries.reserve(cred.issuer_keys.size() + 1);
  Bytes msg = root_bytes(cred.root);
  for (const bls::PublicKey& pk : cred.issuer_keys) {
    entries.push_back({pk, msg, kRootDomain});
  }
  if (cred.holder_key) entries.push_back({*cred.holder_key, msg, kRootDomain});
  return entries;
}

}  // namespace

const Bytes& cred_root_domain() { return kRootDomain; }

Digest commitment_leaf(const pedersen::Commitment& c) {
  auto enc = c.serialize();
  return merkle::leaf_label(Bytes(enc.begin(), enc.end()));
}

std::vector<Digest> credential_leaves(const Credential& cred) {
  const pedersen::PedersenParams& params = pedersen::PedersenParams::standard();
  std::vector<Digest> leaves;
  leaves.reserve(cred.attributes.size());
  for (std::size_t i = 0; i < cred.attributes.size(); ++i) {
    const Attribute& a = cred.attributes[i];
    Scalar v = pedersen::attribute_to_scalar(a.name, a.value);
    leaves.push_back(commitment_leaf(pedersen::commit(params, v, cred.salts[i])));
  }
  return leaves;
}

bls::PublicKey public_key_of(const bls::PrivateKey& sk) {
  return {GroupElementG1::generator() * sk.scalar};
}

std::pair<Credential, IssuanceRecord> issue_multi_issuer(
    const CredentialFormat& format, const std::vector<pedersen::AttributeValue>& values,
    const std::vector<bls::PrivateKey>& issuer_sks, Rng& rng,
    const SuppliedCommitments& supplied) {
  format.validate();
  if (issuer_sks.empty()) throw EmptyAggregateError("no issuer keys");
  check_values(format, values);
  check_supplied(format, supplied);

  const pedersen::PedersenParams& params = pedersen::PedersenParams::standard();
  Credential cred;
  cred.format_id = format.format_id;
  cred.attributes.reserve(values.size());
  cred.salts.reserve(values.size());
  std::vector<Digest> leaves;
  leaves.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string& name = format.fields[i].name;
    cred.attributes.push_back({name, values[i]});
    auto it = supplied.find(name);
    if (it != supplied.end()) {
      cred.salts.push_back(Scalar::zero());
      leaves.push_back(commitment_leaf(it->second));
    } else {
      pedersen::Salt salt = Scalar::random(rng);
      Scalar v = pedersen::attribute_to_scalar(name, values[i]);
      cred.salts.push_back(salt);
      leaves.push_back(commitment_leaf(pedersen::commit(params, v, salt)));
    }
  }
  cred.root = merkle::build(leaves).root();

  Bytes msg = root_bytes(cred.root);
  std::vector<bls::Signature> sigs;
  sigs.reserve(issuer_sks.size());
  for (const bls::PrivateKey& sk : issuer_sks) {
    sigs.push_back(bls::sign(sk, msg, kRootDomain));
    cred.issuer_keys.push_back(public_key_of(sk));
  }
  cred.issuer_signature = bls::aggregate(sigs);

  IssuanceRecord record{cred.root, cred.issuer_signature, cred.issuer_keys,
                        cred.format_id};
  return {std::move(cred), std::move(record)};
}

std::pair<Credential, IssuanceRecord> issue(const CredentialFormat& format,
                                            const std::vector<pedersen::AttributeValue>& values,
                                            const bls::PrivateKey& issuer_sk, Rng& rng,
                                            const SuppliedCommitments& supplied) {
  return issue_multi_issuer(format, values, {issuer_sk}, rng, supplied);
}

Credential co_sign_holder(const Credential& cred, const bls::PrivateKey& holder_sk) {
  if (cred.holder_key) throw InvalidCredentialError("holder key already present");
  if (!bls::aggregate_verify(root_entries(cred), cred.issuer_signature)) {
    throw InvalidCredentialError("issuer signature does not verify");
  }
  Credential out = cred;
  bls::Signature holder_sig = bls::sign(holder_sk, root_bytes(cred.root), kRootDomain);
  out.issuer_signature = bls::aggregate({cred.issuer_signature, holder_sig});
  out.holder_key = public_key_of(holder_sk);
  return out;
}

std::pair<CredentialBatch, std::vector<IssuanceRecord>> issue_versions(
    const CredentialFormat& format, const std::vector<pedersen::AttributeValue>& values,
    const bls::PrivateKey& issuer_sk, std::size_t count, Rng& rng) {
  if (count == 0) throw ParameterError("version count must be positive");
  CredentialBatch batch;
  std::vector<IssuanceRecord> records;
  batch.versions.reserve(count);
  records.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto [cred, record] = issue(format, values, issuer_sk, rng);
    cred.version_index = i;
    batch.versions.push_back(std::move(cred));
    records.push_back(std::move(record));
  }
  return {std::move(batch), std::move(records)};
}

ValidationResult validate(const Credential& cred, const IssuanceRecord& record) {
  if (cred.attributes.empty() || cred.attributes.size() != cred.salts.size()) {
    return {false, "attribute/salt shape mismatch"};
  }
  if (cred.issuer_keys.empty()) return {false, "no issuer keys"};
  if (merkle::build(credential_leaves(cred)).root() != cred.root) {
    return {false, "root does not recompute from values and salts"};
  }
  if (cred.root != record.root) return {false, "root differs from issuance record"};
  if (cred.format_id != record.format_id) {
    return {false, "format differs from issuance record"};
  }
  if (!bls::aggregate_verify(root_entries(cred), cred.issuer_signature)) {
    return {false, "aggregate signature does not verify"};
  }
  return {true, "ok"};
}

std::string Credential::to_json() const {
  jsonio::Json j;
  j["format_id"] = format_id;
  jsonio::Json attrs = jsonio::Json::array();
  for (const Attribute& a : attributes) {
    jsonio::Json e;
    e["name"] = a.name;
    if (std::holds_alternative<std::uint64_t>(a.value)) {
      e["type"] = "int";
      e["value"] = std::get<std::uint64_t>(a.value);
    } else {
      e["type"] = "text";
      e["value"] = std::get<std::string>(a.value);
    }
    attrs.push_back(std::move(e));
  }
  j["attributes"] = std::move(attrs);
  jsonio::Json salts_j = jsonio::Json::array();
  for (const pedersen::Salt& s : salts) salts_j.push_back(to_hex(s.to_bytes()));
  j["salts"] = std::move(salts_j);
  j["root"] = to_hex(root);
  j["issuer_sig"] = to_hex(issuer_signature.to_bytes());
  jsonio::Json pks = jsonio::Json::array();
  for (const bls::PublicKey& pk : issuer_keys) pks.push_back(to_hex(pk.to_bytes()));
  j["issuer_pks"] = std::move(pks);
  if (holder_key) j["holder_pk"] = to_hex(holder_key->to_bytes());
  return j.dump();
}

Credential Credential::from_json(const std::string& text) {
  jsonio::Json j = jsonio::parse(text);
  jsonio::expect_keys(j, "credential",
                      {"attributes", "format_id", "issuer_pks", "issuer_sig", "root",
                       "salts"},
                      {"holder_pk"});
  Credential cred;
  cred.format_id = jsonio::str_field(j, "format_id");

  for (const jsonio::Json& e : jsonio::array_field(j, "attributes")) {
    jsonio::expect_keys(e, "attribute", {"name", "type", "value"});
    Attribute a;
    a.name = jsonio::str_field(e, "name");
    std::string type = jsonio::str_field(e, "type");
    if (type == "int") {
      a.value = jsonio::u64_field(e, "value");
    } else if (type == "text") {
      a.value = jsonio::str_field(e, "value");
    } else {
      throw DecodeError("attribute type must be int or text");
    }
    cred.attributes.push_back(std::move(a));
  }

  for (const jsonio::Json& s : jsonio::array_field(j, "salts")) {
    if (!s.is_string()) throw DecodeError("salt must be a hex string");
    cred.salts.push_back(
        Scalar::from_bytes(jsonio::hex_array<32>(s.get<std::string>(), "salt")));
  }
  if (cred.salts.size() != cred.attributes.size()) {
    throw DecodeError("salt count differs from attribute count");
  }
  if (cred.attributes.empty()) throw DecodeError("credential has no attributes");

  cred.root = jsonio::hex_field<32>(j, "root");
  auto sig = jsonio::hex_field<96>(j, "issuer_sig");
  cred.issuer_signature = bls::Signature::from_bytes(sig.data(), sig.size());

  for (const jsonio::Json& p : jsonio::array_field(j, "issuer_pks")) {
    if (!p.is_string()) throw DecodeError("issuer pk must be a hex string");
    auto enc = jsonio::hex_array<48>(p.get<std::string>(), "issuer pk");
    cred.issuer_keys.push_back(bls::PublicKey::from_bytes(enc.data(), enc.size()));
  }
  if (cred.issuer_keys.empty()) throw DecodeError("credential has no issuer keys");

  if (j.contains("holder_pk")) {
    auto enc = jsonio::hex_field<48>(j, "holder_pk");
    cred.holder_key = bls::PublicKey::from_bytes(enc.data(), enc.size());
  }
  return cred;
}

}  // namespace sdcred
