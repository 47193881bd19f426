#include "sdcred/presentation.h"

#include <algorithm>
#include <set>

#include "jsonio.h"
#include "sdcred/errors.h"
#include "sdcred/sha256.h"

namespace sdcred {

namespace {

const Bytes kPresentDomain = str_bytes("PRESENT");

Bytes digest_bytes(const Digest& d) { return Bytes(d.begin(), d.end()); }

std::vector<bls::AggregateEntry> signature_entries(const Presentation& p) {
  std::vector<bls::AggregateEntry> entries;
  std::vector<merkle::MerkleRoot> roots;
  roots.reserve(p.slices.size());
  for (const CredentialSlice& s : p.slices) {
    Bytes msg(s.claimed_root.begin(), s.claimed_root.end());
    for (const bls::PublicKey& pk : s.issuer_keys) {
      entries.push_back({pk, msg, cred_root_domain()});
    }
    if (s.holder_cosigned) entries.push_back({p.holder_key, msg, cred_root_domain()});
    roots.push_back(s.claimed_root);
  }
  entries.push_back(
      {p.holder_key, digest_bytes(manifest_digest(roots, p.nonce)), kPresentDomain});
  return entries;
}

bool same_key_set(const std::vector<bls::PublicKey>& a,
                  const std::vector<bls::PublicKey>& b) {
  if (a.size() != b.size()) return false;
  auto sorted = [](const std::vector<bls::PublicKey>& keys) {
    std::vector<std::array<std::uint8_t, 48>> enc;
    enc.reserve(keys.size());
    for (const bls::PublicKey& pk : keys) enc.push_back(pk.to_bytes());
    std::sort(enc.begin(), enc.end());
    return enc;
  };
  return sorted(a) == sorted(b);
}

void check_credential_usable(const Credential& cred, const bls::PublicKey& holder_pk) {
  if (cred.holder_key && !(*cred.holder_key == holder_pk)) {
    throw InvalidCredentialError("credential is bound to a different holder");
  }
  if (cred.attributes.empty() || cred.attributes.size() != cred.salts.size()) {
    throw InvalidCredentialError("attribute/salt shape mismatch");
  }
  Bytes msg(cred.root.begin(), cred.root.end());
  std::vector<bls::AggregateEntry> entries;
  for (const bls::PublicKey& pk : cred.issuer_keys) {
    entries.push_back({pk, msg, cred_root_domain()});
  }
  if (cred.holder_key) entries.push_back({*cred.holder_key, msg, cred_root_domain()});
  if (!bls::aggregate_verify(entries, cred.issuer_signature)) {
    throw InvalidCredentialError("credential signature does not verify");
  }
}

}  // namespace

const Bytes& present_domain() { return kPresentDomain; }

Digest manifest_digest(const std::vector<merkle::MerkleRoot>& roots, const Bytes& nonce) {
  Sha256 h;
  h.update(str_bytes("MANIFEST"));
  for (const merkle::MerkleRoot& r : roots) h.update(r);
  h.update(nonce);
  return h.finish();
}

Presentation build(const std::vector<Credential>& creds, const bls::PrivateKey& holder_sk,
                   const DisclosureRequest& request, Rng& rng) {
  if (request.credentials.size() != creds.size()) {
    throw ParameterError("request covers " + std::to_string(request.credentials.size()) +
                         " credentials, got " + std::to_string(creds.size()));
  }
  if (request.nonce.empty()) throw ParameterError("nonce is required");

  const pedersen::PedersenParams& params = pedersen::PedersenParams::standard();
  bls::PublicKey holder_pk = public_key_of(holder_sk);

  Presentation p;
  p.holder_key = holder_pk;
  p.nonce = request.nonce;

  std::vector<bls::Signature> sigs;
  std::vector<merkle::MerkleRoot> roots;

  for (std::size_t ci = 0; ci < creds.size(); ++ci) {
    const Credential& cred = creds[ci];
    const CredentialRequest& req = request.credentials[ci];
    check_credential_usable(cred, holder_pk);

    std::vector<Digest> leaves = credential_leaves(cred);
    merkle::MerkleTree tree = merkle::build(leaves);
    if (tree.root() != cred.root) {
      throw InvalidCredentialError("root does not recompute from values and salts");
    }

    auto position = [&](const std::string& name) {
      for (std::size_t i = 0; i < cred.attributes.size(); ++i) {
        if (cred.attributes[i].name == name) return i;
      }
      throw FormatError("attribute not in credential: " + name);
    };

    std::set<std::size_t> disclosed_idx;
    std::set<std::size_t> ranged_idx;
    for (const std::string& name : req.disclose) disclosed_idx.insert(position(name));
    for (const auto& [name, bounds] : req.range_prove) {
      (void)bounds;
      std::size_t i = position(name);
      if (disclosed_idx.count(i)) {
        throw ParameterError("attribute both disclosed and range-proved: " + name);
      }
      ranged_idx.insert(i);
    }

    CredentialSlice slice;
    slice.format_id = cred.format_id;
    slice.claimed_root = cred.root;
    slice.issuer_keys = cred.issuer_keys;
    slice.holder_cosigned = cred.holder_key.has_value();

    for (std::size_t i : disclosed_idx) {
      slice.disclosed.push_back(
          {cred.attributes[i].name, cred.attributes[i].value, cred.salts[i]});
    }
    for (std::size_t i : ranged_idx) {
      const std::string& name = cred.attributes[i].name;
      const RangeRequest& bounds = req.range_prove.at(name);
      if (!std::holds_alternative<std::uint64_t>(cred.attributes[i].value)) {
        throw TypeError("range proof requested on text attribute: " + name);
      }
      Scalar value = Scalar::from_u64(std::get<std::uint64_t>(cred.attributes[i].value));
      rangeproof::RangeStatement stmt{pedersen::commit(params, value, cred.salts[i]),
                                      bounds.lo, bounds.hi, bounds.bits};
      rangeproof::RangeProof proof =
          rangeproof::prove_range(params, value, cred.salts[i], stmt, rng);
      slice.ranged.push_back({name, stmt, std::move(proof)});
    }

    std::vector<std::size_t> all_idx(disclosed_idx.begin(), disclosed_idx.end());
    all_idx.insert(all_idx.end(), ranged_idx.begin(), ranged_idx.end());
    slice.aux_nodes = merkle::prove_multi(tree, all_idx).auxiliary_nodes;

    roots.push_back(cred.root);
    sigs.push_back(cred.issuer_signature);
    p.slices.push_back(std::move(slice));
  }

  sigs.push_back(bls::sign(holder_sk, digest_bytes(manifest_digest(roots, request.nonce)),
                           kPresentDomain));
  p.aggregated_signature = bls::aggregate(sigs);
  return p;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return c.name + ": " + c.detail;
  }
  return {};
}

VerificationReport verify(const Presentation& p, const RegistryView& registry) {
  if (!registry.has_key(p.holder_key, KeyRole::kHolder)) {
    throw UntrustedKeyError("holder key not registered: " +
                            to_hex(p.holder_key.to_bytes()));
  }
  for (const CredentialSlice& s : p.slices) {
    if (!registry.find_format(s.format_id)) {
      throw UnknownFormatError("unknown format: " + s.format_id);
    }
    for (const bls::PublicKey& pk : s.issuer_keys) {
      if (!registry.has_key(pk, KeyRole::kIssuer)) {
        throw UntrustedKeyError("issuer key not registered: " + to_hex(pk.to_bytes()));
      }
    }
  }

  const pedersen::PedersenParams& params = pedersen::PedersenParams::standard();
  VerificationReport report;

  for (std::size_t si = 0; si < p.slices.size(); ++si) {
    const CredentialSlice& s = p.slices[si];
    const CredentialFormat& format = *registry.find_format(s.format_id);
    std::string prefix = "slice " + std::to_string(si) + ": ";

    bool ranges_ok = true;
    std::string ranges_detail = std::to_string(s.ranged.size()) + " proofs checked";
    for (const RangedAttribute& r : s.ranged) {
      try {
        if (!rangeproof::verify_range(params, r.statement, r.proof)) {
          ranges_ok = false;
          ranges_detail = "range proof for " + r.name + " does not verify";
        }
      } catch (const Error& e) {
        ranges_ok = false;
        ranges_detail = "range proof for " + r.name + ": " + e.what();
      }
    }
    report.checks.push_back({prefix + "range proofs", ranges_ok, ranges_detail});

    bool leaves_ok = true;
    std::string leaves_detail;
    std::map<std::size_t, Digest> leaf_map;
    auto place = [&](const std::string& name, bool want_int, const Digest& leaf) {
      auto idx = format.index_of(name);
      if (!idx) {
        leaves_ok = false;
        leaves_detail = "attribute not in format: " + name;
        return;
      }
      const FieldSpec& f = format.fields[*idx];
      if (want_int && f.type != AttributeType::kInt) {
        leaves_ok = false;
        leaves_detail = "range proof over non-integer field: " + name;
        return;
      }
      if (!leaf_map.emplace(*idx, leaf).second) {
        leaves_ok = false;
        leaves_detail = "attribute appears twice: " + name;
      }
    };
    for (const DisclosedAttribute& d : s.disclosed) {
      bool is_int = std::holds_alternative<std::uint64_t>(d.value);
      auto idx = format.index_of(d.name);
      if (idx && (format.fields[*idx].type == AttributeType::kInt) != is_int) {
        leaves_ok = false;
        leaves_detail = "disclosed type differs from format: " + d.name;
        continue;
      }
      Scalar v = pedersen::attribute_to_scalar(d.name, d.value);
      place(d.name, false, commitment_leaf(pedersen::commit(params, v, d.salt)));
    }
    for (const RangedAttribute& r : s.ranged) {
      place(r.name, true, commitment_leaf(r.statement.commitment));
    }
    if (leaves_ok) {
      leaves_detail = std::to_string(leaf_map.size()) + " leaves recomputed";
    }
    report.checks.push_back({prefix + "leaf labels", leaves_ok, leaves_detail});

    bool root_ok = false;
    merkle::MerkleRoot computed{};
    std::string root_detail;
    if (!leaves_ok) {
      root_detail = "not evaluated: leaf labels failed";
    } else {
      merkle::MultiProof mp;
      for (const auto& [idx, leaf] : leaf_map) {
        (void)leaf;
        mp.disclosed_indices.push_back(idx);
      }
      mp.auxiliary_nodes = s.aux_nodes;
      try {
        computed = merkle::recompute_root(leaf_map, mp, format.fields.size());
        root_ok = true;
        root_detail = "root recomputed";
      } catch (const Error& e) {
        root_detail = e.what();
      }
    }
    report.checks.push_back({prefix + "root recomputation", root_ok, root_detail});

    bool record_ok = true;
    std::string record_detail = "root matches registry record";
    if (!root_ok) {
      record_ok = false;
      record_detail = "not evaluated: root recomputation failed";
    } else if (computed != s.claimed_root) {
      record_ok = false;
      record_detail = "recomputed root differs from claimed root";
    } else if (auto record = registry.lookup_root(s.claimed_root); !record) {
      record_ok = false;
      record_detail = "root not present in registry";
    } else if (record->format_id != s.format_id) {
      record_ok = false;
      record_detail = "record belongs to format " + record->format_id;
    } else if (!same_key_set(record->issuer_keys, s.issuer_keys)) {
      record_ok = false;
      record_detail = "issuer keys differ from issuance record";
    }
    report.checks.push_back({prefix + "registry record", record_ok, record_detail});
  }

  bool sig_ok = bls::aggregate_verify(signature_entries(p), p.aggregated_signature);
  report.checks.push_back({"aggregated signature", sig_ok,
                           sig_ok ? "verifies with holder manifest entry"
                                  : "does not verify"});
  return report;
}

bool verify_report_is_binding(const Presentation& p) {
  return bls::aggregate_verify(signature_entries(p), p.aggregated_signature);
}

std::string Presentation::to_json() const {
  jsonio::Json j;
  j["agg_sig"] = to_hex(aggregated_signature.to_bytes());
  j["holder_pk"] = to_hex(holder_key.to_bytes());
  j["nonce"] = to_hex(nonce);
  jsonio::Json slices_j = jsonio::Json::array();
  for (const CredentialSlice& s : slices) {
    jsonio::Json e;
    e["format_id"] = s.format_id;
    e["root"] = to_hex(s.claimed_root);
    e["holder_cosigned"] = s.holder_cosigned;

    jsonio::Json disclosed = jsonio::Json::array();
    for (const DisclosedAttribute& d : s.disclosed) {
      jsonio::Json entry;
      entry["name"] = d.name;
      if (std::holds_alternative<std::uint64_t>(d.value)) {
        entry["type"] = "int";
        entry["value"] = std::get<std::uint64_t>(d.value);
      } else {
        entry["type"] = "text";
        entry["value"] = std::get<std::string>(d.value);
      }
      entry["salt"] = to_hex(d.salt.to_bytes());
      disclosed.push_back(std::move(entry));
    }
    e["disclosed"] = std::move(disclosed);

    jsonio::Json ranged = jsonio::Json::array();
    for (const RangedAttribute& r : s.ranged) {
      jsonio::Json entry;
      entry["name"] = r.name;
      entry["commitment"] = to_hex(r.statement.commitment.serialize());
      entry["lo"] = r.statement.lo;
      entry["hi"] = r.statement.hi;
      entry["bits"] = r.statement.bits;
      entry["proof"] = to_hex(r.proof.serialize());
      ranged.push_back(std::move(entry));
    }
    e["ranged"] = std::move(ranged);

    jsonio::Json aux = jsonio::Json::array();
    for (const auto& [key, digest] : s.aux_nodes) {
      jsonio::Json entry;
      entry["level"] = key.first;
      entry["index"] = key.second;
      entry["digest"] = to_hex(digest);
      aux.push_back(std::move(entry));
    }
    e["aux_nodes"] = std::move(aux);

    jsonio::Json pks = jsonio::Json::array();
    for (const bls::PublicKey& pk : s.issuer_keys) pks.push_back(to_hex(pk.to_bytes()));
    e["issuer_pks"] = std::move(pks);

    slices_j.push_back(std::move(e));
  }
  j["slices"] = std::move(slices_j);
  return j.dump();
}

Presentation Presentation::from_json(const std::string& text) {
  jsonio::Json j = jsonio::parse(text);
  jsonio::expect_keys(j, "presentation", {"agg_sig", "holder_pk", "nonce", "slices"});

  Presentation p;
  auto sig = jsonio::hex_field<96>(j, "agg_sig");
  p.aggregated_signature = bls::Signature::from_bytes(sig.data(), sig.size());
  auto pk = jsonio::hex_field<48>(j, "holder_pk");
  p.holder_key = bls::PublicKey::from_bytes(pk.data(), pk.size());
  p.nonce = from_hex(jsonio::str_field(j, "nonce"));
  if (p.nonce.empty()) throw DecodeError("presentation nonce is empty");

  for (const jsonio::Json& e : jsonio::array_field(j, "slices")) {
    jsonio::expect_keys(e, "slice",
                        {"aux_nodes", "disclosed", "format_id", "holder_cosigned",
                         "issuer_pks", "ranged", "root"});
    CredentialSlice s;
    s.format_id = jsonio::str_field(e, "format_id");
    s.claimed_root = jsonio::hex_field<32>(e, "root");
    const jsonio::Json& cosigned = jsonio::field(e, "holder_cosigned");
    if (!cosigned.is_boolean()) throw DecodeError("holder_cosigned must be a boolean");
    s.holder_cosigned = cosigned.get<bool>();

    for (const jsonio::Json& d : jsonio::array_field(e, "disclosed")) {
      jsonio::expect_keys(d, "disclosed attribute", {"name", "salt", "type", "value"});
      DisclosedAttribute attr;
      attr.name = jsonio::str_field(d, "name");
      std::string type = jsonio::str_field(d, "type");
      if (type == "int") {
        attr.value = jsonio::u64_field(d, "value");
      } else if (type == "text") {
        attr.value = jsonio::str_field(d, "value");
      } else {
        throw DecodeError("attribute type must be int or text");
      }
      attr.salt = Scalar::from_bytes(jsonio::hex_field<32>(d, "salt"));
      s.disclosed.push_back(std::move(attr));
    }

    for (const jsonio::Json& r : jsonio::array_field(e, "ranged")) {
      jsonio::expect_keys(r, "ranged attribute",
                          {"bits", "commitment", "hi", "lo", "name", "proof"});
      RangedAttribute attr;
      attr.name = jsonio::str_field(r, "name");
      auto enc = jsonio::hex_field<48>(r, "commitment");
      attr.statement.commitment = GroupElementG1::deserialize(enc.data(), enc.size());
      attr.statement.lo = jsonio::u64_field(r, "lo");
      attr.statement.hi = jsonio::u64_field(r, "hi");
      attr.statement.bits = jsonio::u32_field(r, "bits");
      try {
        attr.proof =
            rangeproof::RangeProof::deserialize(from_hex(jsonio::str_field(r, "proof")));
      } catch (const MalformedProofError& e2) {
        throw DecodeError(std::string("range proof: ") + e2.what());
      }
      s.ranged.push_back(std::move(attr));
    }

    for (const jsonio::Json& n : jsonio::array_field(e, "aux_nodes")) {
      jsonio::expect_keys(n, "auxiliary node", {"digest", "index", "level"});
      merkle::NodeKey key{jsonio::u32_field(n, "level"), jsonio::u64_field(n, "index")};
      if (!s.aux_nodes.emplace(key, jsonio::hex_field<32>(n, "digest")).second) {
        throw DecodeError("duplicate auxiliary node");
      }
    }

    for (const jsonio::Json& k : jsonio::array_field(e, "issuer_pks")) {
      if (!k.is_string()) throw DecodeError("issuer pk must be a hex string");
      auto enc = jsonio::hex_array<48>(k.get<std::string>(), "issuer pk");
      s.issuer_keys.push_back(bls::PublicKey::from_bytes(enc.data(), enc.size()));
    }

    p.slices.push_back(std::move(s));
  }
  return p;
}

}  // namespace sdcred
