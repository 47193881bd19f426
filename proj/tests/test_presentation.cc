#include <doctest.h>

#include <set>

#include "sdcred/bytes.h"
#include "sdcred/credential.h"
#include "sdcred/errors.h"
#include "sdcred/presentation.h"
#include "sdcred/registry.h"
#include "sdcred/rng.h"
#include "sdcred/sha256.h"

using namespace sdcred;

namespace {

bls::KeyTriple key(const std::string& seed) { return bls::keygen(str_bytes(seed)); }

CredentialFormat diploma_format() {
  CredentialFormat f;
  f.format_id = "diploma-v1";
  f.fields = {
      {"university", AttributeType::kText, std::nullopt},
      {"degree", AttributeType::kText, std::nullopt},
      {"gpa", AttributeType::kInt, RangeHint{30, 45, 8}},
      {"domain", AttributeType::kText, std::nullopt},
  };
  return f;
}

CredentialFormat licence_format() {
  CredentialFormat f;
  f.format_id = "licence-v1";
  f.fields = {
      {"validity", AttributeType::kInt, std::nullopt},
      {"category", AttributeType::kText, std::nullopt},
  };
  return f;
}

Bytes nonce_bytes(std::uint8_t fill = 0x4e) { return Bytes(32, fill); }

// University issuer, transport authority issuer, one holder; a co-signed
// diploma and a co-signed driving licence, both recorded.
struct Fixture {
  RegistryStore store;
  bls::KeyTriple university = key("university");
  bls::KeyTriple authority = key("authority");
  bls::KeyTriple holder = key("holder");
  Credential diploma, licence;
  IssuanceRecord diploma_record, licence_record;

  explicit Fixture(const std::string& rng_seed = "presentation-fixture") {
    DrbgRng rng(str_bytes(rng_seed));
    store.register_key("university", KeyRole::kIssuer, university.pk, university.pop);
    store.register_key("authority", KeyRole::kIssuer, authority.pk, authority.pop);
    store.register_key("holder", KeyRole::kHolder, holder.pk, holder.pop);
    store.register_format(diploma_format());
    store.register_format(licence_format());

    auto issued = issue(diploma_format(),
                        {std::string("Unv.Economics"), std::string("Economics"),
                         std::uint64_t{38}, std::string("Management")},
                        university.sk, rng);
    diploma = co_sign_holder(issued.first, holder.sk);
    diploma_record = issued.second;
    store.record_issuance(diploma_record);

    auto issued2 = issue(licence_format(), {std::uint64_t{2030}, std::string("B")},
                         authority.sk, rng);
    licence = co_sign_holder(issued2.first, holder.sk);
    licence_record = issued2.second;
    store.record_issuance(licence_record);
  }
};

DisclosureRequest disclose_only(std::vector<std::string> names, Bytes nonce) {
  DisclosureRequest req;
  req.credentials.push_back({std::move(names), {}});
  req.nonce = std::move(nonce);
  return req;
}

}  // namespace

TEST_CASE("manifest digest is a plain hash of roots and nonce") {
  merkle::MerkleRoot r1{};
  r1[0] = 1;
  merkle::MerkleRoot r2{};
  r2[0] = 2;
  Bytes nonce = nonce_bytes();

  Bytes buf = str_bytes("MANIFEST");
  append(buf, r1);
  append(buf, r2);
  append(buf, nonce);
  CHECK(manifest_digest({r1, r2}, nonce) == sha256(buf));
  CHECK(manifest_digest({r1, r2}, nonce) != manifest_digest({r2, r1}, nonce));
  CHECK(manifest_digest({r1}, nonce) != manifest_digest({r1}, nonce_bytes(0x4f)));
}

TEST_CASE("use case 1: disclose a subset, hide the rest") {
  Fixture fx;
  DrbgRng rng(str_bytes("uc1"));
  DisclosureRequest req = disclose_only({"university", "degree"}, nonce_bytes());
  Presentation p = build({fx.diploma}, fx.holder.sk, req, rng);

  REQUIRE(p.slices.size() == 1);
  const CredentialSlice& s = p.slices[0];
  CHECK(s.disclosed.size() == 2);
  CHECK(s.ranged.empty());
  CHECK(s.holder_cosigned);
  CHECK(s.claimed_root == fx.diploma.root);
  CHECK(!s.aux_nodes.empty());

  VerificationReport report = verify(p, fx.store.snapshot());
  CHECK(report.ok());
  CHECK(report.first_failure().empty());
  // 4 per-slice checks plus the signature check
  CHECK(report.checks.size() == 5);
  CHECK(verify_report_is_binding(p));

  // Hidden attribute values and salts never appear in the serialization.
  std::string wire = p.to_json();
  CHECK(wire.find("Management") == std::string::npos);
  CHECK(wire.find("\"value\":38") == std::string::npos);
  CHECK(wire.find(to_hex(fx.diploma.salts[2].to_bytes())) == std::string::npos);
  CHECK(wire.find(to_hex(fx.diploma.salts[3].to_bytes())) == std::string::npos);
  // Disclosed ones do.
  CHECK(wire.find("Unv.Economics") != std::string::npos);
  CHECK(wire.find(to_hex(fx.diploma.salts[0].to_bytes())) != std::string::npos);
}

TEST_CASE("presentation JSON round trips and still verifies") {
  Fixture fx;
  DrbgRng rng(str_bytes("roundtrip"));
  DisclosureRequest req = disclose_only({"degree"}, nonce_bytes());
  req.credentials[0].range_prove["gpa"] = {30, 45, 8};
  Presentation p = build({fx.diploma}, fx.holder.sk, req, rng);

  std::string wire = p.to_json();
  Presentation back = Presentation::from_json(wire);
  CHECK(back.to_json() == wire);
  CHECK(verify(back, fx.store.snapshot()).ok());
  CHECK(verify_report_is_binding(back));
}

TEST_CASE("use case 2: two credentials from two issuers, one signature") {
  Fixture fx;
  DrbgRng rng(str_bytes("uc2"));
  DisclosureRequest req;
  req.credentials.push_back({{"validity", "category"}, {}});
  req.credentials.push_back({{"university", "gpa"}, {}});
  req.nonce = nonce_bytes();

  Presentation p = build({fx.licence, fx.diploma}, fx.holder.sk, req, rng);
  CHECK(p.slices.size() == 2);
  CHECK(p.aggregated_signature.to_bytes().size() == 96);
  CHECK(verify(p, fx.store.snapshot()).ok());

  // The combined presentation stands exactly when each single-credential
  // presentation with the same nonce and holder would stand.
  DrbgRng rng2(str_bytes("uc2-singles"));
  Presentation lone_licence = build({fx.licence}, fx.holder.sk,
                                    disclose_only({"validity", "category"}, nonce_bytes()),
                                    rng2);
  Presentation lone_diploma = build({fx.diploma}, fx.holder.sk,
                                    disclose_only({"university", "gpa"}, nonce_bytes()),
                                    rng2);
  CHECK(verify(lone_licence, fx.store.snapshot()).ok());
  CHECK(verify(lone_diploma, fx.store.snapshot()).ok());

  SUBCASE("missing record fails the combined and the affected single") {
    // A registry that never saw the licence issuance.
    RegistryStore partial;
    partial.register_key("university", KeyRole::kIssuer, fx.university.pk,
                         fx.university.pop);
    partial.register_key("authority", KeyRole::kIssuer, fx.authority.pk,
                         fx.authority.pop);
    partial.register_key("holder", KeyRole::kHolder, fx.holder.pk, fx.holder.pop);
    partial.register_format(diploma_format());
    partial.register_format(licence_format());
    partial.record_issuance(fx.diploma_record);

    VerificationReport combined = verify(p, partial.snapshot());
    CHECK_FALSE(combined.ok());
    CHECK(combined.first_failure().find("root not present in registry") !=
          std::string::npos);
    CHECK_FALSE(verify(lone_licence, partial.snapshot()).ok());
    CHECK(verify(lone_diploma, partial.snapshot()).ok());
  }
}

TEST_CASE("use case 3: range proof instead of the value") {
  Fixture fx;
  DrbgRng rng(str_bytes("uc3"));
  DisclosureRequest req = disclose_only({"university"}, nonce_bytes());
  req.credentials[0].range_prove["gpa"] = {30, 45, 8};

  Presentation p = build({fx.diploma}, fx.holder.sk, req, rng);
  REQUIRE(p.slices[0].ranged.size() == 1);
  CHECK(p.slices[0].ranged[0].statement.lo == 30);
  CHECK(p.slices[0].ranged[0].statement.hi == 45);
  CHECK(verify(p, fx.store.snapshot()).ok());

  std::string wire = p.to_json();
  CHECK(wire.find("\"value\":38") == std::string::npos);
  CHECK(wire.find(to_hex(fx.diploma.salts[2].to_bytes())) == std::string::npos);

  SUBCASE("prover refuses a range the value is not in") {
    DisclosureRequest bad = disclose_only({}, nonce_bytes());
    bad.credentials[0].range_prove["gpa"] = {40, 45, 8};
    CHECK_THROWS_AS(build({fx.diploma}, fx.holder.sk, bad, rng), OutOfRangeError);
  }
  SUBCASE("range proof on a text attribute is refused") {
    DisclosureRequest bad = disclose_only({}, nonce_bytes());
    bad.credentials[0].range_prove["degree"] = {0, 10, 8};
    CHECK_THROWS_AS(build({fx.diploma}, fx.holder.sk, bad, rng), TypeError);
  }
}

TEST_CASE("build rejects ill-formed requests") {
  Fixture fx;
  DrbgRng rng(str_bytes("build-bad"));

  SUBCASE("absent attribute") {
    CHECK_THROWS_AS(
        build({fx.diploma}, fx.holder.sk, disclose_only({"nope"}, nonce_bytes()), rng),
        FormatError);
  }
  SUBCASE("disclose and range-prove the same attribute") {
    DisclosureRequest req = disclose_only({"gpa"}, nonce_bytes());
    req.credentials[0].range_prove["gpa"] = {30, 45, 8};
    CHECK_THROWS_AS(build({fx.diploma}, fx.holder.sk, req, rng), ParameterError);
  }
  SUBCASE("empty nonce") {
    CHECK_THROWS_AS(build({fx.diploma}, fx.holder.sk, disclose_only({"degree"}, {}), rng),
                    ParameterError);
  }
  SUBCASE("request arity differs from credential count") {
    CHECK_THROWS_AS(build({fx.diploma, fx.licence}, fx.holder.sk,
                          disclose_only({"degree"}, nonce_bytes()), rng),
                    ParameterError);
  }
  SUBCASE("credential bound to someone else") {
    auto mallory = key("mallory");
    CHECK_THROWS_AS(
        build({fx.diploma}, mallory.sk, disclose_only({"degree"}, nonce_bytes()), rng),
        InvalidCredentialError);
  }
  SUBCASE("tampered credential") {
    Credential bad = fx.diploma;
    bad.attributes[0].value = std::string("Evil U");
    CHECK_THROWS_AS(
        build({bad}, fx.holder.sk, disclose_only({"degree"}, nonce_bytes()), rng),
        InvalidCredentialError);
  }
}

TEST_CASE("verification pinpoints transit tampering") {
  Fixture fx;
  DrbgRng rng(str_bytes("tamper"));
  DisclosureRequest req = disclose_only({"university", "degree"}, nonce_bytes());
  req.credentials[0].range_prove["gpa"] = {30, 45, 8};
  Presentation p = build({fx.diploma}, fx.holder.sk, req, rng);
  REQUIRE(verify(p, fx.store.snapshot()).ok());

  SUBCASE("altered disclosed value fails the record check") {
    Presentation bad = p;
    bad.slices[0].disclosed[0].value = std::string("Evil U");
    VerificationReport r = verify(bad, fx.store.snapshot());
    CHECK_FALSE(r.ok());
    CHECK(r.first_failure().find("recomputed root differs") != std::string::npos);
    // Checks 1-3 still pass; the failure is localized.
    CHECK(r.checks[0].passed);
    CHECK(r.checks[1].passed);
    CHECK(r.checks[2].passed);
    CHECK_FALSE(r.checks[3].passed);
  }
  SUBCASE("altered salt fails the record check") {
    Presentation bad = p;
    bad.slices[0].disclosed[0].salt = bad.slices[0].disclosed[0].salt + Scalar::one();
    CHECK_FALSE(verify(bad, fx.store.snapshot()).ok());
  }
  SUBCASE("replay under a different nonce fails the signature check") {
    Presentation replayed = p;
    replayed.nonce = nonce_bytes(0x99);
    VerificationReport r = verify(replayed, fx.store.snapshot());
    CHECK_FALSE(r.ok());
    for (std::size_t i = 0; i + 1 < r.checks.size(); ++i) CHECK(r.checks[i].passed);
    CHECK_FALSE(r.checks.back().passed);
    CHECK(r.checks.back().name == "aggregated signature");
    CHECK_FALSE(verify_report_is_binding(replayed));
  }
  SUBCASE("swapped range statement bounds fail the range check") {
    Presentation bad = p;
    bad.slices[0].ranged[0].statement.lo = 35;
    VerificationReport r = verify(bad, fx.store.snapshot());
    CHECK_FALSE(r.checks[0].passed);
  }
  SUBCASE("foreign commitment in the range statement fails") {
    // Substituting another commitment breaks the transcript binding even if
    // the substituted commitment itself is in range.
    Presentation bad = p;
    DrbgRng rng2(str_bytes("foreign"));
    Scalar salt = Scalar::random(rng2);
    bad.slices[0].ranged[0].statement.commitment = pedersen::commit(
        pedersen::PedersenParams::standard(), Scalar::from_u64(40), salt);
    VerificationReport r = verify(bad, fx.store.snapshot());
    CHECK_FALSE(r.checks[0].passed);
  }
  SUBCASE("dropped auxiliary node fails root recomputation") {
    Presentation bad = p;
    REQUIRE(!bad.slices[0].aux_nodes.empty());
    bad.slices[0].aux_nodes.erase(bad.slices[0].aux_nodes.begin());
    VerificationReport r = verify(bad, fx.store.snapshot());
    CHECK_FALSE(r.checks[2].passed);
    CHECK_FALSE(r.checks[3].passed);
    CHECK(r.checks[3].detail.find("not evaluated") != std::string::npos);
  }
  SUBCASE("issuer keys differing from the record are flagged") {
    Presentation bad = p;
    bad.slices[0].issuer_keys.push_back(fx.authority.pk);
    VerificationReport r = verify(bad, fx.store.snapshot());
    CHECK(r.first_failure().find("issuer keys differ") != std::string::npos);
  }
}

TEST_CASE("verification trust errors throw instead of reporting") {
  Fixture fx;
  DrbgRng rng(str_bytes("trust"));
  Presentation p = build({fx.diploma}, fx.holder.sk,
                         disclose_only({"degree"}, nonce_bytes()), rng);

  SUBCASE("unknown format") {
    RegistryStore empty;
    empty.register_key("holder", KeyRole::kHolder, fx.holder.pk, fx.holder.pop);
    CHECK_THROWS_AS(verify(p, empty.snapshot()), UnknownFormatError);
  }
  SUBCASE("unregistered issuer key") {
    RegistryStore partial;
    partial.register_key("holder", KeyRole::kHolder, fx.holder.pk, fx.holder.pop);
    partial.register_format(diploma_format());
    CHECK_THROWS_AS(verify(p, partial.snapshot()), UntrustedKeyError);
  }
  SUBCASE("unregistered holder key") {
    RegistryStore partial;
    partial.register_key("university", KeyRole::kIssuer, fx.university.pk,
                         fx.university.pop);
    partial.register_format(diploma_format());
    CHECK_THROWS_AS(verify(p, partial.snapshot()), UntrustedKeyError);
  }
}

TEST_CASE("holder binding detects key substitution") {
  Fixture fx;
  DrbgRng rng(str_bytes("binding"));
  auto mallory = key("mallory");
  fx.store.register_key("mallory", KeyRole::kHolder, mallory.pk, mallory.pop);

  Presentation honest = build({fx.diploma}, fx.holder.sk,
                              disclose_only({"degree"}, nonce_bytes()), rng);
  REQUIRE(verify_report_is_binding(honest));

  // Mallory steals the co-signed credential bytes and presents them under
  // their own key: the manifest signature is Mallory's own and valid, but the
  // credential's aggregate contains the original holder's root signature,
  // which is now charged to Mallory's key and cannot verify.
  Presentation forged = honest;
  forged.holder_key = mallory.pk;
  std::vector<merkle::MerkleRoot> roots = {forged.slices[0].claimed_root};
  Digest manifest = manifest_digest(roots, forged.nonce);
  forged.aggregated_signature = bls::aggregate(
      {fx.diploma.issuer_signature,
       bls::sign(mallory.sk, Bytes(manifest.begin(), manifest.end()), present_domain())});

  CHECK_FALSE(verify_report_is_binding(forged));
  VerificationReport r = verify(forged, fx.store.snapshot());
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.checks.back().passed);

  SUBCASE("stripping the cosign flag does not help") {
    forged.slices[0].holder_cosigned = false;
    CHECK_FALSE(verify_report_is_binding(forged));
    CHECK_FALSE(verify(forged, fx.store.snapshot()).ok());
  }
}

TEST_CASE("possession-only presentation discloses nothing") {
  Fixture fx;
  DrbgRng rng(str_bytes("possession"));
  Presentation p = build({fx.diploma}, fx.holder.sk, disclose_only({}, nonce_bytes()),
                         rng);
  CHECK(p.slices[0].disclosed.empty());
  CHECK(p.slices[0].ranged.empty());
  CHECK(verify(p, fx.store.snapshot()).ok());

  std::string wire = p.to_json();
  for (const pedersen::Salt& s : fx.diploma.salts) {
    CHECK(wire.find(to_hex(s.to_bytes())) == std::string::npos);
  }
  CHECK(wire.find("Economics") == std::string::npos);
}

TEST_CASE("presentations of different versions share no root") {
  Fixture fx;
  DrbgRng rng(str_bytes("versions"));
  auto [batch, records] =
      issue_versions(diploma_format(),
                     {std::string("Unv.Economics"), std::string("Economics"),
                      std::uint64_t{38}, std::string("Management")},
                     fx.university.sk, 2, rng);
  for (const IssuanceRecord& r : records) fx.store.record_issuance(r);

  Presentation a = build({batch.versions[0]}, fx.holder.sk,
                         disclose_only({"degree"}, nonce_bytes()), rng);
  Presentation b = build({batch.versions[1]}, fx.holder.sk,
                         disclose_only({"degree"}, nonce_bytes()), rng);
  CHECK(verify(a, fx.store.snapshot()).ok());
  CHECK(verify(b, fx.store.snapshot()).ok());
  CHECK(!(a.slices[0].claimed_root == b.slices[0].claimed_root));
  // Even the disclosed attribute carries version-specific bytes.
  CHECK(!(a.slices[0].disclosed[0].salt == b.slices[0].disclosed[0].salt));
}

TEST_CASE("presentation JSON rejects malformed input") {
  Fixture fx;
  DrbgRng rng(str_bytes("json-bad"));
  DisclosureRequest req = disclose_only({"degree"}, nonce_bytes());
  req.credentials[0].range_prove["gpa"] = {30, 45, 8};
  Presentation p = build({fx.diploma}, fx.holder.sk, req, rng);
  std::string wire = p.to_json();

  auto patched = [&](const std::string& from, const std::string& to) {
    std::string s = wire;
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    s.replace(pos, from.size(), to);
    return s;
  };

  CHECK_THROWS_AS(Presentation::from_json("nope"), DecodeError);
  CHECK_THROWS_AS(Presentation::from_json(wire.substr(1)), DecodeError);
  CHECK_THROWS_AS(Presentation::from_json(patched("\"nonce\"", "\"nance\"")),
                  DecodeError);
  CHECK_THROWS_AS(
      Presentation::from_json(patched("\"holder_cosigned\":true",
                                      "\"holder_cosigned\":1")),
      DecodeError);
  // Truncated range proof blob.
  auto proof_pos = wire.find("\"proof\":\"");
  REQUIRE(proof_pos != std::string::npos);
  std::string cut = wire;
  cut.erase(proof_pos + 9, 2);
  CHECK_THROWS_AS(Presentation::from_json(cut), DecodeError);

  // Round trip still fine after all that.
  CHECK(Presentation::from_json(wire).to_json() == wire);
}

TEST_CASE("randomized build and verify round trip") {
  Fixture fx;
  DrbgRng rng(str_bytes("random-roundtrip"));
  for (int iter = 0; iter < 4; ++iter) {
    std::size_t n_fields = 1 + (rng.bytes(1)[0] % 9);
    CredentialFormat format;
    format.format_id = "fuzz-" + std::to_string(iter);
    std::vector<pedersen::AttributeValue> values;
    for (std::size_t i = 0; i < n_fields; ++i) {
      bool is_int = rng.bytes(1)[0] % 2 == 0;
      format.fields.push_back({"f" + std::to_string(i),
                               is_int ? AttributeType::kInt : AttributeType::kText,
                               std::nullopt});
      if (is_int) {
        values.push_back(std::uint64_t{rng.bytes(1)[0]});
      } else {
        values.push_back("v" + std::to_string(i));
      }
    }
    fx.store.register_format(format);
    auto [cred, record] = issue(format, values, fx.university.sk, rng);
    fx.store.record_issuance(record);

    DisclosureRequest req;
    CredentialRequest creq;
    for (std::size_t i = 0; i < n_fields; ++i) {
      std::uint8_t roll = rng.bytes(1)[0] % 3;
      if (roll == 0) {
        creq.disclose.push_back(format.fields[i].name);
      } else if (roll == 1 && format.fields[i].type == AttributeType::kInt) {
        creq.range_prove[format.fields[i].name] = {0, 255, 8};
      }
    }
    req.credentials.push_back(creq);
    req.nonce = rng.bytes(16);

    Presentation p = build({cred}, fx.holder.sk, req, rng);
    CAPTURE(iter);
    CHECK(verify(p, fx.store.snapshot()).ok());
    CHECK(verify_report_is_binding(p));
    Presentation back = Presentation::from_json(p.to_json());
    CHECK(back.to_json() == p.to_json());
  }
}
