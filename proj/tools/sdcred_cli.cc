#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jsonio.h"
#include "sdcred/bytes.h"
#include "sdcred/credential.h"
#include "sdcred/errors.h"
#include "sdcred/format.h"
#include "sdcred/presentation.h"
#include "sdcred/registry.h"
#include "sdcred/rng.h"

// Exit codes: 0 success, 1 domain failure (bad data, failed verification,
// refused operation), 2 environment failure (unreadable files, locked or
// missing registry).

namespace {

using namespace sdcred;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EnvironmentError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw EnvironmentError("cannot read " + path);
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw EnvironmentError("cannot write " + path);
  out << content;
  out.flush();
  if (!out) throw EnvironmentError("cannot write " + path);
}

std::string registry_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv("SD_REGISTRY_PATH");
  if (env && *env) return env;
  throw EnvironmentError("no registry: set SD_REGISTRY_PATH or pass --registry");
}

std::unique_ptr<Rng> make_rng(const std::string& seed_hex) {
  if (seed_hex.empty()) return std::make_unique<SystemRng>();
  return std::make_unique<DrbgRng>(from_hex(seed_hex));
}

KeyRole role_from(const std::string& name) {
  if (name == "issuer") return KeyRole::kIssuer;
  if (name == "holder") return KeyRole::kHolder;
  throw ParameterError("role must be issuer or holder, got " + name);
}

// Key files hold the private half; the public half lives in the registry.
struct KeyFile {
  std::string owner_id;
  std::string role;
  bls::PrivateKey sk;
};

std::string key_file_json(const KeyFile& kf) {
  jsonio::Json j;
  j["owner_id"] = kf.owner_id;
  j["role"] = kf.role;
  j["sk"] = to_hex(kf.sk.to_bytes());
  return j.dump() + "\n";
}

KeyFile load_key_file(const std::string& path) {
  jsonio::Json j = jsonio::parse(read_file(path));
  jsonio::expect_keys(j, "key file", {"owner_id", "role", "sk"});
  KeyFile kf;
  kf.owner_id = jsonio::str_field(j, "owner_id");
  kf.role = jsonio::str_field(j, "role");
  kf.sk = bls::PrivateKey::from_bytes(jsonio::hex_field<32>(j, "sk"));
  return kf;
}

std::vector<pedersen::AttributeValue> parse_values(const CredentialFormat& format,
                                                   const std::string& text) {
  jsonio::Json j = jsonio::parse(text);
  jsonio::expect_object(j, "values");
  std::vector<pedersen::AttributeValue> values;
  for (const FieldSpec& f : format.fields) {
    if (!j.contains(f.name)) throw FormatError("values file lacks attribute " + f.name);
    if (f.type == AttributeType::kInt) {
      values.emplace_back(jsonio::u64_field(j, f.name.c_str()));
    } else {
      values.emplace_back(jsonio::str_field(j, f.name.c_str()));
    }
  }
  if (j.size() != format.fields.size()) {
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (!format.index_of(key)) {
        throw FormatError("values file names unknown attribute " + key);
      }
    }
  }
  return values;
}

DisclosureRequest parse_request(const std::string& text) {
  jsonio::Json j = jsonio::parse(text);
  jsonio::expect_keys(j, "request", {"credentials", "nonce"});
  DisclosureRequest req;
  req.nonce = from_hex(jsonio::str_field(j, "nonce"));
  for (const jsonio::Json& e : jsonio::array_field(j, "credentials")) {
    jsonio::expect_keys(e, "credential request", {"disclose", "range_prove"});
    CredentialRequest creq;
    for (const jsonio::Json& name : jsonio::array_field(e, "disclose")) {
      if (!name.is_string()) throw DecodeError("disclose entries must be strings");
      creq.disclose.push_back(name.get<std::string>());
    }
    const jsonio::Json& ranges = jsonio::field(e, "range_prove");
    jsonio::expect_object(ranges, "range_prove");
    for (const auto& [name, bounds] : ranges.items()) {
      jsonio::expect_keys(bounds, "range request", {"bits", "hi", "lo"});
      creq.range_prove[name] = {jsonio::u64_field(bounds, "lo"),
                               jsonio::u64_field(bounds, "hi"),
                               jsonio::u32_field(bounds, "bits")};
    }
    req.credentials.push_back(std::move(creq));
  }
  return req;
}

void print_check(bool passed, const std::string& name, const std::string& detail) {
  std::cout << (passed ? "[ ok ] " : "[fail] ") << name << ": " << detail << "\n";
}

int cmd_keygen(const std::string& registry_flag, const std::string& owner,
               const std::string& role_name, const std::string& out,
               const std::string& seed_hex) {
  KeyRole role = role_from(role_name);
  Bytes seed = seed_hex.empty() ? SystemRng().bytes(32) : from_hex(seed_hex);
  bls::KeyTriple kt = bls::keygen(seed);

  RegistryStore store = RegistryStore::open(registry_path(registry_flag));
  store.register_key(owner, role, kt.pk, kt.pop);

  std::string path = out.empty() ? owner + "." + role_name + ".key" : out;
  write_file(path, key_file_json({owner, role_name, kt.sk}));
  std::cout << to_hex(kt.pk.to_bytes()) << "\n";
  std::cerr << "registered " << role_name << " key for " << owner << ", private key in "
            << path << "\n";
  return 0;
}

int cmd_register_format(const std::string& registry_flag, const std::string& file) {
  CredentialFormat format = format_from_json(read_file(file));
  RegistryStore store = RegistryStore::open(registry_path(registry_flag));
  store.register_format(format);
  std::cout << "registered format " << format.format_id << " ("
            << format.fields.size() << " fields)\n";
  return 0;
}

int cmd_issue(const std::string& registry_flag, const std::string& format_id,
              const std::string& values_file,
              const std::vector<std::string>& issuer_key_files,
              const std::string& holder_key_file, std::size_t versions,
              const std::string& out, const std::string& seed_hex) {
  RegistryStore store = RegistryStore::open(registry_path(registry_flag));
  RegistryView view = store.snapshot();
  const CredentialFormat* format = view.find_format(format_id);
  if (!format) throw UnknownFormatError("unknown format: " + format_id);

  std::vector<pedersen::AttributeValue> values =
      parse_values(*format, read_file(values_file));
  std::vector<bls::PrivateKey> issuer_sks;
  for (const std::string& path : issuer_key_files) {
    issuer_sks.push_back(load_key_file(path).sk);
  }
  if (versions == 0) throw ParameterError("versions must be at least 1");

  std::unique_ptr<Rng> rng = make_rng(seed_hex);
  std::string base = out.empty() ? format_id + ".cred" : out;
  for (std::size_t v = 0; v < versions; ++v) {
    auto [cred, record] = issue_multi_issuer(*format, values, issuer_sks, *rng);
    store.record_issuance(record);
    if (!holder_key_file.empty()) {
      cred = co_sign_holder(cred, load_key_file(holder_key_file).sk);
    }
    std::string path = versions == 1 ? base : base + ".v" + std::to_string(v);
    write_file(path, cred.to_json() + "\n");
    std::cout << to_hex(cred.root) << " " << path << "\n";
  }
  return 0;
}

int cmd_cosign(const std::string& cred_file, const std::string& holder_key_file,
               const std::string& out) {
  Credential cred = Credential::from_json(read_file(cred_file));
  cred = co_sign_holder(cred, load_key_file(holder_key_file).sk);
  write_file(out.empty() ? cred_file : out, cred.to_json() + "\n");
  std::cout << to_hex(cred.root) << " co-signed\n";
  return 0;
}

int cmd_present(const std::vector<std::string>& cred_files,
                const std::string& request_file, const std::string& holder_key_file,
                const std::string& out, const std::string& seed_hex) {
  std::vector<Credential> creds;
  for (const std::string& path : cred_files) {
    creds.push_back(Credential::from_json(read_file(path)));
  }
  DisclosureRequest request = parse_request(read_file(request_file));
  bls::PrivateKey holder_sk = load_key_file(holder_key_file).sk;

  std::unique_ptr<Rng> rng = make_rng(seed_hex);
  Presentation p = build(creds, holder_sk, request, *rng);
  write_file(out, p.to_json() + "\n");
  std::cout << p.slices.size() << " slice" << (p.slices.size() == 1 ? "" : "s")
            << " written to " << out << "\n";
  return 0;
}

int cmd_verify(const std::string& registry_flag, const std::string& presentation_file,
               const std::string& nonce_hex) {
  Presentation p = Presentation::from_json(read_file(presentation_file));
  Bytes challenge = from_hex(nonce_hex);
  if (challenge.empty()) throw ParameterError("nonce is required");

  bool nonce_ok = p.nonce == challenge;
  print_check(nonce_ok, "nonce",
              nonce_ok ? "presentation nonce matches the challenge"
                       : "presentation nonce differs from the challenge");
  // The live challenge is authoritative: the holder signature must cover it,
  // so a replayed presentation fails the signature check below as well.
  p.nonce = challenge;

  RegistryStore store =
      RegistryStore::open(registry_path(registry_flag), OpenMode::kReadOnly);
  VerificationReport report = verify(p, store.snapshot());
  for (const CheckResult& c : report.checks) print_check(c.passed, c.name, c.detail);

  bool ok = nonce_ok && report.ok();
  std::cout << (ok ? "verified" : "verification failed") << "\n";
  return ok ? 0 : 1;
}

int cmd_audit(const std::string& registry_flag) {
  RegistryStore store =
      RegistryStore::open(registry_path(registry_flag), OpenMode::kReadOnly);
  std::size_t records = store.audit();
  std::cout << "audit ok: " << records << " records\n";
  return 0;
}

// Benchmark plumbing. Wall times are medians over at least 10 repetitions of
// single operations; the CSV schema is fixed.

struct BenchRow {
  std::string operation;
  std::size_t claim_count = 0;
  std::size_t disclosed_count = 0;
  std::uint64_t wall_time_us = 0;
  std::size_t repetitions = 0;
};

template <class F>
std::uint64_t median_time_us(std::size_t reps, F&& work) {
  std::vector<std::uint64_t> samples;
  samples.reserve(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    auto start = std::chrono::steady_clock::now();
    work();
    auto stop = std::chrono::steady_clock::now();
    samples.push_back(
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

CredentialFormat bench_format(const std::string& id, std::size_t claims) {
  CredentialFormat format;
  format.format_id = id;
  for (std::size_t i = 0; i < claims; ++i) {
    format.fields.push_back({"claim" + std::to_string(i), AttributeType::kInt,
                             std::nullopt});
  }
  return format;
}

std::vector<pedersen::AttributeValue> bench_values(std::size_t claims, Rng& rng) {
  std::vector<pedersen::AttributeValue> values;
  for (std::size_t i = 0; i < claims; ++i) {
    values.emplace_back(std::uint64_t{rng.bytes(1)[0]});
  }
  return values;
}

std::vector<BenchRow> bench_issue(std::size_t max_claims, std::size_t reps, Rng& rng) {
  bls::KeyTriple issuer = bls::keygen(rng.bytes(32));
  std::vector<BenchRow> rows;
  for (std::size_t c = 1; c <= max_claims; ++c) {
    CredentialFormat format = bench_format("bench-issue-" + std::to_string(c), c);
    std::vector<pedersen::AttributeValue> values = bench_values(c, rng);
    std::uint64_t us =
        median_time_us(reps, [&] { issue(format, values, issuer.sk, rng); });
    rows.push_back({"issue", c, 0, us, reps});
    std::cerr << "issue " << c << "/" << max_claims << ": " << us << " us\n";
  }
  return rows;
}

std::vector<BenchRow> bench_present_verify(bool time_verify, std::size_t max_claims,
                                           std::size_t max_disclosed, std::size_t reps,
                                           Rng& rng) {
  bls::KeyTriple issuer = bls::keygen(rng.bytes(32));
  bls::KeyTriple holder = bls::keygen(rng.bytes(32));
  CredentialFormat format = bench_format("bench-present", max_claims);
  auto [cred, record] = issue(format, bench_values(max_claims, rng), issuer.sk, rng);

  RegistryStore store;
  store.register_key("issuer", KeyRole::kIssuer, issuer.pk, issuer.pop);
  store.register_key("holder", KeyRole::kHolder, holder.pk, holder.pop);
  store.register_format(format);
  store.record_issuance(record);
  RegistryView view = store.snapshot();

  Bytes nonce = rng.bytes(16);
  std::vector<BenchRow> rows;
  for (std::size_t d = 1; d <= max_disclosed; ++d) {
    DisclosureRequest text_req;
    DisclosureRequest range_req;
    CredentialRequest text_creq;
    CredentialRequest range_creq;
    for (std::size_t i = 0; i < d; ++i) {
      text_creq.disclose.push_back(format.fields[i].name);
      range_creq.range_prove[format.fields[i].name] = {0, 255, 8};
    }
    text_req.credentials.push_back(text_creq);
    text_req.nonce = nonce;
    range_req.credentials.push_back(range_creq);
    range_req.nonce = nonce;

    const char* kind = time_verify ? "verify" : "present";
    std::uint64_t text_us, range_us;
    if (time_verify) {
      Presentation text_p = build({cred}, holder.sk, text_req, rng);
      Presentation range_p = build({cred}, holder.sk, range_req, rng);
      text_us = median_time_us(reps, [&] { verify(text_p, view); });
      range_us = median_time_us(reps, [&] { verify(range_p, view); });
    } else {
      text_us = median_time_us(reps, [&] { build({cred}, holder.sk, text_req, rng); });
      range_us = median_time_us(reps, [&] { build({cred}, holder.sk, range_req, rng); });
    }
    rows.push_back({std::string(kind) + "-text", max_claims, d, text_us, reps});
    rows.push_back({std::string(kind) + "-range", max_claims, d, range_us, reps});
    std::cerr << kind << " " << d << "/" << max_disclosed << ": text " << text_us
              << " us, range " << range_us << " us\n";
  }
  return rows;
}

int cmd_bench(const std::string& suite, std::size_t max_claims,
              std::size_t max_disclosed, std::size_t reps, const std::string& out,
              const std::string& seed_hex) {
  DrbgRng rng(seed_hex.empty() ? str_bytes("bench") : from_hex(seed_hex));
  std::vector<BenchRow> rows;
  if (suite == "issue") {
    rows = bench_issue(max_claims, reps, rng);
  } else if (suite == "present") {
    rows = bench_present_verify(false, max_claims, max_disclosed, reps, rng);
  } else if (suite == "verify") {
    rows = bench_present_verify(true, max_claims, max_disclosed, reps, rng);
  } else {
    throw ParameterError("suite must be issue, present, or verify");
  }

  std::ostringstream csv;
  csv << "operation,claim_count,disclosed_count,wall_time_us,repetitions\n";
  for (const BenchRow& r : rows) {
    csv << r.operation << "," << r.claim_count << "," << r.disclosed_count << ","
        << r.wall_time_us << "," << r.repetitions << "\n";
  }
  write_file(out, csv.str());
  std::cout << rows.size() << " rows written to " << out << "\n";
  return 0;
}

template <class F>
int run(F&& f) {
  try {
    return f();
  } catch (const EnvironmentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"selective-disclosure credentials: salted commitment trees with "
               "aggregate signatures"};
  app.require_subcommand(1);
  int rc = 0;

  std::string registry_flag;
  std::string seed_hex;

  auto* keygen = app.add_subcommand("keygen", "generate a keypair and register it");
  std::string kg_owner, kg_role, kg_out;
  keygen->add_option("--owner", kg_owner, "owner identifier")->required();
  keygen->add_option("--role", kg_role, "issuer or holder")->required();
  keygen->add_option("--out", kg_out, "private key file (default <owner>.<role>.key)");
  keygen->add_option("--registry", registry_flag, "registry path ($SD_REGISTRY_PATH)");
  keygen->add_option("--seed", seed_hex, "hex seed for deterministic keys");
  keygen->callback([&] {
    rc = run([&] { return cmd_keygen(registry_flag, kg_owner, kg_role, kg_out, seed_hex); });
  });

  auto* regfmt = app.add_subcommand("register-format", "register a credential format");
  std::string rf_file;
  regfmt->add_option("format_file", rf_file, "format description JSON")->required();
  regfmt->add_option("--registry", registry_flag, "registry path ($SD_REGISTRY_PATH)");
  regfmt->callback(
      [&] { rc = run([&] { return cmd_register_format(registry_flag, rf_file); }); });

  auto* issue = app.add_subcommand("issue", "issue credentials and record them");
  std::string is_format, is_values, is_holder, is_out;
  std::vector<std::string> is_keys;
  std::size_t is_versions = 1;
  issue->add_option("format_id", is_format, "registered format id")->required();
  issue->add_option("values_file", is_values, "attribute values JSON")->required();
  issue->add_option("--issuer-key", is_keys, "issuer private key file (repeatable)")
      ->required();
  issue->add_option("--holder-cosign", is_holder, "holder key file to co-sign with");
  issue->add_option("--versions", is_versions, "number of independent versions");
  issue->add_option("--out", is_out, "credential file (default <format_id>.cred)");
  issue->add_option("--registry", registry_flag, "registry path ($SD_REGISTRY_PATH)");
  issue->add_option("--seed", seed_hex, "hex seed for deterministic salts");
  issue->callback([&] {
    rc = run([&] {
      return cmd_issue(registry_flag, is_format, is_values, is_keys, is_holder,
                       is_versions, is_out, seed_hex);
    });
  });

  auto* cosign = app.add_subcommand("cosign", "add a holder co-signature");
  std::string cs_cred, cs_key, cs_out;
  cosign->add_option("cred_file", cs_cred, "credential file")->required();
  cosign->add_option("--holder-key", cs_key, "holder private key file")->required();
  cosign->add_option("--out", cs_out, "output file (default: in place)");
  cosign->callback([&] { rc = run([&] { return cmd_cosign(cs_cred, cs_key, cs_out); }); });

  auto* present = app.add_subcommand("present", "build a selective disclosure");
  std::vector<std::string> pr_creds;
  std::string pr_request, pr_key, pr_out;
  present->add_option("cred_files", pr_creds, "credential files")->required();
  present->add_option("--request", pr_request, "disclosure request JSON")->required();
  present->add_option("--holder-key", pr_key, "holder private key file")->required();
  present->add_option("--out", pr_out, "presentation output file")->required();
  present->add_option("--seed", seed_hex, "hex seed for deterministic proofs");
  present->callback([&] {
    rc = run([&] { return cmd_present(pr_creds, pr_request, pr_key, pr_out, seed_hex); });
  });

  auto* verify = app.add_subcommand("verify", "verify a presentation");
  std::string vf_file, vf_nonce;
  verify->add_option("presentation_file", vf_file, "presentation JSON")->required();
  verify->add_option("--nonce", vf_nonce, "challenge nonce hex")->required();
  verify->add_option("--registry", registry_flag, "registry path ($SD_REGISTRY_PATH)");
  verify->callback(
      [&] { rc = run([&] { return cmd_verify(registry_flag, vf_file, vf_nonce); }); });

  auto* bench = app.add_subcommand("bench", "timing benchmarks, CSV output");
  std::string bn_suite, bn_out;
  std::size_t bn_claims = 100, bn_disclosed = 50, bn_reps = 10;
  bench->add_option("suite", bn_suite, "issue, present, or verify")->required();
  bench->add_option("--max-claims", bn_claims, "claim counts to sweep (issue)");
  bench->add_option("--max-disclosed", bn_disclosed, "disclosed counts to sweep");
  bench->add_option("--reps", bn_reps, "repetitions per point, minimum 10")
      ->check(CLI::Range(std::size_t{10}, std::size_t{1000000}));
  bench->add_option("--out", bn_out, "CSV output file")->required();
  bench->add_option("--seed", seed_hex, "hex seed for randomized values");
  bench->callback([&] {
    rc = run([&] {
      return cmd_bench(bn_suite, bn_claims, bn_disclosed, bn_reps, bn_out, seed_hex);
    });
  });

  auto* audit = app.add_subcommand("audit", "re-verify every registry record");
  audit->add_option("--registry", registry_flag, "registry path ($SD_REGISTRY_PATH)");
  audit->callback([&] { rc = run([&] { return cmd_audit(registry_flag); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  return rc;
}
