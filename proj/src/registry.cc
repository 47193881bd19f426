#include "sdcred/registry.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "jsonio.h"
#include "sdcred/errors.h"

namespace sdcred {

struct RegistryView::State {
  std::vector<KeyRecord> keys;
  std::vector<CredentialFormat> formats;
  std::vector<IssuanceRecord> issuances;
  std::vector<std::string> log;  // canonical lines, write order
};

struct RegistryStore::File {
  int fd = -1;
  std::filesystem::path path;
  bool writable = false;

  ~File() {
    if (fd >= 0) ::close(fd);
  }
};

namespace {

using jsonio::Json;

std::string role_name(KeyRole role) {
  return role == KeyRole::kIssuer ? "issuer" : "holder";
}

KeyRole role_from(const std::string& name) {
  if (name == "issuer") return KeyRole::kIssuer;
  if (name == "holder") return KeyRole::kHolder;
  throw DecodeError("unknown key role: " + name);
}

std::string type_name(AttributeType t) {
  return t == AttributeType::kInt ? "int" : "text";
}

AttributeType type_from(const std::string& name) {
  if (name == "int") return AttributeType::kInt;
  if (name == "text") return AttributeType::kText;
  throw DecodeError("unknown field type: " + name);
}

std::string key_line(const KeyRecord& rec) {
  Json j;
  j["kind"] = "key";
  j["owner_id"] = rec.owner_id;
  j["role"] = role_name(rec.role);
  j["pk"] = to_hex(rec.pk.to_bytes());
  j["pop"] = to_hex(rec.pop.sig_on_pk.to_bytes());
  return j.dump();
}

KeyRecord key_from_json(const Json& j) {
  jsonio::expect_keys(j, "key record", {"kind", "owner_id", "pk", "pop", "role"});
  KeyRecord rec;
  rec.owner_id = jsonio::str_field(j, "owner_id");
  rec.role = role_from(jsonio::str_field(j, "role"));
  auto pk = jsonio::hex_field<48>(j, "pk");
  rec.pk = bls::PublicKey::from_bytes(pk.data(), pk.size());
  auto pop = jsonio::hex_field<96>(j, "pop");
  rec.pop = {bls::Signature::from_bytes(pop.data(), pop.size())};
  return rec;
}

std::string format_line(const CredentialFormat& format) {
  Json j;
  j["kind"] = "format";
  j["format_id"] = format.format_id;
  Json fields = Json::array();
  for (const FieldSpec& f : format.fields) {
    Json e;
    e["name"] = f.name;
    e["type"] = type_name(f.type);
    if (f.range_hint) {
      Json h;
      h["lo"] = f.range_hint->lo;
      h["hi"] = f.range_hint->hi;
      h["bits"] = f.range_hint->bits;
      e["range_hint"] = std::move(h);
    }
    fields.push_back(std::move(e));
  }
  j["fields"] = std::move(fields);
  return j.dump();
}

CredentialFormat format_from_json(const Json& j) {
  jsonio::expect_keys(j, "format record", {"kind", "fields", "format_id"});
  CredentialFormat format;
  format.format_id = jsonio::str_field(j, "format_id");
  for (const Json& e : jsonio::array_field(j, "fields")) {
    jsonio::expect_keys(e, "field", {"name", "type"}, {"range_hint"});
    FieldSpec f;
    f.name = jsonio::str_field(e, "name");
    f.type = type_from(jsonio::str_field(e, "type"));
    if (e.contains("range_hint")) {
      const Json& h = jsonio::field(e, "range_hint");
      jsonio::expect_keys(h, "range hint", {"bits", "hi", "lo"});
      f.range_hint = RangeHint{jsonio::u64_field(h, "lo"), jsonio::u64_field(h, "hi"),
                               jsonio::u32_field(h, "bits")};
    }
    format.fields.push_back(std::move(f));
  }
  return format;
}

std::string issuance_line(const IssuanceRecord& rec) {
  Json j;
  j["kind"] = "issuance";
  j["format_id"] = rec.format_id;
  j["root"] = to_hex(rec.root);
  j["signature"] = to_hex(rec.signature.to_bytes());
  Json pks = Json::array();
  for (const bls::PublicKey& pk : rec.issuer_keys) pks.push_back(to_hex(pk.to_bytes()));
  j["issuer_keys"] = std::move(pks);
  return j.dump();
}

IssuanceRecord issuance_from_json(const Json& j) {
  jsonio::expect_keys(j, "issuance record",
                      {"kind", "format_id", "issuer_keys", "root", "signature"});
  IssuanceRecord rec;
  rec.format_id = jsonio::str_field(j, "format_id");
  rec.root = jsonio::hex_field<32>(j, "root");
  auto sig = jsonio::hex_field<96>(j, "signature");
  rec.signature = bls::Signature::from_bytes(sig.data(), sig.size());
  for (const Json& p : jsonio::array_field(j, "issuer_keys")) {
    if (!p.is_string()) throw DecodeError("issuer key must be a hex string");
    auto enc = jsonio::hex_array<48>(p.get<std::string>(), "issuer key");
    rec.issuer_keys.push_back(bls::PublicKey::from_bytes(enc.data(), enc.size()));
  }
  return rec;
}

const CredentialFormat* find_format_in(const RegistryView::State& state,
                                       const std::string& format_id) {
  for (const CredentialFormat& f : state.formats) {
    if (f.format_id == format_id) return &f;
  }
  return nullptr;
}

bool has_key_in(const RegistryView::State& state, const bls::PublicKey& pk,
                KeyRole role) {
  for (const KeyRecord& k : state.keys) {
    if (k.role == role && k.pk == pk) return true;
  }
  return false;
}

void check_issuance(const RegistryView::State& state, const IssuanceRecord& rec) {
  if (!find_format_in(state, rec.format_id)) {
    throw UnknownFormatError("issuance references unknown format " + rec.format_id);
  }
  std::vector<bls::AggregateEntry> entries;
  Bytes msg(rec.root.begin(), rec.root.end());
  for (const bls::PublicKey& pk : rec.issuer_keys) {
    if (!has_key_in(state, pk, KeyRole::kIssuer)) {
      throw UntrustedKeyError("issuer key not registered: " + to_hex(pk.to_bytes()));
    }
    entries.push_back({pk, msg, cred_root_domain()});
  }
  if (!bls::aggregate_verify(entries, rec.signature)) {
    throw InvalidCredentialError("issuance signature does not verify");
  }
}

// Each returns the canonical line to append, or nothing when the write is an
// exact duplicate and the store stays as it is.
std::optional<std::string> apply_key(RegistryView::State& state, const KeyRecord& rec) {
  if (!bls::verify_possession(rec.pk, rec.pop)) {
    throw RogueKeyError("proof of possession does not verify for owner " +
                        rec.owner_id);
  }
  for (const KeyRecord& k : state.keys) {
    if (k.owner_id == rec.owner_id && k.pk == rec.pk) {
      if (k.role != rec.role) {
        throw ParameterError("key already registered with a different role");
      }
      return std::nullopt;
    }
  }
  state.keys.push_back(rec);
  std::string line = key_line(rec);
  state.log.push_back(line);
  return line;
}

std::optional<std::string> apply_format(RegistryView::State& state,
                                        const CredentialFormat& format) {
  format.validate();
  if (const CredentialFormat* existing = find_format_in(state, format.format_id)) {
    if (*existing == format) return std::nullopt;
    throw ImmutableFormatError("conflicting re-registration of format " +
                               format.format_id);
  }
  state.formats.push_back(format);
  std::string line = format_line(format);
  state.log.push_back(line);
  return line;
}

std::string apply_issuance(RegistryView::State& state, const IssuanceRecord& rec) {
  check_issuance(state, rec);
  for (const IssuanceRecord& r : state.issuances) {
    if (r.root == rec.root) {
      throw DuplicateRootError("root already recorded: " + to_hex(rec.root));
    }
  }
  state.issuances.push_back(rec);
  std::string line = issuance_line(rec);
  state.log.push_back(line);
  return line;
}

void apply_line(RegistryView::State& state, const std::string& line) {
  Json j = jsonio::parse(line);
  jsonio::expect_object(j, "registry line");
  std::string kind = jsonio::str_field(j, "kind");
  std::optional<std::string> canonical;
  if (kind == "key") {
    canonical = apply_key(state, key_from_json(j));
  } else if (kind == "format") {
    canonical = apply_format(state, format_from_json(j));
  } else if (kind == "issuance") {
    canonical = apply_issuance(state, issuance_from_json(j));
  } else {
    throw DecodeError("unknown registry record kind: " + kind);
  }
  if (!canonical) throw DecodeError("duplicate registry record");
  if (*canonical != line) throw DecodeError("registry line is not canonical");
}

}  // namespace

RegistryView::RegistryView() : state_(std::make_shared<State>()) {}

const CredentialFormat* RegistryView::find_format(const std::string& format_id) const {
  return find_format_in(*state_, format_id);
}

std::optional<IssuanceRecord> RegistryView::lookup_root(
    const merkle::MerkleRoot& root) const {
  for (const IssuanceRecord& r : state_->issuances) {
    if (r.root == root) return r;
  }
  return std::nullopt;
}

bool RegistryView::has_key(const bls::PublicKey& pk, KeyRole role) const {
  return has_key_in(*state_, pk, role);
}

const std::vector<KeyRecord>& RegistryView::keys() const { return state_->keys; }

const std::vector<CredentialFormat>& RegistryView::formats() const {
  return state_->formats;
}

const std::vector<IssuanceRecord>& RegistryView::issuances() const {
  return state_->issuances;
}

RegistryStore::RegistryStore() : state_(std::make_shared<RegistryView::State>()) {}

RegistryStore RegistryStore::open(const std::filesystem::path& path, OpenMode mode) {
  auto file = std::make_shared<File>();
  file->path = path;
  file->writable = mode == OpenMode::kReadWrite;
  if (file->writable) {
    file->fd = ::open(path.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (file->fd < 0) {
      throw EnvironmentError("cannot open registry " + path.string() + ": " +
                             std::strerror(errno));
    }
    if (::flock(file->fd, LOCK_EX | LOCK_NB) != 0) {
      throw EnvironmentError("registry locked: " + path.string());
    }
  }

  std::ifstream in(path);
  if (!in) throw EnvironmentError("cannot read registry " + path.string());
  auto next = std::make_shared<RegistryView::State>();
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      apply_line(*next, line);
    } catch (const Error& e) {
      throw DecodeError("registry " + path.string() + " line " +
                        std::to_string(lineno) + ": " + e.what());
    }
  }

  RegistryStore store;
  store.state_ = std::move(next);
  store.file_ = std::move(file);
  return store;
}

void RegistryStore::persist(const std::string& line) {
  if (!file_) return;
  if (!file_->writable) throw EnvironmentError("registry opened read-only");
  std::string out = line + "\n";
  std::size_t done = 0;
  while (done < out.size()) {
    ssize_t n = ::write(file_->fd, out.data() + done, out.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw EnvironmentError("cannot append to registry " + file_->path.string() +
                             ": " + std::strerror(errno));
    }
    done += static_cast<std::size_t>(n);
  }
}

KeyRecord RegistryStore::register_key(const std::string& owner_id, KeyRole role,
                                      const bls::PublicKey& pk,
                                      const bls::PossessionProof& pop) {
  KeyRecord rec{owner_id, role, pk, pop};
  auto next = std::make_shared<RegistryView::State>(*state_);
  if (auto line = apply_key(*next, rec)) {
    persist(*line);
    state_ = std::move(next);
  }
  return rec;
}

std::string RegistryStore::register_format(const CredentialFormat& format) {
  auto next = std::make_shared<RegistryView::State>(*state_);
  if (auto line = apply_format(*next, format)) {
    persist(*line);
    state_ = std::move(next);
  }
  return format.format_id;
}

void RegistryStore::record_issuance(const IssuanceRecord& record) {
  auto next = std::make_shared<RegistryView::State>(*state_);
  std::string line = apply_issuance(*next, record);
  persist(line);
  state_ = std::move(next);
}

RegistryView RegistryStore::snapshot() const {
  RegistryView view;
  view.state_ = state_;
  return view;
}

std::string RegistryStore::serialize() const {
  std::string out;
  for (const std::string& line : state_->log) {
    out += line;
    out += '\n';
  }
  return out;
}

std::size_t RegistryStore::audit() const {
  const RegistryView::State& state = *state_;
  for (const KeyRecord& k : state.keys) {
    if (!bls::verify_possession(k.pk, k.pop)) {
      throw RogueKeyError("audit: proof of possession fails for owner " + k.owner_id);
    }
  }
  for (const CredentialFormat& f : state.formats) f.validate();
  for (const IssuanceRecord& r : state.issuances) check_issuance(state, r);
  return state.keys.size() + state.formats.size() + state.issuances.size();
}

}  // namespace sdcred
