// Python bindings. The surface mirrors the CLI rather than the C++ headers:
// keys and proofs travel as bytes, credentials and presentations as canonical
// JSON strings, and a Registry owns issuance the same way the store does.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdcred/bls.h"
#include "sdcred/bytes.h"
#include "sdcred/credential.h"
#include "sdcred/errors.h"
#include "sdcred/format.h"
#include "sdcred/pedersen.h"
#include "sdcred/presentation.h"
#include "sdcred/registry.h"
#include "sdcred/rng.h"

namespace py = pybind11;

namespace {

using namespace sdcred;

PyObject* exc_error = nullptr;
PyObject* exc_out_of_range = nullptr;
PyObject* exc_decode = nullptr;

Bytes to_bytes(const py::bytes& b) {
  std::string s = b;
  return Bytes(s.begin(), s.end());
}

py::bytes from_bytes(const std::uint8_t* data, std::size_t len) {
  return py::bytes(reinterpret_cast<const char*>(data), len);
}

template <typename Array>
py::bytes from_array(const Array& a) {
  return from_bytes(a.data(), a.size());
}

bls::PrivateKey sk_from(const py::bytes& b) {
  Bytes raw = to_bytes(b);
  if (raw.size() != 32) throw DecodeError("private key must be 32 bytes");
  std::array<std::uint8_t, 32> fixed{};
  std::copy(raw.begin(), raw.end(), fixed.begin());
  return bls::PrivateKey::from_bytes(fixed);
}

bls::PublicKey pk_from(const py::bytes& b) {
  Bytes raw = to_bytes(b);
  return bls::PublicKey::from_bytes(raw.data(), raw.size());
}

KeyRole role_from(const std::string& role) {
  if (role == "issuer") return KeyRole::kIssuer;
  if (role == "holder") return KeyRole::kHolder;
  throw ParameterError("role must be issuer or holder");
}

// Values arrive as a name -> value dict and leave in format order; both
// directions are checked strictly, exactly like the CLI's values files.
std::vector<pedersen::AttributeValue> values_from(const CredentialFormat& format,
                                                  const py::dict& values) {
  std::vector<pedersen::AttributeValue> out;
  for (const FieldSpec& field : format.fields) {
    if (!values.contains(field.name)) {
      throw FormatError("missing value for attribute " + field.name);
    }
    py::object v = values[py::cast(field.name)];
    if (field.type == AttributeType::kInt) {
      out.push_back(py::cast<std::uint64_t>(v));
    } else {
      out.push_back(py::cast<std::string>(v));
    }
  }
  if (values.size() != format.fields.size()) {
    throw FormatError("values name an attribute the format lacks");
  }
  return out;
}

DisclosureRequest request_from(const py::dict& request) {
  DisclosureRequest out;
  out.nonce = to_bytes(py::cast<py::bytes>(request["nonce"]));
  for (py::handle entry : py::cast<py::list>(request["credentials"])) {
    py::dict d = py::cast<py::dict>(entry);
    CredentialRequest creq;
    if (d.contains("disclose")) {
      creq.disclose = py::cast<std::vector<std::string>>(d["disclose"]);
    }
    if (d.contains("range_prove")) {
      for (auto item : py::cast<py::dict>(d["range_prove"])) {
        py::dict bounds = py::cast<py::dict>(item.second);
        creq.range_prove[py::cast<std::string>(item.first)] = {
            py::cast<std::uint64_t>(bounds["lo"]), py::cast<std::uint64_t>(bounds["hi"]),
            py::cast<std::uint32_t>(bounds["bits"])};
      }
    }
    out.credentials.push_back(std::move(creq));
  }
  return out;
}

struct PyRegistry {
  std::unique_ptr<RegistryStore> store;

  PyRegistry() : store(std::make_unique<RegistryStore>()) {}

  static PyRegistry open(const std::string& path, bool read_only) {
    PyRegistry r;
    *r.store = RegistryStore::open(path, read_only ? OpenMode::kReadOnly
                                                   : OpenMode::kReadWrite);
    return r;
  }

  void register_key(const std::string& owner_id, const std::string& role,
                    const py::bytes& pk, const py::bytes& pop) {
    Bytes raw = to_bytes(pop);
    store->register_key(owner_id, role_from(role), pk_from(pk),
                        {bls::Signature::from_bytes(raw.data(), raw.size())});
  }

  std::string register_format(const std::string& format_json) {
    return store->register_format(format_from_json(format_json));
  }

  std::vector<std::string> issue(const std::string& format_id, const py::dict& values,
                                 const std::vector<py::bytes>& issuer_sks,
                                 const py::bytes& seed,
                                 const std::optional<py::bytes>& holder_sk,
                                 std::size_t versions) {
    const CredentialFormat* format = store->snapshot().find_format(format_id);
    if (format == nullptr) throw UnknownFormatError("format not registered: " + format_id);
    std::vector<bls::PrivateKey> sks;
    for (const py::bytes& b : issuer_sks) sks.push_back(sk_from(b));

    DrbgRng rng(to_bytes(seed));
    std::vector<std::string> out;
    for (std::size_t v = 0; v < versions; ++v) {
      auto [cred, record] = issue_multi_issuer(*format, values_from(*format, values),
                                               sks, rng);
      store->record_issuance(record);
      if (holder_sk) cred = co_sign_holder(cred, sk_from(*holder_sk));
      out.push_back(cred.to_json());
    }
    return out;
  }

  py::list verify(const std::string& presentation_json, const py::bytes& nonce) {
    Presentation p = Presentation::from_json(presentation_json);
    p.nonce = to_bytes(nonce);
    VerificationReport report = ::sdcred::verify(p, store->snapshot());
    py::list checks;
    for (const CheckResult& c : report.checks) {
      py::dict d;
      d["name"] = c.name;
      d["passed"] = c.passed;
      d["detail"] = c.detail;
      checks.append(d);
    }
    return checks;
  }

  std::size_t audit() const { return store->audit(); }
};

}  // namespace

PYBIND11_MODULE(_sdcred, m) {
  m.doc() = "selective-disclosure credentials over salted commitment trees";

  exc_error = PyErr_NewException("sdcred.Error", nullptr, nullptr);
  exc_out_of_range = PyErr_NewException("sdcred.OutOfRangeError", exc_error, nullptr);
  exc_decode = PyErr_NewException("sdcred.DecodeError", exc_error, nullptr);
  m.attr("Error") = py::reinterpret_borrow<py::object>(exc_error);
  m.attr("OutOfRangeError") = py::reinterpret_borrow<py::object>(exc_out_of_range);
  m.attr("DecodeError") = py::reinterpret_borrow<py::object>(exc_decode);

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OutOfRangeError& e) {
      PyErr_SetString(exc_out_of_range, e.what());
    } catch (const DecodeError& e) {
      PyErr_SetString(exc_decode, e.what());
    } catch (const Error& e) {
      PyErr_SetString(exc_error, e.what());
    }
  });

  py::class_<bls::KeyTriple>(m, "KeyTriple")
      .def_property_readonly("sk",
                             [](const bls::KeyTriple& kt) { return from_array(kt.sk.to_bytes()); })
      .def_property_readonly("pk",
                             [](const bls::KeyTriple& kt) { return from_array(kt.pk.to_bytes()); })
      .def_property_readonly("pop", [](const bls::KeyTriple& kt) {
        return from_array(kt.pop.sig_on_pk.to_bytes());
      });

  m.def("keygen",
        [](const py::bytes& seed) { return bls::keygen(to_bytes(seed)); },
        py::arg("seed"));

  m.def("pedersen_commit",
        [](std::uint64_t value, std::uint64_t salt) {
          return from_array(pedersen::commit(pedersen::PedersenParams::standard(),
                                             Scalar::from_u64(value),
                                             Scalar::from_u64(salt))
                                .serialize());
        },
        py::arg("value"), py::arg("salt"));

  m.def("present",
        [](const std::vector<std::string>& cred_jsons, const py::bytes& holder_sk,
           const py::dict& request, const py::bytes& seed) {
          std::vector<Credential> creds;
          for (const std::string& j : cred_jsons) creds.push_back(Credential::from_json(j));
          DrbgRng rng(to_bytes(seed));
          return build(creds, sk_from(holder_sk), request_from(request), rng).to_json();
        },
        py::arg("credentials"), py::arg("holder_sk"), py::arg("request"), py::arg("seed"));

  py::class_<PyRegistry>(m, "Registry")
      .def(py::init<>())
      .def_static("open", &PyRegistry::open, py::arg("path"),
                  py::arg("read_only") = false)
      .def("register_key", &PyRegistry::register_key, py::arg("owner_id"),
           py::arg("role"), py::arg("pk"), py::arg("pop"))
      .def("register_format", &PyRegistry::register_format, py::arg("format_json"))
      .def("issue", &PyRegistry::issue, py::arg("format_id"), py::arg("values"),
           py::arg("issuer_sks"), py::arg("seed"), py::arg("holder_sk") = std::nullopt,
           py::arg("versions") = 1)
      .def("verify", &PyRegistry::verify, py::arg("presentation_json"), py::arg("nonce"))
      .def("audit", &PyRegistry::audit);
}
