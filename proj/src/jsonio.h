#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "sdcred/bytes.h"
#include "sdcred/errors.h"

// Canonical-JSON plumbing shared by the credential, presentation, and registry
// serializers. nlohmann's default object keeps keys sorted, so dump() of a
// tree built from these helpers is already canonical: sorted keys, compact
// separators, lowercase hex, UTF-8 passed through.

namespace sdcred::jsonio {

using Json = nlohmann::json;

inline Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DecodeError("malformed JSON");
  return j;
}

inline void expect_object(const Json& j, const char* what) {
  if (!j.is_object()) throw DecodeError(std::string(what) + ": not a JSON object");
}

// Strict schema: every required key present, nothing outside required+optional.
inline void expect_keys(const Json& j, const char* what,
                        std::initializer_list<const char*> required,
                        std::initializer_list<const char*> optional = {}) {
  expect_object(j, what);
  for (const char* key : required) {
    if (!j.contains(key)) {
      throw DecodeError(std::string(what) + ": missing field " + key);
    }
  }
  for (const auto& [key, value] : j.items()) {
    auto known = [&](std::initializer_list<const char*> list) {
      return std::any_of(list.begin(), list.end(),
                         [&](const char* k) { return key == k; });
    };
    if (!known(required) && !known(optional)) {
      throw DecodeError(std::string(what) + ": unexpected field " + key);
    }
  }
}

inline const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw DecodeError(std::string("missing field ") + key);
  return *it;
}

inline std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw DecodeError(std::string("field ") + key + " must be a string");
  return v.get<std::string>();
}

inline std::uint64_t u64_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) {
    throw DecodeError(std::string("field ") + key + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

inline std::uint32_t u32_field(const Json& j, const char* key) {
  std::uint64_t v = u64_field(j, key);
  if (v > 0xffffffffull) throw DecodeError(std::string("field ") + key + " out of range");
  return static_cast<std::uint32_t>(v);
}

inline const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw DecodeError(std::string("field ") + key + " must be an array");
  return v;
}

template <std::size_t N>
std::array<std::uint8_t, N> hex_array(const std::string& hex, const char* what) {
  Bytes raw = from_hex(hex);
  if (raw.size() != N) {
    throw DecodeError(std::string(what) + ": expected " + std::to_string(N) + " bytes");
  }
  std::array<std::uint8_t, N> out{};
  std::copy(raw.begin(), raw.end(), out.begin());
  return out;
}

template <std::size_t N>
std::array<std::uint8_t, N> hex_field(const Json& j, const char* key) {
  return hex_array<N>(str_field(j, key), key);
}

}  // namespace sdcred::jsonio
