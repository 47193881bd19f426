#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sdcred {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const std::uint8_t* data, std::size_t len);
std::string to_hex(const Bytes& data);

template <std::size_t N>
std::string to_hex(const std::array<std::uint8_t, N>& data) {
  return to_hex(data.data(), N);
}

// Throws DecodeError on odd length or non-hex characters.
Bytes from_hex(const std::string& hex);

inline void append(Bytes& out, const std::uint8_t* data, std::size_t len) {
  out.insert(out.end(), data, data + len);
}

inline void append(Bytes& out, const Bytes& data) {
  append(out, data.data(), data.size());
}

template <std::size_t N>
void append(Bytes& out, const std::array<std::uint8_t, N>& data) {
  append(out, data.data(), N);
}

inline void append_u32le(Bytes& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void append_u64le(Bytes& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void append_u64be(Bytes& out, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline Bytes str_bytes(const std::string& s) {
  return Bytes(s.begin(), s.end());
}

}  // namespace sdcred
