#pragma once

#include <array>
#include <cstdint>
#include <cstddef>

#include "sdcred/bytes.h"

namespace sdcred {

using Digest = std::array<std::uint8_t, 32>;

class Sha256 {
 public:
  Sha256();
  Sha256& update(const std::uint8_t* data, std::size_t len);
  Sha256& update(const Bytes& data) { return update(data.data(), data.size()); }
  template <std::size_t N>
  Sha256& update(const std::array<std::uint8_t, N>& data) {
    return update(data.data(), N);
  }
  Digest finish();

 private:
  void compress(const std::uint8_t* block);

  std::uint32_t state_[8];
  std::uint8_t buf_[64];
  std::size_t buf_len_;
  std::uint64_t total_len_;
};

Digest sha256(const std::uint8_t* data, std::size_t len);
Digest sha256(const Bytes& data);

}  // namespace sdcred
