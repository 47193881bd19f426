#include "sdcred/rng.h"

#include <sys/random.h>

#include <cstring>
#include <stdexcept>

namespace sdcred {

void SystemRng::fill(std::uint8_t* out, std::size_t len) {
  while (len > 0) {
    ssize_t got = getrandom(out, len, 0);
    if (got < 0) throw std::runtime_error("getrandom failed");
    out += got;
    len -= static_cast<std::size_t>(got);
  }
}

DrbgRng::DrbgRng(const Bytes& seed) : counter_(0) {
  Bytes material = str_bytes("SDCRED-DRBG-V1");
  append(material, seed);
  key_ = sha256(material);
}

void DrbgRng::fill(std::uint8_t* out, std::size_t len) {
  while (len > 0) {
    Bytes block_input(key_.begin(), key_.end());
    append_u64le(block_input, counter_++);
    Digest block = sha256(block_input);
    std::size_t take = len < 32 ? len : 32;
    std::memcpy(out, block.data(), take);
    out += take;
    len -= take;
  }
}

}  // namespace sdcred
