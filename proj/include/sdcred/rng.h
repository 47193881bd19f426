#pragma once

#include <cstdint>
#include <cstddef>

#include "sdcred/bytes.h"
#include "sdcred/sha256.h"

namespace sdcred {

class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::uint8_t* out, std::size_t len) = 0;

  Bytes bytes(std::size_t len) {
    Bytes out(len);
    fill(out.data(), len);
    return out;
  }
};

class SystemRng : public Rng {
 public:
  void fill(std::uint8_t* out, std::size_t len) override;
};

// SHA-256 counter generator; a fixed seed reproduces the stream exactly.
class DrbgRng : public Rng {
 public:
  explicit DrbgRng(const Bytes& seed);
  void fill(std::uint8_t* out, std::size_t len) override;

 private:
  Digest key_;
  std::uint64_t counter_;
};

}  // namespace sdcred
