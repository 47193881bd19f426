#pragma once

#include "sdcred/bytes.h"
#include "sdcred/ec.h"
#include "sdcred/sha256.h"

namespace sdcred {

// Chained SHA-256 Fiat-Shamir transcript. Every absorb frames its label and
// payload with explicit lengths, and every challenge both derives a scalar
// and ratchets the state, so challenges commit to the full prior history.
class Transcript {
 public:
  explicit Transcript(const Bytes& tag);

  void absorb(const Bytes& label, const Bytes& data);
  Scalar challenge(const Bytes& label);

  const Digest& state() const { return state_; }

 private:
  Digest state_;
};

}  // namespace sdcred
