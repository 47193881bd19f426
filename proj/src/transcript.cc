#include "sdcred/transcript.h"

#include <bit>

#include "detail/mont.h"

namespace sdcred {

Transcript::Transcript(const Bytes& tag) {
  Bytes buf = str_bytes("SDCRED-TRANSCRIPT-V1");
  append(buf, tag);
  state_ = sha256(buf);
}

namespace {

Bytes frame(const Digest& state, const Bytes& label) {
  Bytes buf(state.begin(), state.end());
  append_u32le(buf, static_cast<std::uint32_t>(label.size()));
  append(buf, label);
  return buf;
}

}  // namespace

void Transcript::absorb(const Bytes& label, const Bytes& data) {
  Bytes buf = frame(state_, label);
  append_u64le(buf, data.size());
  append(buf, data);
  state_ = sha256(buf);
}

Scalar Transcript::challenge(const Bytes& label) {
  for (;;) {
    Bytes base = frame(state_, label);
    Bytes b0 = base, b1 = base, b2 = base;
    b0.push_back(0x00);
    b1.push_back(0x01);
    b2.push_back(0x02);
    Digest t0 = sha256(b0);
    Digest t1 = sha256(b1);
    std::uint8_t wide[48];
    std::copy(t0.begin(), t0.end(), wide);
    std::copy(t1.begin(), t1.begin() + 16, wide + 32);
    detail::Fr s = detail::Fr::from_bytes_be_reduce(wide, sizeof wide);
    state_ = sha256(b2);
    if (!s.is_zero()) {
      Scalar out;
      out.repr = std::bit_cast<std::array<std::uint64_t, 4>>(s);
      return out;
    }
  }
}

}  // namespace sdcred
