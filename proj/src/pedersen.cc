#include "sdcred/pedersen.h"

#include "sdcred/errors.h"

namespace sdcred::pedersen {

PedersenParams PedersenParams::standard() {
  static const PedersenParams p = [] {
    PedersenParams q;
    q.G_val = hash_to_point_g1(str_bytes("PEDERSEN-G-VAL"), {});
    q.G_blind = hash_to_point_g1(str_bytes("PEDERSEN-G-BLIND"), {});
    return q;
  }();
  return p;
}

Commitment commit(const PedersenParams& params, const Scalar& value, const Salt& salt) {
  return params.G_val * value + params.G_blind * salt;
}

Scalar attribute_to_scalar(const std::string& name, const AttributeValue& value) {
  if (std::holds_alternative<std::uint64_t>(value)) {
    return Scalar::from_u64(std::get<std::uint64_t>(value));
  }
  if (std::holds_alternative<std::string>(value)) {
    Bytes tag = str_bytes("LEAF-VAL");
    tag.push_back(0x00);
    append(tag, str_bytes(name));
    return hash_to_scalar(tag, str_bytes(std::get<std::string>(value)));
  }
  throw EncodingError("unsupported attribute value type");
}

Commitment shift_commitment(const PedersenParams& params, const Commitment& c,
                            const Scalar& delta) {
  return c - params.G_val * delta;
}

}  // namespace sdcred::pedersen
