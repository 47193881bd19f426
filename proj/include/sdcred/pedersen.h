#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "sdcred/bytes.h"
#include "sdcred/ec.h"

namespace sdcred::pedersen {

// Fixed commitment basis derived by hashing to the curve; nothing-up-my-sleeve
// and independent of any secret.
struct PedersenParams {
  GroupElementG1 G_val;
  GroupElementG1 G_blind;

  static PedersenParams standard();
};

using Commitment = GroupElementG1;
using Salt = Scalar;

// value * G_val + salt * G_blind
Commitment commit(const PedersenParams& params, const Scalar& value, const Salt& salt);

// Attribute values are either 64-bit non-negative integers, embedded
// directly, or text, hashed to a scalar under a leaf domain bound to the
// attribute name. Throws EncodingError for anything else.
using AttributeValue = std::variant<std::uint64_t, std::string>;

Scalar attribute_to_scalar(const std::string& name, const AttributeValue& value);

// c - delta * G_val: shifts the committed value without touching the salt.
Commitment shift_commitment(const PedersenParams& params, const Commitment& c,
                            const Scalar& delta);

}  // namespace sdcred::pedersen
