#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sdcred/bytes.h"
#include "sdcred/rng.h"
#include "sdcred/sha256.h"

namespace sdcred {

// Scalar field element mod r. repr holds the Montgomery form; treat as opaque
// and go through the byte interface.
class Scalar {
 public:
  Scalar() : repr{} {}

  static Scalar zero();
  static Scalar one();
  static Scalar from_u64(std::uint64_t x);
  // 32-byte little-endian canonical encoding; throws DecodeError if >= r.
  static Scalar from_bytes(const std::array<std::uint8_t, 32>& in);
  std::array<std::uint8_t, 32> to_bytes() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar neg() const;
  Scalar inverse() const;  // zero maps to zero
  bool is_zero() const;
  bool operator==(const Scalar& o) const { return repr == o.repr; }
  bool operator!=(const Scalar& o) const { return repr != o.repr; }

  static Scalar random(Rng& rng);

  std::array<std::uint64_t, 4> repr;
};

class GroupElementG1 {
 public:
  GroupElementG1();  // identity

  static GroupElementG1 generator();
  static GroupElementG1 identity();

  GroupElementG1 operator+(const GroupElementG1& o) const;
  GroupElementG1 operator-(const GroupElementG1& o) const;
  GroupElementG1 neg() const;
  GroupElementG1 operator*(const Scalar& k) const;
  bool is_identity() const;
  bool operator==(const GroupElementG1& o) const;
  bool operator!=(const GroupElementG1& o) const { return !(*this == o); }

  // 48-byte compressed encoding; deserialize rejects malformed, off-curve,
  // and out-of-subgroup inputs.
  std::array<std::uint8_t, 48> serialize() const;
  static GroupElementG1 deserialize(const std::uint8_t* in, std::size_t len);

  std::array<std::uint64_t, 18> repr;  // Jacobian, Montgomery form
};

class GroupElementG2 {
 public:
  GroupElementG2();

  static GroupElementG2 generator();
  static GroupElementG2 identity();

  GroupElementG2 operator+(const GroupElementG2& o) const;
  GroupElementG2 operator-(const GroupElementG2& o) const;
  GroupElementG2 neg() const;
  GroupElementG2 operator*(const Scalar& k) const;
  bool is_identity() const;
  bool operator==(const GroupElementG2& o) const;
  bool operator!=(const GroupElementG2& o) const { return !(*this == o); }

  std::array<std::uint8_t, 96> serialize() const;
  static GroupElementG2 deserialize(const std::uint8_t* in, std::size_t len);

  std::array<std::uint64_t, 36> repr;
};

class PairingOutput {
 public:
  static PairingOutput identity();

  PairingOutput operator*(const PairingOutput& o) const;
  bool is_identity() const;
  bool operator==(const PairingOutput& o) const { return repr == o.repr; }
  bool operator!=(const PairingOutput& o) const { return repr != o.repr; }

  // 576 bytes: the twelve Fp coefficients in the w^0..w^5 basis.
  std::vector<std::uint8_t> serialize() const;

  std::array<std::uint64_t, 72> repr;
};

// Domain-separated hashing. Tags are wrapped into project DSTs internally.
Scalar hash_to_scalar(const Bytes& domain_tag, const Bytes& data);
GroupElementG1 hash_to_point_g1(const Bytes& domain_tag, const Bytes& message);
GroupElementG2 hash_to_point_g2(const Bytes& domain_tag, const Bytes& message);

PairingOutput pairing(const GroupElementG2& a, const GroupElementG1& b);

// Product e(a_i, b_i) over all pairs, sharing one final exponentiation.
PairingOutput pairing_product(const std::vector<GroupElementG2>& a,
                              const std::vector<GroupElementG1>& b);

GroupElementG1 msm_g1(const std::vector<GroupElementG1>& points,
                      const std::vector<Scalar>& scalars);

}  // namespace sdcred
