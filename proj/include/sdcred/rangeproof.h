#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sdcred/bytes.h"
#include "sdcred/ec.h"
#include "sdcred/pedersen.h"
#include "sdcred/rng.h"

// Bulletproofs range proofs over Pedersen commitments. An arbitrary [lo, hi]
// statement is proved as two [0, 2^n) sub-proofs: value - lo against the
// lo-shifted commitment and hi - value against hi*G_val - C, both driven by
// one transcript that absorbs the full statement before any challenge.

namespace sdcred::rangeproof {

struct RangeStatement {
  pedersen::Commitment commitment;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint32_t bits = 0;
};

struct RangeProof {
  std::vector<GroupElementG1> round_commitments;  // A, S, T1, T2 per sub-proof
  std::vector<Scalar> final_scalars;              // taux, mu, that, a, b per sub-proof
  std::vector<std::pair<GroupElementG1, GroupElementG1>> inner_product_rounds;

  Bytes serialize() const;
  // Throws MalformedProofError on anything that does not parse exactly.
  static RangeProof deserialize(const Bytes& in);
};

// Element count of one [0, 2^n) sub-proof: 4 commitments + 5 scalars +
// 2*log2(n) inner-product points. Throws UnsupportedBitWidthError unless
// n_bits is one of 8, 16, 32, 64.
std::size_t proof_size_elements(std::uint32_t n_bits);

// Shared vector generator basis, sliced to the statement's bit width.
// Fixed protocol constants, derived by hashing; exposed so independent
// verifier implementations can be written against them.
const std::vector<GroupElementG1>& vector_gens_g();
const std::vector<GroupElementG1>& vector_gens_h();

// Throws OutOfRangeError when value is outside [lo, hi], ParameterError when
// the statement is inconsistent with (value, salt) or with itself.
RangeProof prove_range(const pedersen::PedersenParams& params, const Scalar& value,
                       const pedersen::Salt& salt, const RangeStatement& stmt,
                       Rng& rng);

// False on any failed relation; MalformedProofError only for proofs whose
// shape does not match the statement.
bool verify_range(const pedersen::PedersenParams& params, const RangeStatement& stmt,
                  const RangeProof& proof);

}  // namespace sdcred::rangeproof
