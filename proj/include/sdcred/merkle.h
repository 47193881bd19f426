#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sdcred/bytes.h"
#include "sdcred/sha256.h"

// Salted commitment trees. Leaves, internal nodes, and padding all hash under
// distinct one-byte domain prefixes, so no value of one kind can be reinterpreted
// as another. Trees are padded to a power of two (minimum two leaves) with
// position-bound padding digests.

namespace sdcred::merkle {

using MerkleRoot = Digest;

// SHA-256(0x00 || data); data is the serialized leaf commitment.
Digest leaf_label(const Bytes& data);

struct MerkleTree {
  std::vector<Digest> leaf_labels;       // as supplied, unpadded
  std::vector<std::vector<Digest>> levels;  // levels[0] padded leaves, back() is the root
  std::size_t leaf_count = 0;

  const MerkleRoot& root() const { return levels.back()[0]; }
  std::size_t height() const { return levels.size() - 1; }
};

enum class Side : std::uint8_t { kLeft = 0, kRight = 1 };

struct PathEntry {
  Digest sibling;
  Side side;  // which side the sibling sits on
};

struct InclusionProof {
  std::size_t leaf_index = 0;
  std::vector<PathEntry> path;  // bottom-up, length == tree height
};

// (level, index) -> digest, level 0 being the leaves. Contains exactly the
// frontier nodes a verifier cannot derive from the disclosed leaves and the
// public padding rule; in particular no ancestor of a disclosed leaf.
using NodeKey = std::pair<std::uint32_t, std::uint64_t>;

struct MultiProof {
  std::vector<std::size_t> disclosed_indices;  // sorted, unique
  std::map<NodeKey, Digest> auxiliary_nodes;
};

// Throws EmptyTreeError on an empty leaf list.
MerkleTree build(const std::vector<Digest>& leaves);

// Throws IndexError when index >= leaf_count.
InclusionProof prove(const MerkleTree& tree, std::size_t index);

// Indices may arrive in any order; duplicates collapse. Throws IndexError on
// any out-of-range index. An empty disclosure is allowed and yields a proof
// whose only auxiliary node is the root.
MultiProof prove_multi(const MerkleTree& tree, const std::vector<std::size_t>& indices);

// Throws IndexError / MalformedProofError; a wrong digest anywhere simply
// yields a different root, which the caller compares against the signed one.
MerkleRoot recompute_root(const Digest& leaf, const InclusionProof& proof,
                          std::size_t leaf_count);

// disclosed maps leaf index to leaf digest and must match the proof's index
// list exactly. Rejects proofs with missing or superfluous auxiliary nodes.
MerkleRoot recompute_root(const std::map<std::size_t, Digest>& disclosed,
                          const MultiProof& proof, std::size_t leaf_count);

}  // namespace sdcred::merkle
