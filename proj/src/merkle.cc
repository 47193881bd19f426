#include "sdcred/merkle.h"

#include <algorithm>
#include <set>

#include "sdcred/errors.h"

namespace sdcred::merkle {

namespace {

Digest internal_node(const Digest& left, const Digest& right) {
  Bytes buf;
  buf.push_back(0x01);
  buf.insert(buf.end(), left.begin(), left.end());
  buf.insert(buf.end(), right.begin(), right.end());
  return sha256(buf);
}

Digest pad_digest(std::uint64_t index) {
  Bytes buf;
  buf.push_back(0x02);
  append_u64be(buf, index);
  return sha256(buf);
}

std::size_t padded_count(std::size_t leaf_count) {
  std::size_t n = 2;
  while (n < leaf_count) n <<= 1;
  return n;
}

// Root of a subtree consisting purely of padding leaves.
Digest pad_subtree(std::uint32_t level, std::uint64_t index) {
  if (level == 0) return pad_digest(index);
  return internal_node(pad_subtree(level - 1, 2 * index),
                       pad_subtree(level - 1, 2 * index + 1));
}

}  // namespace

Digest leaf_label(const Bytes& data) {
  Bytes buf;
  buf.push_back(0x00);
  append(buf, data);
  return sha256(buf);
}

MerkleTree build(const std::vector<Digest>& leaves) {
  if (leaves.empty()) throw EmptyTreeError("cannot build a tree with no leaves");
  MerkleTree tree;
  tree.leaf_labels = leaves;
  tree.leaf_count = leaves.size();

  std::vector<Digest> level = leaves;
  std::size_t padded = padded_count(leaves.size());
  for (std::uint64_t i = leaves.size(); i < padded; ++i) level.push_back(pad_digest(i));

  tree.levels.push_back(level);
  while (level.size() > 1) {
    std::vector<Digest> next(level.size() / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = internal_node(level[2 * i], level[2 * i + 1]);
    }
    tree.levels.push_back(next);
    level = std::move(next);
  }
  return tree;
}

InclusionProof prove(const MerkleTree& tree, std::size_t index) {
  if (index >= tree.leaf_count) throw IndexError("leaf index out of range");
  InclusionProof proof;
  proof.leaf_index = index;
  std::size_t node = index;
  for (std::size_t level = 0; level < tree.height(); ++level) {
    std::size_t sibling = node ^ 1;
    Side side = (sibling < node) ? Side::kLeft : Side::kRight;
    proof.path.push_back({tree.levels[level][sibling], side});
    node >>= 1;
  }
  return proof;
}

MerkleRoot recompute_root(const Digest& leaf, const InclusionProof& proof,
                          std::size_t leaf_count) {
  if (leaf_count == 0) throw EmptyTreeError("empty tree");
  if (proof.leaf_index >= leaf_count) throw IndexError("leaf index out of range");
  std::size_t padded = padded_count(leaf_count);
  std::size_t height = 0;
  while ((std::size_t{1} << height) < padded) ++height;
  if (proof.path.size() != height) throw MalformedProofError("wrong path length");

  Digest cur = leaf;
  std::size_t node = proof.leaf_index;
  for (std::size_t level = 0; level < height; ++level) {
    const PathEntry& e = proof.path[level];
    Side expected = ((node ^ 1) < node) ? Side::kLeft : Side::kRight;
    if (e.side != expected) throw MalformedProofError("side does not match index");
    cur = (e.side == Side::kLeft) ? internal_node(e.sibling, cur)
                                  : internal_node(cur, e.sibling);
    node >>= 1;
  }
  return cur;
}

namespace {

// Shared shape of the multi-proof walk: expand under any node whose subtree
// holds a disclosed leaf, derive all-padding subtrees locally, and treat every
// other node as frontier. The two callbacks differ between proving (read the
// tree, emit aux) and verifying (consume aux).
struct MultiWalk {
  const std::vector<std::size_t>* disclosed = nullptr;  // sorted
  std::size_t leaf_count = 0;

  bool subtree_has_disclosed(std::uint32_t level, std::uint64_t index) const {
    std::uint64_t lo = index << level;
    std::uint64_t hi = (index + 1) << level;
    auto it = std::lower_bound(disclosed->begin(), disclosed->end(), lo);
    return it != disclosed->end() && *it < hi;
  }

  bool subtree_all_padding(std::uint32_t level, std::uint64_t index) const {
    return (index << level) >= leaf_count;
  }
};

}  // namespace

MultiProof prove_multi(const MerkleTree& tree, const std::vector<std::size_t>& indices) {
  std::set<std::size_t> uniq(indices.begin(), indices.end());
  for (std::size_t i : uniq) {
    if (i >= tree.leaf_count) throw IndexError("leaf index out of range");
  }
  MultiProof proof;
  proof.disclosed_indices.assign(uniq.begin(), uniq.end());

  MultiWalk walk{&proof.disclosed_indices, tree.leaf_count};
  auto descend = [&](auto&& self, std::uint32_t level, std::uint64_t index) -> void {
    if (walk.subtree_has_disclosed(level, index)) {
      if (level == 0) return;  // disclosed leaf, verifier has it
      self(self, level - 1, 2 * index);
      self(self, level - 1, 2 * index + 1);
      return;
    }
    if (walk.subtree_all_padding(level, index)) return;  // derivable from the rule
    proof.auxiliary_nodes[{level, index}] = tree.levels[level][index];
  };
  descend(descend, static_cast<std::uint32_t>(tree.height()), 0);
  return proof;
}

MerkleRoot recompute_root(const std::map<std::size_t, Digest>& disclosed,
                          const MultiProof& proof, std::size_t leaf_count) {
  if (leaf_count == 0) throw EmptyTreeError("empty tree");
  if (!std::is_sorted(proof.disclosed_indices.begin(), proof.disclosed_indices.end()) ||
      std::adjacent_find(proof.disclosed_indices.begin(), proof.disclosed_indices.end()) !=
          proof.disclosed_indices.end()) {
    throw MalformedProofError("disclosed indices not sorted and unique");
  }
  if (disclosed.size() != proof.disclosed_indices.size()) {
    throw MalformedProofError("disclosed leaves do not match proof indices");
  }
  for (std::size_t i : proof.disclosed_indices) {
    if (i >= leaf_count) throw IndexError("disclosed index out of range");
    if (disclosed.find(i) == disclosed.end()) {
      throw MalformedProofError("disclosed leaves do not match proof indices");
    }
  }

  std::size_t padded = padded_count(leaf_count);
  std::uint32_t height = 0;
  while ((std::size_t{1} << height) < padded) ++height;

  MultiWalk walk{&proof.disclosed_indices, leaf_count};
  std::size_t consumed = 0;
  auto resolve = [&](auto&& self, std::uint32_t level, std::uint64_t index) -> Digest {
    if (walk.subtree_has_disclosed(level, index)) {
      if (level == 0) return disclosed.at(index);
      return internal_node(self(self, level - 1, 2 * index),
                           self(self, level - 1, 2 * index + 1));
    }
    if (walk.subtree_all_padding(level, index)) return pad_subtree(level, index);
    auto it = proof.auxiliary_nodes.find({level, index});
    if (it == proof.auxiliary_nodes.end()) {
      throw MalformedProofError("missing auxiliary node");
    }
    ++consumed;
    return it->second;
  };
  Digest root = resolve(resolve, height, 0);
  if (consumed != proof.auxiliary_nodes.size()) {
    throw MalformedProofError("superfluous auxiliary node");
  }
  return root;
}

}  // namespace sdcred::merkle
