#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdcred {

enum class AttributeType : std::uint8_t { kInt, kText };

// Suggested presentation bounds for an integer attribute. Advisory only: the
// proved range comes from the disclosure request, not from here.
struct RangeHint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint32_t bits = 0;

  bool operator==(const RangeHint&) const = default;
};

struct FieldSpec {
  std::string name;
  AttributeType type = AttributeType::kText;
  std::optional<RangeHint> range_hint;

  bool operator==(const FieldSpec&) const = default;
};

// Field order is normative: it fixes the Merkle leaf position of every
// attribute, so two parties holding the same format agree on the tree layout.
struct CredentialFormat {
  std::string format_id;
  std::vector<FieldSpec> fields;

  // Throws FormatError on an empty id, no fields, or a duplicate field name.
  void validate() const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const CredentialFormat&) const = default;
};

// Canonical standalone JSON: {"fields":[{"name","range_hint"?,"type"}],"format_id"}.
// from_json throws DecodeError; it parses, it does not validate().
std::string format_to_json(const CredentialFormat& format);
CredentialFormat format_from_json(const std::string& text);

}  // namespace sdcred
