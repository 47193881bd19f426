#include "sdcred/format.h"

#include <set>

#include "jsonio.h"
#include "sdcred/errors.h"

namespace sdcred {

void CredentialFormat::validate() const {
  if (format_id.empty()) throw FormatError("format id is empty");
  if (fields.empty()) throw FormatError("format has no fields");
  std::set<std::string> seen;
  for (const FieldSpec& f : fields) {
    if (f.name.empty()) throw FormatError("field name is empty");
    if (!seen.insert(f.name).second) {
      throw FormatError("duplicate field name: " + f.name);
    }
    if (f.range_hint && f.type != AttributeType::kInt) {
      throw FormatError("range hint on non-integer field: " + f.name);
    }
  }
}

std::optional<std::size_t> CredentialFormat::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].name == name) return i;
  }
  return std::nullopt;
}

std::string format_to_json(const CredentialFormat& format) {
  jsonio::Json j;
  j["format_id"] = format.format_id;
  jsonio::Json fields = jsonio::Json::array();
  for (const FieldSpec& f : format.fields) {
    jsonio::Json e;
    e["name"] = f.name;
    e["type"] = f.type == AttributeType::kInt ? "int" : "text";
    if (f.range_hint) {
      jsonio::Json h;
      h["lo"] = f.range_hint->lo;
      h["hi"] = f.range_hint->hi;
      h["bits"] = f.range_hint->bits;
      e["range_hint"] = std::move(h);
    }
    fields.push_back(std::move(e));
  }
  j["fields"] = std::move(fields);
  return j.dump();
}

CredentialFormat format_from_json(const std::string& text) {
  jsonio::Json j = jsonio::parse(text);
  jsonio::expect_keys(j, "format", {"fields", "format_id"});
  CredentialFormat format;
  format.format_id = jsonio::str_field(j, "format_id");
  for (const jsonio::Json& e : jsonio::array_field(j, "fields")) {
    jsonio::expect_keys(e, "field", {"name", "type"}, {"range_hint"});
    FieldSpec f;
    f.name = jsonio::str_field(e, "name");
    std::string type = jsonio::str_field(e, "type");
    if (type == "int") {
      f.type = AttributeType::kInt;
    } else if (type == "text") {
      f.type = AttributeType::kText;
    } else {
      throw DecodeError("unknown field type: " + type);
    }
    if (e.contains("range_hint")) {
      const jsonio::Json& h = jsonio::field(e, "range_hint");
      jsonio::expect_keys(h, "range hint", {"bits", "hi", "lo"});
      f.range_hint = RangeHint{jsonio::u64_field(h, "lo"), jsonio::u64_field(h, "hi"),
                               jsonio::u32_field(h, "bits")};
    }
    format.fields.push_back(std::move(f));
  }
  return format;
}

}  // namespace sdcred
