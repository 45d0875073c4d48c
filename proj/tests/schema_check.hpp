#pragma once

// A small JSON Schema subset: type, required, properties, items, enum,
// pattern and minimum. Enough for docs/report.schema.json.

#include <regex>
#include <string>
#include <vector>

#include "json.hpp"

namespace apery::testing {

inline bool has_type(const nlohmann::json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

inline void validate(const nlohmann::json& v, const nlohmann::json& schema, const std::string& path,
                     std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = has_type(v, t.get<std::string>());
    } else {
      for (const auto& alt : t) ok = ok || has_type(v, alt.get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": expected type " + t.dump() + ", got " + v.type_name());
      return;
    }
  }
  if (v.is_null()) return;
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": value " + v.dump() + " not in enum");
  }
  if (schema.contains("pattern") && v.is_string() &&
      !std::regex_search(v.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
    errors.push_back(path + ": '" + v.get<std::string>() + "' does not match " + schema["pattern"].dump());
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>())
    errors.push_back(path + ": below minimum");
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!v.contains(k.get<std::string>())) errors.push_back(path + ": missing '" + k.get<std::string>() + "'");
    if (schema.contains("properties"))
      for (const auto& [k, sub] : schema["properties"].items())
        if (v.contains(k)) validate(v[k], sub, path + "." + k, errors);
  }
  if (v.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i)
      validate(v[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
}

inline std::vector<std::string> validate(const nlohmann::json& v, const nlohmann::json& schema) {
  std::vector<std::string> errors;
  validate(v, schema, "$", errors);
  return errors;
}

}  // namespace apery::testing
