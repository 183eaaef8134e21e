#pragma once

// Just enough JSON Schema to check our own result files: type, const, enum,
// required, properties, items, minItems, minimum, allOf, if/then, and local
// "#/$defs/..." references.

#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    return false;
}

class Validator {
  public:
    explicit Validator(json root) : root_(std::move(root)) {}

    std::vector<std::string> validate(const json& doc) const {
        std::vector<std::string> errors;
        check(doc, root_, "$", errors);
        return errors;
    }

  private:
    const json& resolve(const json& schema) const {
        if (schema.is_object() && schema.contains("$ref")) {
            const std::string ref = schema["$ref"];
            const std::string prefix = "#/$defs/";
            if (ref.rfind(prefix, 0) == 0) return root_.at("$defs").at(ref.substr(prefix.size()));
        }
        return schema;
    }

    void check(const json& v, const json& raw, const std::string& at, std::vector<std::string>& errors) const {
        const json& s = resolve(raw);
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"]) ok = ok || type_matches(v, t.get<std::string>());
            } else {
                ok = type_matches(v, s["type"].get<std::string>());
            }
            if (!ok) {
                errors.push_back(at + ": expected type " + s["type"].dump());
                return;
            }
        }
        if (s.contains("const") && v != s["const"]) errors.push_back(at + ": expected " + s["const"].dump());
        if (s.contains("enum")) {
            bool found = false;
            for (const auto& e : s["enum"]) found = found || e == v;
            if (!found) errors.push_back(at + ": not one of " + s["enum"].dump());
        }
        if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) {
            errors.push_back(at + ": below minimum");
        }
        if (v.is_object()) {
            if (s.contains("required")) {
                for (const auto& r : s["required"]) {
                    if (!v.contains(r.get<std::string>())) errors.push_back(at + ": missing " + r.dump());
                }
            }
            if (s.contains("properties")) {
                for (const auto& [key, sub] : s["properties"].items()) {
                    if (v.contains(key)) check(v[key], sub, at + "." + key, errors);
                }
            }
        }
        if (v.is_array()) {
            if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) {
                errors.push_back(at + ": too few items");
            }
            if (s.contains("items")) {
                for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], at + "[" + std::to_string(i) + "]", errors);
            }
        }
        if (s.contains("allOf")) {
            for (const auto& sub : s["allOf"]) check(v, sub, at, errors);
        }
        if (s.contains("if") && s.contains("then")) {
            std::vector<std::string> cond;
            check(v, s["if"], at, cond);
            if (cond.empty()) check(v, s["then"], at, errors);
        }
    }

    json root_;
};

}  // namespace schema_check
