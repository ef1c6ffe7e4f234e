#pragma once
#include <cstddef>
#include <regex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

/* Minimal draft-07 subset validator covering exactly the keywords the
   schemas under schemas/ use: type (single or union), enum, required,
   properties, patternProperties, additionalProperties, items, minimum,
   minLength. Returns human-readable violations; empty means valid. */

namespace obk::testsupport {

inline bool type_matches(const std::string& t, const nlohmann::json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

inline void check_schema(const nlohmann::json& schema, const nlohmann::json& v,
                         const std::string& path, std::vector<std::string>& out) {
    if (schema.contains("type")) {
        const auto& t = schema.at("type");
        bool ok = false;
        if (t.is_string())
            ok = type_matches(t.get<std::string>(), v);
        else
            for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), v);
        if (!ok) {
            out.push_back(path + ": type mismatch");
            return;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema.at("enum")) ok = ok || (e == v);
        if (!ok) out.push_back(path + ": not one of the enum values");
    }
    if (v.is_string() && schema.contains("minLength") &&
        v.get<std::string>().size() < schema.at("minLength").get<std::size_t>())
        out.push_back(path + ": shorter than minLength");
    if (v.is_number() && schema.contains("minimum") &&
        v.get<double>() < schema.at("minimum").get<double>())
        out.push_back(path + ": below minimum");
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!v.contains(key.get<std::string>()))
                    out.push_back(path + ": missing required \"" + key.get<std::string>() + "\"");
        for (const auto& [key, val] : v.items()) {
            bool described = false;
            if (schema.contains("properties") && schema.at("properties").contains(key)) {
                described = true;
                check_schema(schema.at("properties").at(key), val, path + "." + key, out);
            }
            if (schema.contains("patternProperties"))
                for (const auto& [pat, sub] : schema.at("patternProperties").items())
                    if (std::regex_search(key, std::regex(pat))) {
                        described = true;
                        check_schema(sub, val, path + "." + key, out);
                    }
            if (!described && schema.contains("additionalProperties") &&
                schema.at("additionalProperties").is_boolean() &&
                !schema.at("additionalProperties").get<bool>())
                out.push_back(path + ": unexpected property \"" + key + "\"");
        }
    }
    if (v.is_array() && schema.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i)
            check_schema(schema.at("items"), v[i], path + "[" + std::to_string(i) + "]", out);
}

inline std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                                  const nlohmann::json& v) {
    std::vector<std::string> out;
    check_schema(schema, v, "$", out);
    return out;
}

} // namespace obk::testsupport
