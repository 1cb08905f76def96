#pragma once

// Minimal structural JSON-Schema validator covering the subset the shipped
// report schema uses: type (incl. unions), required, properties,
// additionalProperties, items, enum, minimum and local $ref.

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool matches_type(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "number") return value.is_number();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "null") return value.is_null();
    if (type == "boolean") return value.is_boolean();
    throw std::runtime_error("schema: unsupported type " + type);
}

inline const json& resolve_ref(const json& root, const std::string& ref) {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("schema: unsupported $ref " + ref);
    return root.at("definitions").at(ref.substr(prefix.size()));
}

inline void validate(const json& root, const json& schema, const json& value,
                     const std::string& where) {
    if (schema.contains("$ref")) {
        validate(root, resolve_ref(root, schema.at("$ref").get<std::string>()), value, where);
        return;
    }
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) {
            ok = matches_type(value, t.get<std::string>());
        } else {
            for (const json& alt : t) ok = ok || matches_type(value, alt.get<std::string>());
        }
        if (!ok) throw std::runtime_error(where + ": type mismatch");
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const json& candidate : schema.at("enum")) ok = ok || candidate == value;
        if (!ok) throw std::runtime_error(where + ": not in enum");
    }
    if (schema.contains("minimum") && value.is_number()) {
        if (value.get<double>() < schema.at("minimum").get<double>()) {
            throw std::runtime_error(where + ": below minimum");
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const json& key : schema.at("required")) {
                if (!value.contains(key.get<std::string>())) {
                    throw std::runtime_error(where + ": missing required field " +
                                             key.get<std::string>());
                }
            }
        }
        if (schema.contains("properties")) {
            for (const auto& [key, sub] : schema.at("properties").items()) {
                if (value.contains(key)) validate(root, sub, value.at(key), where + "." + key);
            }
        }
        if (schema.contains("additionalProperties") &&
            schema.at("additionalProperties").is_object()) {
            const json& props =
                schema.contains("properties") ? schema.at("properties") : json::object();
            for (const auto& [key, sub] : value.items()) {
                if (!props.contains(key)) {
                    validate(root, schema.at("additionalProperties"), sub, where + "." + key);
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t index = 0;
        for (const json& element : value) {
            validate(root, schema.at("items"), element, where + "[" + std::to_string(index) + "]");
            ++index;
        }
    }
}

inline void validate_document(const json& schema, const json& value) {
    validate(schema, schema, value, "$");
}

}  // namespace schema_check
