#ifndef MNAT_TESTS_SCHEMA_CHECK_HPP
#define MNAT_TESTS_SCHEMA_CHECK_HPP

// Just enough of JSON Schema to enforce the documents under schemas/:
// type, required, properties, items, enum, and $ref (local definitions
// and whole-file references).

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace mnat_tests {

class SchemaSet {
 public:
  explicit SchemaSet(const std::string& dir) {
    for (const char* name :
         {"function.schema.json", "axiom_report.schema.json",
          "projected_axiom_report.schema.json", "descent_trace.schema.json",
          "reduction_state.schema.json", "minimize_result.schema.json",
          "theorem_verdict.schema.json", "audit_report.schema.json"}) {
      std::ifstream in(dir + "/" + name);
      std::ostringstream buf;
      buf << in.rdbuf();
      schemas_[name] = nlohmann::json::parse(buf.str());
    }
  }

  bool validate(const std::string& schema_name,
                const nlohmann::json& instance, std::string* error) const {
    const nlohmann::json& root = schemas_.at(schema_name);
    return check(root, root, instance, schema_name, error);
  }

 private:
  static bool type_matches(const std::string& type,
                           const nlohmann::json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "boolean") return v.is_boolean();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    return false;
  }

  bool fail(std::string* error, const std::string& where,
            const std::string& what) const {
    if (error != nullptr) *error = where + ": " + what;
    return false;
  }

  bool check(const nlohmann::json& root, const nlohmann::json& schema,
             const nlohmann::json& v, const std::string& where,
             std::string* error) const {
    if (schema.contains("$ref")) {
      std::string ref = schema["$ref"].get<std::string>();
      if (ref.rfind("#/definitions/", 0) == 0) {
        const nlohmann::json& target =
            root.at("definitions").at(ref.substr(14));
        return check(root, target, v, where, error);
      }
      const nlohmann::json& other = schemas_.at(ref);
      return check(other, other, v, where, error);
    }
    if (schema.contains("type")) {
      const nlohmann::json& t = schema["type"];
      bool ok = false;
      if (t.is_string()) {
        ok = type_matches(t.get<std::string>(), v);
      } else {
        for (const auto& option : t) {
          if (type_matches(option.get<std::string>(), v)) ok = true;
        }
      }
      if (!ok) return fail(error, where, "type mismatch: " + v.dump());
    }
    if (schema.contains("enum")) {
      bool ok = false;
      for (const auto& option : schema["enum"]) {
        if (option == v) ok = true;
      }
      if (!ok) return fail(error, where, "not in enum: " + v.dump());
    }
    if (schema.contains("minimum") && v.is_number()) {
      if (v.get<double>() < schema["minimum"].get<double>()) {
        return fail(error, where, "below minimum: " + v.dump());
      }
    }
    if (schema.contains("required") && v.is_object()) {
      for (const auto& key : schema["required"]) {
        if (!v.contains(key.get<std::string>())) {
          return fail(error, where,
                      "missing required field '" + key.get<std::string>() +
                          "'");
        }
      }
    }
    if (schema.contains("properties") && v.is_object()) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (v.contains(key)) {
          if (!check(root, sub, v.at(key), where + "." + key, error)) {
            return false;
          }
        }
      }
    }
    if (schema.contains("items") && v.is_array()) {
      size_t idx = 0;
      for (const auto& element : v) {
        if (!check(root, schema["items"], element,
                   where + "[" + std::to_string(idx) + "]", error)) {
          return false;
        }
        ++idx;
      }
    }
    return true;
  }

  std::map<std::string, nlohmann::json> schemas_;
};

}  // namespace mnat_tests

#endif  // MNAT_TESTS_SCHEMA_CHECK_HPP
