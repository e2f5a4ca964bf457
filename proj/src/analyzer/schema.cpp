#include "badred/analyzer/analyzer.hpp"

namespace badred {

extern const char* const kReportSchemaText;

namespace {

using nlohmann::json;

bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  void check(const json& v, const json& s, const std::string& path, std::vector<std::string>& out) const {
    if (s.contains("$ref")) {
      check(v, resolve(s["$ref"].get<std::string>()), path, out);
      return;
    }
    if (s.contains("anyOf")) {
      bool ok = false;
      for (auto& alt : s["anyOf"]) {
        std::vector<std::string> tmp;
        check(v, alt, path, tmp);
        if (tmp.empty()) {
          ok = true;
          break;
        }
      }
      if (!ok) out.push_back(path + ": matches no alternative");
      return;
    }
    if (s.contains("type")) {
      bool ok = false;
      if (s["type"].is_array()) {
        for (auto& t : s["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, s["type"].get<std::string>());
      }
      if (!ok) {
        out.push_back(path + ": expected type " + s["type"].dump());
        return;
      }
    }
    if (s.contains("const") && v != s["const"]) out.push_back(path + ": expected " + s["const"].dump());
    if (s.contains("enum")) {
      bool ok = false;
      for (auto& e : s["enum"]) ok = ok || v == e;
      if (!ok) out.push_back(path + ": " + v.dump() + " not in " + s["enum"].dump());
    }
    if (v.is_object()) {
      if (s.contains("required"))
        for (auto& k : s["required"])
          if (!v.contains(k.get<std::string>())) out.push_back(path + ": missing " + k.get<std::string>());
      const json* props = s.contains("properties") ? &s["properties"] : nullptr;
      for (auto& [k, x] : v.items()) {
        if (props && props->contains(k))
          check(x, (*props)[k], path + "/" + k, out);
        else if (s.value("additionalProperties", true) == false)
          out.push_back(path + ": unexpected key " + k);
      }
    }
    if (v.is_array()) {
      if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) out.push_back(path + ": too few items");
      if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>())
        out.push_back(path + ": too many items");
      if (s.contains("items"))
        for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "/" + std::to_string(i), out);
    }
  }

 private:
  const json& resolve(const std::string& ref) const {
    if (ref.rfind("#/", 0) != 0) throw Error(ErrorCode::InvalidInput, "unsupported $ref " + ref);
    return root_.at(json::json_pointer(ref.substr(1)));
  }
  const json& root_;
};

}  // namespace

std::vector<std::string> validate_json(const nlohmann::json& doc, const nlohmann::json& schema) {
  std::vector<std::string> out;
  Validator(schema).check(doc, schema, "", out);
  return out;
}

const nlohmann::json& report_schema() {
  static const nlohmann::json s = nlohmann::json::parse(kReportSchemaText);
  return s;
}

}  // namespace badred
