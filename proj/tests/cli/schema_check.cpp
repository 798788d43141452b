// Validates every kind of JSON report against schemas/report.schema.json.
// The validator covers the keywords the schema uses: type, enum, required,
// properties, additionalProperties (boolean), items, oneOf and local $ref.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "recip/analysis.hpp"
#include "recip/graph_io.hpp"
#include "recip_cli/report.hpp"

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
  throw std::runtime_error("schema uses unknown type " + t);
}

class Validator {
 public:
  explicit Validator(json root) : root_(std::move(root)) {}

  // Appends one message per violation; empty means valid.
  void check(const json& v, const json& schema, const std::string& path, std::vector<std::string>& errors) const {
    if (schema.contains("$ref")) {
      check(v, resolve(schema["$ref"].get<std::string>()), path, errors);
      return;
    }
    if (schema.contains("type")) {
      const json& t = schema["type"];
      bool ok = false;
      if (t.is_string()) {
        ok = has_type(v, t);
      } else {
        for (const auto& alt : t) ok = ok || has_type(v, alt);
      }
      if (!ok) {
        errors.push_back(path + ": expected type " + t.dump() + ", got " + v.type_name());
        return;
      }
    }
    if (schema.contains("enum")) {
      bool found = false;
      for (const auto& e : schema["enum"]) found = found || e == v;
      if (!found) errors.push_back(path + ": " + v.dump() + " not in enum");
    }
    if (schema.contains("oneOf")) {
      int matches = 0;
      for (const auto& alt : schema["oneOf"]) {
        std::vector<std::string> sub;
        check(v, alt, path, sub);
        matches += sub.empty() ? 1 : 0;
      }
      if (matches != 1) errors.push_back(path + ": matches " + std::to_string(matches) + " oneOf alternatives");
    }
    if (v.is_object()) {
      for (const auto& key : schema.value("required", json::array())) {
        if (!v.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
      }
      const json props = schema.value("properties", json::object());
      for (const auto& [key, value] : v.items()) {
        if (props.contains(key)) {
          check(value, props[key], path + "." + key, errors);
        } else if (!schema.value("additionalProperties", true)) {
          errors.push_back(path + ": unexpected key " + key);
        }
      }
    }
    if (v.is_array() && schema.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], schema["items"], path + "[" + std::to_string(i) + "]", errors);
    }
  }

 private:
  const json& resolve(const std::string& ref) const {
    if (ref.rfind("#/", 0) != 0) throw std::runtime_error("only local $ref supported: " + ref);
    return root_.at(json::json_pointer(ref.substr(1)));
  }

  json root_;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: recip_schema_check SCHEMA FIXTURE_DIR\n";
    return 1;
  }
  std::ifstream in(argv[1]);
  const json schema = json::parse(in);
  const Validator validator(schema);

  recip::cli::RenderOptions json_out{recip::cli::OutputFormat::kJson, true};
  std::vector<std::pair<std::string, std::string>> documents;

  std::vector<recip::AnalysisReport> reports;
  recip::AnalysisOptions options;
  options.quadratics = true;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(argv[2])) paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) reports.push_back(recip::analyze(recip::read_graph_file(p.string()), options, p.stem().string()));
  reports.push_back(recip::analyze(recip::build_family({recip::Family::kPetersen}), options, "petersen"));
  documents.emplace_back("analysis", recip::cli::render_analyses(reports, json_out));
  documents.emplace_back("analysis without timings", recip::cli::render_analyses(reports, {recip::cli::OutputFormat::kJson, false}));

  documents.emplace_back("cycle scan", recip::cli::render_scan(recip::scan_cycle_binomials(4, recip::VertexColourings::kAll), json_out));
  documents.emplace_back("circulant scan", recip::cli::render_scan(recip::scan_circulants(10), json_out));

  std::vector<recip::FamilyVerification> verifications;
  verifications.push_back(recip::verify_family({recip::Family::kStar, 6}));
  verifications.push_back(recip::verify_family({recip::Family::kCompleteBipartite, 4, 2}));
  verifications.push_back(recip::verify_family({recip::Family::kCycle, 7}));
  documents.emplace_back("verification", recip::cli::render_verifications(verifications, json_out));

  int failures = 0;
  for (const auto& [name, text] : documents) {
    std::vector<std::string> errors;
    validator.check(json::parse(text), schema, "$", errors);
    std::cout << (errors.empty() ? "valid " : "INVALID ") << name << "\n";
    for (const auto& e : errors) std::cout << "  " << e << "\n";
    failures += errors.empty() ? 0 : 1;
  }

  // The validator must reject a document that breaks the schema.
  json broken = json::parse(documents.front().second);
  broken["items"][0]["symmetry"].erase("r");
  std::vector<std::string> errors;
  validator.check(broken, schema, "$", errors);
  if (errors.empty()) {
    std::cout << "INVALID validator accepted a report without symmetry.r\n";
    ++failures;
  }
  return failures == 0 ? 0 : 1;
}
