#include "rdbe/rubrics.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rdbe/errors.hpp"

namespace rdbe {

namespace {

// Kept byte-identical to configs/rubrics.default.json (a unit test enforces
// the sync). Descriptions are stand-ins; real runs load the official texts.
const char* kDefaultRegistryJson = R"({
  "rubrics": [
    {
      "rubric_id": "content",
      "name": "Content",
      "description": "Placeholder rubric text. Assesses whether the essay addresses the given subject with relevant, well-developed ideas and concrete supporting detail. Replace with the official content rubric before full-scale runs."
    },
    {
      "rubric_id": "organization",
      "name": "Organization",
      "description": "Placeholder rubric text. Assesses the logical structure of the essay: clear introduction, body, and conclusion, coherent paragraphing, and effective transitions. Replace with the official organization rubric before full-scale runs."
    },
    {
      "rubric_id": "language",
      "name": "Language",
      "description": "Placeholder rubric text. Assesses grammatical accuracy, range and precision of vocabulary, sentence variety, and mechanics. Replace with the official language rubric before full-scale runs."
    }
  ]
}
)";

std::vector<RubricSpec> parse_registry_json(const nlohmann::json& doc,
                                            const std::string& origin) {
  if (!doc.is_object() || !doc.contains("rubrics") || !doc["rubrics"].is_array()) {
    throw Error(ErrorCategory::config,
                origin + ": expected {\"rubrics\": [...]}");
  }
  std::vector<RubricSpec> out;
  std::set<std::string> seen;
  for (const auto& entry : doc["rubrics"]) {
    RubricSpec spec;
    spec.rubric_id = entry.value("rubric_id", "");
    spec.name = entry.value("name", spec.rubric_id);
    spec.description = entry.value("description", "");
    if (spec.rubric_id.empty()) {
      throw Error(ErrorCategory::config, origin + ": rubric_id missing");
    }
    if (!seen.insert(spec.rubric_id).second) {
      throw Error(ErrorCategory::config,
                  origin + ": duplicate rubric_id '" + spec.rubric_id + "'");
    }
    if (spec.description.empty()) {
      throw Error(ErrorCategory::config,
                  origin + ": empty description for '" + spec.rubric_id + "'");
    }
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace

const std::string& default_registry_json() {
  static const std::string text = kDefaultRegistryJson;
  return text;
}

std::vector<RubricSpec> default_registry() {
  return parse_registry_json(nlohmann::json::parse(default_registry_json()),
                             "default registry");
}

std::vector<RubricSpec> load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCategory::io, "cannot read registry: " + path.string());
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCategory::config,
                path.string() + ": registry parse error: " + e.what());
  }
  std::vector<RubricSpec> loaded = parse_registry_json(doc, path.string());

  // Known ids replace the default entry in place; new ids append.
  std::vector<RubricSpec> registry = default_registry();
  for (auto& spec : loaded) {
    bool replaced = false;
    for (auto& existing : registry) {
      if (existing.rubric_id == spec.rubric_id) {
        existing = spec;
        replaced = true;
        break;
      }
    }
    if (!replaced) registry.push_back(std::move(spec));
  }
  return registry;
}

const RubricSpec& find_rubric(const std::vector<RubricSpec>& registry,
                              const std::string& rubric_id) {
  for (const auto& spec : registry) {
    if (spec.rubric_id == rubric_id) return spec;
  }
  throw Error(ErrorCategory::data, "unknown rubric_id: " + rubric_id);
}

}  // namespace rdbe
