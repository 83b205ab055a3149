#ifndef RDBE_RUBRICS_HPP
#define RDBE_RUBRICS_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace rdbe {

// A named scoring criterion with its prose definition. The shipped default
// descriptions are placeholders: the official rubric texts are supplied by
// the user through load_registry before any full-scale run.
struct RubricSpec {
  std::string rubric_id;    // "content", "organization", "language", or custom
  std::string name;         // display string
  std::string description;  // nonempty prose definition
};

// The three canonical rubrics with placeholder descriptions, parsed from the
// packaged default configuration.
std::vector<RubricSpec> default_registry();

// Loads a JSON registry file {"rubrics": [{rubric_id, name, description}]}.
// Entries with known ids replace the defaults in place; new ids extend the
// registry. Duplicate ids within the file and empty descriptions are errors.
std::vector<RubricSpec> load_registry(const std::filesystem::path& path);

// The packaged default registry as JSON text (also shipped at
// configs/rubrics.default.json for editing).
const std::string& default_registry_json();

// Looks up a rubric by id; throws Error(data) when absent.
const RubricSpec& find_rubric(const std::vector<RubricSpec>& registry,
                              const std::string& rubric_id);

}  // namespace rdbe

#endif
