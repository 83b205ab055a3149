#ifndef RDBE_JSONL_HPP
#define RDBE_JSONL_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rdbe {

using json = nlohmann::json;

// Every pipeline artifact is a JSONL file whose first line is a meta record
// {"type":"meta", command, config_hash, version, created_at}. Reruns with
// unchanged inputs reproduce the data lines byte for byte; only
// meta.created_at may differ.
struct ArtifactMeta {
  std::string command;
  std::string config_hash;
  std::string version;
  std::string created_at;

  json to_json() const;
  static ArtifactMeta from_json(const json& j);
};

struct JsonlFile {
  std::optional<ArtifactMeta> meta;
  std::vector<json> rows;
};

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

// Writes rows (with optional meta first line) atomically: the file appears
// complete or not at all.
void write_jsonl(const std::filesystem::path& path,
                 const std::optional<ArtifactMeta>& meta,
                 const std::vector<json>& rows);

JsonlFile read_jsonl(const std::filesystem::path& path);

// SHA-256 over the data lines only; meta (and its timestamp) is excluded.
std::string content_digest(const JsonlFile& file);

// Writes `data` to a temp file in the target directory, then renames.
void atomic_write_file(const std::filesystem::path& path, const std::string& data);

}  // namespace rdbe

#endif
