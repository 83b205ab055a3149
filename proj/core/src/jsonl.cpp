#include "rdbe/jsonl.hpp"

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "rdbe/errors.hpp"
#include "rdbe/hash.hpp"

namespace rdbe {

json ArtifactMeta::to_json() const {
  return json{{"type", "meta"},
              {"command", command},
              {"config_hash", config_hash},
              {"version", version},
              {"created_at", created_at}};
}

ArtifactMeta ArtifactMeta::from_json(const json& j) {
  ArtifactMeta m;
  m.command = j.value("command", "");
  m.config_hash = j.value("config_hash", "");
  m.version = j.value("version", "");
  m.created_at = j.value("created_at", "");
  return m;
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& data) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());

  static std::atomic<unsigned> counter{0};
  std::ostringstream tmp_name;
  tmp_name << "." << path.filename().string() << ".tmp-" << ::getpid() << "-"
           << counter.fetch_add(1);
  fs::path tmp = path.has_parent_path() ? path.parent_path() / tmp_name.str()
                                        : fs::path(tmp_name.str());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCategory::io, "cannot open for write: " + tmp.string());
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) {
      throw Error(ErrorCategory::io, "short write: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCategory::io, "rename failed for " + path.string());
  }
}

void write_jsonl(const std::filesystem::path& path,
                 const std::optional<ArtifactMeta>& meta,
                 const std::vector<json>& rows) {
  std::ostringstream out;
  if (meta) out << meta->to_json().dump() << "\n";
  for (const auto& row : rows) out << row.dump() << "\n";
  atomic_write_file(path, out.str());
}

JsonlFile read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCategory::io, "cannot read: " + path.string());
  }
  JsonlFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCategory::data, path.string() + ":" +
                                           std::to_string(lineno) +
                                           ": bad JSON line: " + e.what());
    }
    if (lineno == 1 && j.is_object() && j.value("type", "") == "meta") {
      file.meta = ArtifactMeta::from_json(j);
    } else {
      file.rows.push_back(std::move(j));
    }
  }
  return file;
}

std::string content_digest(const JsonlFile& file) {
  std::ostringstream out;
  for (const auto& row : file.rows) out << row.dump() << "\n";
  return sha256_hex(out.str());
}

}  // namespace rdbe
