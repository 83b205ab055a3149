#ifndef RDBE_CORPUS_HPP
#define RDBE_CORPUS_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdbe/score_grid.hpp"

namespace rdbe {

// One validated corpus row. Rubric scores sit on the 9-point grid and the
// total is exactly their sum.
struct EssayRecord {
  std::string id;
  std::string subject;
  std::string essay;
  double content_score = 0.0;
  double organization_score = 0.0;
  double language_score = 0.0;
  double total_score = 0.0;
};

// A row as loaded from disk, before validation. nullopt marks a cell that
// was absent in the file (short row); present-but-empty stays "".
struct RawRecord {
  std::string id;
  std::optional<std::string> subject;
  std::optional<std::string> essay;
  std::optional<std::string> content;
  std::optional<std::string> organization;
  std::optional<std::string> language;
  std::optional<std::string> total;
};

enum class RejectReason { absent_score, off_grid_score, total_mismatch, empty_text };
const char* to_string(RejectReason r);

struct Rejection {
  std::string id;
  RejectReason reason;
};

struct RejectionReport {
  std::vector<Rejection> rejected;
  std::size_t kept_count = 0;
};

struct CorpusSplit {
  std::vector<EssayRecord> train;
  std::vector<EssayRecord> dev;
  std::vector<EssayRecord> test;
  std::uint64_t seed = 0;
  std::array<double, 3> ratios{0.6, 0.2, 0.2};
};

// Logical field -> column name. Defaults match the header
// `prompt, essay, content, organization, language, total`.
std::map<std::string, std::string> default_column_map();

// Reads delimiter-separated rows. Columns subject/essay/content/
// organization/language must exist (Error(data) naming the first missing
// one); total is optional (recomputed later when absent); ids come from the
// mapped id column when present, else "r<ordinal>".
std::vector<RawRecord> load_corpus(
    const std::filesystem::path& path,
    const std::map<std::string, std::string>& column_map = default_column_map(),
    char delimiter = ',');

// Checks the EssayRecord invariants. Scores are compared in integer tenths
// after rounding to one decimal; a missing total is recomputed from the
// three rubric scores. Returns the first failure in the order absent-score,
// off-grid-score, total-mismatch, empty-text.
std::variant<EssayRecord, Rejection> validate_record(const RawRecord& raw);

// Keeps exactly the records passing validate_record, in input order.
std::pair<std::vector<EssayRecord>, RejectionReport> clean_corpus(
    const std::vector<RawRecord>& raws);

// Deterministic split: ids are permuted with a Fisher-Yates shuffle driven
// by std::mt19937_64(seed) (j = next() % (i + 1), descending i), then sliced
// as [train | dev | test] with dev = floor(ratios[1]*n),
// test = floor(ratios[2]*n), and train taking the remainder.
CorpusSplit split_corpus(const std::vector<EssayRecord>& records,
                         const std::array<double, 3>& ratios,
                         std::uint64_t seed);

// Gold score of one record under one of the three canonical rubric ids.
double gold_score(const EssayRecord& record, const std::string& rubric_id);

// JSON object <-> record conversions used by the cleaned-corpus artifact.
EssayRecord record_from_json(const nlohmann::json& j);
nlohmann::json record_to_json(const EssayRecord& record);

// Split manifest rows {id, split}, in split-assignment order.
std::vector<nlohmann::json> split_manifest_rows(const CorpusSplit& split);

// Rebuilds the split lists from manifest rows plus the cleaned corpus.
// Unknown ids or missing assignments are Error(data).
CorpusSplit apply_split_manifest(const std::vector<EssayRecord>& records,
                                 const std::vector<nlohmann::json>& manifest_rows);

}  // namespace rdbe

#endif
