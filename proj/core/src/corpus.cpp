#include "rdbe/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "rdbe/csv.hpp"
#include "rdbe/errors.hpp"

namespace rdbe {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Absent, NaN-ish, or unparseable cells all count as "no score".
std::optional<double> parse_score_cell(const std::optional<std::string>& cell) {
  if (!cell) return std::nullopt;
  std::string t = trim(*cell);
  if (t.empty()) return std::nullopt;
  std::string lt = lower(t);
  if (lt == "nan" || lt == "na" || lt == "n/a" || lt == "null") return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

bool on_rubric_grid_tenths(long tenths) {
  return tenths >= 10 && tenths <= 50 && tenths % 5 == 0;
}

}  // namespace

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::absent_score: return "absent-score";
    case RejectReason::off_grid_score: return "off-grid-score";
    case RejectReason::total_mismatch: return "total-mismatch";
    case RejectReason::empty_text: return "empty-text";
  }
  return "unknown";
}

std::map<std::string, std::string> default_column_map() {
  return {{"id", "id"},
          {"subject", "prompt"},
          {"essay", "essay"},
          {"content", "content"},
          {"organization", "organization"},
          {"language", "language"},
          {"total", "total"}};
}

std::vector<RawRecord> load_corpus(
    const std::filesystem::path& path,
    const std::map<std::string, std::string>& column_map, char delimiter) {
  CsvTable table = read_csv(path, delimiter);
  if (table.header.empty()) {
    throw Error(ErrorCategory::data, path.string() + ": empty file, header expected");
  }

  std::map<std::string, std::string> cmap = default_column_map();
  for (const auto& [k, v] : column_map) cmap[k] = v;

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < table.header.size(); ++i) index[table.header[i]] = i;

  auto column_of = [&](const std::string& field,
                       bool required) -> std::optional<std::size_t> {
    auto it = index.find(cmap.at(field));
    if (it == index.end()) {
      if (required) {
        throw Error(ErrorCategory::data, path.string() + ": missing column '" +
                                             cmap.at(field) + "' (field " +
                                             field + ")");
      }
      return std::nullopt;
    }
    return it->second;
  };

  std::size_t subject_col = *column_of("subject", true);
  std::size_t essay_col = *column_of("essay", true);
  std::size_t content_col = *column_of("content", true);
  std::size_t organization_col = *column_of("organization", true);
  std::size_t language_col = *column_of("language", true);
  std::optional<std::size_t> total_col = column_of("total", false);
  std::optional<std::size_t> id_col = column_of("id", false);

  auto cell = [](const std::vector<std::string>& row,
                 std::size_t col) -> std::optional<std::string> {
    if (col >= row.size()) return std::nullopt;
    return row[col];
  };

  std::vector<RawRecord> out;
  out.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    RawRecord raw;
    if (id_col && *id_col < row.size() && !trim(row[*id_col]).empty()) {
      raw.id = trim(row[*id_col]);
    } else {
      char buf[24];
      std::snprintf(buf, sizeof(buf), "r%06zu", i + 1);
      raw.id = buf;
    }
    raw.subject = cell(row, subject_col);
    raw.essay = cell(row, essay_col);
    raw.content = cell(row, content_col);
    raw.organization = cell(row, organization_col);
    raw.language = cell(row, language_col);
    if (total_col) raw.total = cell(row, *total_col);
    out.push_back(std::move(raw));
  }
  return out;
}

std::variant<EssayRecord, Rejection> validate_record(const RawRecord& raw) {
  auto reject = [&](RejectReason r) -> std::variant<EssayRecord, Rejection> {
    return Rejection{raw.id, r};
  };

  std::optional<double> content = parse_score_cell(raw.content);
  std::optional<double> organization = parse_score_cell(raw.organization);
  std::optional<double> language = parse_score_cell(raw.language);
  if (!content || !organization || !language) {
    return reject(RejectReason::absent_score);
  }

  // One-decimal rounding first, then grid membership and the total check,
  // all in integer tenths.
  long ct = score_to_tenths(*content);
  long ot = score_to_tenths(*organization);
  long lt = score_to_tenths(*language);
  if (!on_rubric_grid_tenths(ct) || !on_rubric_grid_tenths(ot) ||
      !on_rubric_grid_tenths(lt)) {
    return reject(RejectReason::off_grid_score);
  }

  long sum_t = ct + ot + lt;
  if (raw.total) {
    std::optional<double> total = parse_score_cell(raw.total);
    // An unreadable total is treated like an absent one and recomputed; the
    // dataset's own total column is redundant with the three scores.
    if (total && score_to_tenths(*total) != sum_t) {
      return reject(RejectReason::total_mismatch);
    }
  }

  std::string subject = raw.subject ? trim(*raw.subject) : "";
  std::string essay_trim = raw.essay ? trim(*raw.essay) : "";
  if (subject.empty() || essay_trim.empty()) {
    return reject(RejectReason::empty_text);
  }

  EssayRecord rec;
  rec.id = raw.id;
  rec.subject = *raw.subject;
  rec.essay = *raw.essay;
  rec.content_score = static_cast<double>(ct) / 10.0;
  rec.organization_score = static_cast<double>(ot) / 10.0;
  rec.language_score = static_cast<double>(lt) / 10.0;
  rec.total_score = static_cast<double>(sum_t) / 10.0;
  return rec;
}

std::pair<std::vector<EssayRecord>, RejectionReport> clean_corpus(
    const std::vector<RawRecord>& raws) {
  std::vector<EssayRecord> kept;
  RejectionReport report;
  for (const auto& raw : raws) {
    auto result = validate_record(raw);
    if (std::holds_alternative<EssayRecord>(result)) {
      kept.push_back(std::get<EssayRecord>(std::move(result)));
    } else {
      report.rejected.push_back(std::get<Rejection>(std::move(result)));
    }
  }
  report.kept_count = kept.size();
  return {std::move(kept), std::move(report)};
}

CorpusSplit split_corpus(const std::vector<EssayRecord>& records,
                         const std::array<double, 3>& ratios,
                         std::uint64_t seed) {
  if (records.empty()) {
    throw Error(ErrorCategory::data, "split_corpus: empty corpus");
  }
  double sum = ratios[0] + ratios[1] + ratios[2];
  if (std::fabs(sum - 1.0) > 1e-9 || ratios[0] < 0 || ratios[1] < 0 || ratios[2] < 0) {
    throw Error(ErrorCategory::data, "split_corpus: ratios must be >= 0 and sum to 1");
  }

  std::size_t n = records.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  // Pinned permutation: mt19937_64 + descending Fisher-Yates with a modulo
  // draw. std::shuffle is deliberately avoided (implementation-defined).
  std::mt19937_64 gen(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(gen() % (i + 1));
    std::swap(order[i], order[j]);
  }

  // The 1e-9 nudge keeps exact-intent products like 0.3*10 from flooring low.
  auto floor_of = [n](double r) {
    return static_cast<std::size_t>(std::floor(r * static_cast<double>(n) + 1e-9));
  };
  std::size_t n_dev = floor_of(ratios[1]);
  std::size_t n_test = floor_of(ratios[2]);
  if (n_dev + n_test > n) {
    throw Error(ErrorCategory::data, "split_corpus: dev+test exceed corpus size");
  }
  std::size_t n_train = n - n_dev - n_test;

  CorpusSplit split;
  split.seed = seed;
  split.ratios = ratios;
  split.train.reserve(n_train);
  split.dev.reserve(n_dev);
  split.test.reserve(n_test);
  for (std::size_t i = 0; i < n; ++i) {
    const EssayRecord& rec = records[order[i]];
    if (i < n_train) {
      split.train.push_back(rec);
    } else if (i < n_train + n_dev) {
      split.dev.push_back(rec);
    } else {
      split.test.push_back(rec);
    }
  }
  return split;
}

double gold_score(const EssayRecord& record, const std::string& rubric_id) {
  if (rubric_id == "content") return record.content_score;
  if (rubric_id == "organization") return record.organization_score;
  if (rubric_id == "language") return record.language_score;
  throw Error(ErrorCategory::data,
              "record " + record.id + " has no gold score for rubric '" +
                  rubric_id + "'");
}

EssayRecord record_from_json(const nlohmann::json& j) {
  EssayRecord rec;
  rec.id = j.at("id").get<std::string>();
  rec.subject = j.at("subject").get<std::string>();
  rec.essay = j.at("essay").get<std::string>();
  rec.content_score = j.at("content").get<double>();
  rec.organization_score = j.at("organization").get<double>();
  rec.language_score = j.at("language").get<double>();
  rec.total_score = j.at("total").get<double>();
  return rec;
}

nlohmann::json record_to_json(const EssayRecord& record) {
  return nlohmann::json{{"id", record.id},
                        {"subject", record.subject},
                        {"essay", record.essay},
                        {"content", record.content_score},
                        {"organization", record.organization_score},
                        {"language", record.language_score},
                        {"total", record.total_score}};
}

std::vector<nlohmann::json> split_manifest_rows(const CorpusSplit& split) {
  std::vector<nlohmann::json> rows;
  rows.reserve(split.train.size() + split.dev.size() + split.test.size());
  auto emit = [&rows](const std::vector<EssayRecord>& recs, const char* name) {
    for (const auto& r : recs) rows.push_back({{"id", r.id}, {"split", name}});
  };
  emit(split.train, "train");
  emit(split.dev, "dev");
  emit(split.test, "test");
  return rows;
}

CorpusSplit apply_split_manifest(const std::vector<EssayRecord>& records,
                                 const std::vector<nlohmann::json>& manifest_rows) {
  std::unordered_map<std::string, const EssayRecord*> by_id;
  for (const auto& r : records) by_id[r.id] = &r;

  CorpusSplit split;
  std::size_t assigned = 0;
  for (const auto& row : manifest_rows) {
    std::string id = row.at("id").get<std::string>();
    std::string which = row.at("split").get<std::string>();
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      throw Error(ErrorCategory::data, "split manifest id not in corpus: " + id);
    }
    ++assigned;
    if (which == "train") {
      split.train.push_back(*it->second);
    } else if (which == "dev") {
      split.dev.push_back(*it->second);
    } else if (which == "test") {
      split.test.push_back(*it->second);
    } else {
      throw Error(ErrorCategory::data, "split manifest: unknown split '" + which + "'");
    }
  }
  if (assigned != records.size()) {
    throw Error(ErrorCategory::data,
                "split manifest covers " + std::to_string(assigned) + " of " +
                    std::to_string(records.size()) + " records");
  }
  return split;
}

}  // namespace rdbe
