#include "rdbe/csv.hpp"

#include <fstream>
#include <sstream>

#include "rdbe/errors.hpp"

namespace rdbe {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CsvTable parse_csv(const std::string& text, char delimiter) {
  CsvTable table;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_has_data = false;
  bool header_done = false;

  auto end_field = [&] {
    row.push_back(field);
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    if (!header_done) {
      // Header cell names are trimmed; data cells are kept verbatim.
      for (auto& h : row) h = trim(h);
      table.header = row;
      header_done = true;
    } else {
      table.rows.push_back(row);
    }
    row.clear();
    row_has_data = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      row_has_data = true;
    } else if (c == delimiter) {
      end_field();
      row_has_data = true;
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      if (row_has_data || !field.empty() || !row.empty()) end_row();
    } else {
      field.push_back(c);
      row_has_data = true;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCategory::data, "csv: unterminated quoted field");
  }
  if (row_has_data || !field.empty() || !row.empty()) end_row();
  return table;
}

CsvTable read_csv(const std::filesystem::path& path, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCategory::io, "cannot read: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), delimiter);
}

}  // namespace rdbe
