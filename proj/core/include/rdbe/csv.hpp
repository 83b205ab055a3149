#ifndef RDBE_CSV_HPP
#define RDBE_CSV_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace rdbe {

// Minimal RFC 4180-style reader: quoted fields may contain the delimiter,
// doubled quotes, and embedded newlines. Accepts \n and \r\n row endings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::filesystem::path& path, char delimiter = ',');
CsvTable parse_csv(const std::string& text, char delimiter = ',');

}  // namespace rdbe

#endif
