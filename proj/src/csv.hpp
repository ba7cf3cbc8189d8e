#pragma once

#include <istream>
#include <string>
#include <vector>

namespace jamstring {

// Shortest decimal string that round-trips the double. Keeps CSV and report
// output byte-stable across runs.
std::string format_double(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;  // 1-based source line of each row

  // Index of a header column, or -1.
  int column(const std::string& name) const;
};

// Minimal comma-separated reader: first non-blank line is the header, blank
// lines are skipped, cells are whitespace-trimmed. No quoting.
CsvTable read_csv(std::istream& in);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace jamstring
