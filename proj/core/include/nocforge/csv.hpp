#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace nocforge {

// Minimal CSV support: every file the toolkit emits parses back through
// read_csv byte-for-byte, which the round-trip tests rely on.

// Shortest decimal representation that round-trips a double through strtod.
std::string format_double(double v);

class CsvWriter {
public:
  explicit CsvWriter(const std::string& path);
  ~CsvWriter();

  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<std::string>& cells);
  void close();

private:
  std::ofstream out_;
  std::string path_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Reads a comma-separated file. When has_header is true the first line is
// split off into .header. Cells are unquoted plain text (no cell in this
// toolkit ever contains a comma).
CsvTable read_csv(const std::string& path, bool has_header = true);

double parse_double_cell(const std::string& cell, const std::string& file, long line);
long parse_long_cell(const std::string& cell, const std::string& file, long line);

}  // namespace nocforge
