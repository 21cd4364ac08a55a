#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Minimal numeric CSV: comma-separated plain tokens (no quoting), one header
// row, doubles serialized with 15 significant digits so emitted files
// round-trip through the reader without loss at that precision.

namespace leocov {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// %.15g rendering used for every numeric cell the tool writes.
std::string format_g15(double value);

void write_csv(std::ostream& out, const CsvTable& table);

// Throws std::runtime_error on ragged rows or an empty stream.
CsvTable read_csv(std::istream& in);

}  // namespace leocov
