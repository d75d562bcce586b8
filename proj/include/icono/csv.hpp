#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "icono/errors.hpp"

namespace icono {

// Minimal CSV support for the manifest and table formats used here: comma
// separated, no quoting (ids and paths never contain commas), trailing CR
// stripped. Empty fields are preserved.

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct CsvFile {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline CsvFile read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Precondition, "cannot open " + path);
  CsvFile csv;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() && in.peek() == EOF) break;
    auto fields = split_csv_line(line);
    if (first) {
      csv.header = std::move(fields);
      first = false;
    } else {
      csv.rows.push_back(std::move(fields));
    }
  }
  return csv;
}

inline std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += fields[i];
  }
  return out;
}

inline void write_csv(const std::string& path,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Precondition, "cannot write " + path);
  out << join_csv(header) << "\n";
  for (const auto& r : rows) out << join_csv(r) << "\n";
}

// Full-precision float formatting for stored artifacts; rounding happens
// only at render time.
inline std::string format_full(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace icono
