#pragma once

// Shared text formatting. All floating-point output in the project goes
// through fmt15 so that CSV, JSON, and table renderings of the same value
// agree digit for digit and repeated runs are byte-identical.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace rrl::textio {

inline std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// Round to the value fmt15 prints. Feeding quantized doubles to a JSON
// serializer keeps its shortest-round-trip output at 15 significant digits
// or fewer, matching the text routes.
inline double quantize15(double v) {
  return std::strtod(fmt15(v).c_str(), nullptr);
}

inline std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
        width[c] = std::max(width[c], row[c].size());

    auto emit = [&width](std::string& out, const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += "  ";
        out += row[c];
        if (c + 1 < row.size())
          out.append(width[c] - row[c].size(), ' ');
      }
      out.push_back('\n');
    };

    std::string out;
    emit(out, header);
    std::string rule;
    for (std::size_t c = 0; c < width.size(); ++c) {
      if (c) rule += "  ";
      rule.append(width[c], '-');
    }
    out += rule;
    out.push_back('\n');
    for (const auto& row : rows) emit(out, row);
    return out;
  }
};

}  // namespace rrl::textio
