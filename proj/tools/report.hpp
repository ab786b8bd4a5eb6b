#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace suqes::cli {

using ordered_json = nlohmann::ordered_json;

// Reports print every value at 9 significant digits; rounding before
// serialization keeps JSON and CSV renderings byte-identical across runs.
inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline double round_sig(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

struct ReportEnvelope {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();
  ordered_json provenance = ordered_json::object();
  // CSV rendering: header row plus data rows, comma-delimited, LF endings.
  std::string csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  std::string to_json() const {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["provenance"] = provenance;
    return j.dump(2) + "\n";
  }

  std::string to_csv() const {
    std::string out = csv_header + "\n";
    for (const auto& row : csv_rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }
};

}  // namespace suqes::cli
