#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rough/error.hpp"

namespace rough {

enum class OutputFormat { Text, Csv, Json };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw Error(ErrorKind::Parse, "unknown output format '" + s + "'");
}

/// A rectangular report. Text output pads columns; CSV quotes when needed;
/// JSON emits an array of objects keyed by column.
struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  void emit(std::ostream& os, OutputFormat fmt) const {
    switch (fmt) {
      case OutputFormat::Text: text(os); break;
      case OutputFormat::Csv: csv(os); break;
      case OutputFormat::Json: os << json().dump(2) << '\n'; break;
    }
  }

  nlohmann::json json() const {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json o = nlohmann::json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = i < r.size() ? r[i] : "";
      arr.push_back(std::move(o));
    }
    return arr;
  }

private:
  void text(std::ostream& os) const {
    std::vector<std::size_t> w(columns.size(), 0);
    auto measure = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < w.size() && i < r.size(); ++i) w[i] = std::max(w[i], display_width(r[i]));
    };
    measure(columns);
    for (const auto& r : rows) measure(r);
    auto line = [&](const std::vector<std::string>& r) {
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const std::string cell = i < r.size() ? r[i] : "";
        out += cell;
        if (i + 1 < w.size()) out += std::string(w[i] - display_width(cell) + 2, ' ');
      }
      os << out << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
  }

  void csv(std::ostream& os) const {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        os << quote(i < r.size() ? r[i] : "");
      }
      os << '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
  }

  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  }

  /// Code points, so multi-byte labels line up.
  static std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
      return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
  }
};

}  // namespace rough
