#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace ccflow::tools {

/// Column-named result table with CSV and JSON writers. Doubles are printed
/// with round-trip precision so reruns of a deterministic config produce
/// byte-identical files.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  static std::string cell(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
  }
  static std::string cell(std::uint64_t value) { return std::to_string(value); }
  static std::string cell(std::int64_t value) { return std::to_string(value); }
  static std::string cell(int value) { return std::to_string(value); }
  static std::string cell(std::uint32_t value) { return std::to_string(value); }
  static std::string cell(const std::string& value) { return value; }
  static std::string cell(std::optional<double> value) {
    return value ? cell(*value) : std::string("nan");
  }
  static std::string cell(bool value) { return value ? "1" : "0"; }

  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
      out << columns_[i] << (i + 1 < columns_.size() ? ',' : '\n');
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }
  }

  void write_json(std::ostream& out) const {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& row : rows_) {
      nlohmann::json item;
      for (std::size_t i = 0; i < row.size() && i < columns_.size(); ++i)
        item[columns_[i]] = row[i];
      doc.push_back(item);
    }
    out << doc.dump(2) << '\n';
  }

  /// Writes <out_dir>/<name>.<ext> in the requested format; returns the path.
  std::string write(const std::string& out_dir, const std::string& name,
                    const std::string& format) const {
    const std::string ext = format == "json" ? ".json" : ".csv";
    const std::string path = (std::filesystem::path(out_dir) / (name + ext)).string();
    std::ofstream out(path);
    if (format == "json") {
      write_json(out);
    } else {
      write_csv(out);
    }
    return path;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

} // namespace ccflow::tools
