#ifndef CAYLEY_TOOLS_TABLE_WRITER_HPP
#define CAYLEY_TOOLS_TABLE_WRITER_HPP

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace cayley::cli {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

// Row table written as CSV (golden format) or JSON with one object per row.
class TableWriter {
 public:
  TableWriter(std::string model, std::vector<std::string> columns)
      : model_(std::move(model)), columns_(std::move(columns)) {}

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  std::size_t size() const noexcept { return rows_.size(); }

  void write_csv(std::ostream& out) const {
    out << "# model: " << model_ << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << "\n";
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
  }

  void write_json(std::ostream& out) const {
    nlohmann::ordered_json doc;
    doc["model"] = model_;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size() && i < columns_.size(); ++i) obj[columns_[i]] = json_cell(row[i]);
      doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << "\n";
  }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json")
      write_json(out);
    else
      write_csv(out);
  }

  static std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
  }

 private:
  static std::string csv_cell(const Cell& c) {
    if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
    if (std::holds_alternative<double>(c)) return fixed(std::get<double>(c));
    if (std::holds_alternative<std::string>(c)) {
      const auto& s = std::get<std::string>(c);
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    return "";
  }

  static nlohmann::ordered_json json_cell(const Cell& c) {
    if (std::holds_alternative<std::int64_t>(c)) return std::get<std::int64_t>(c);
    if (std::holds_alternative<double>(c)) return std::get<double>(c);
    if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
    return nullptr;
  }

  std::string model_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace cayley::cli

#endif
