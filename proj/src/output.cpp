#include "dtc/output.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace dtc {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

std::string render_csv(const Table& table, const Metadata& metadata) {
  std::string out;
  for (const auto& [key, value] : metadata) out += "# " + key + " = " + value + "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("table row width does not match column count");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_table_json(const Table& table, const Metadata& metadata) {
  nlohmann::json j;
  j["metadata"] = metadata;
  j["columns"] = table.columns;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("table row width does not match column count");
    rows.push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string write_table(const std::string& dir, const std::string& stem,
                        const Table& table, const Metadata& metadata, OutFormat format) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const std::string name = stem + (format == OutFormat::Csv ? ".csv" : ".json");
  const fs::path path = fs::path(dir) / name;
  write_text_file(path.string(), format == OutFormat::Csv ? render_csv(table, metadata)
                                                          : render_table_json(table, metadata));
  return path.string();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dtc
