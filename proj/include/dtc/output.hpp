#pragma once
// Deterministic file output: CSV with '#'-prefixed metadata headers, and JSON
// mirrors.  Identical inputs must produce byte-identical files, so doubles
// are rendered with shortest round-trip formatting.

#include <map>
#include <string>
#include <vector>

#include "dtc/config.hpp"

namespace dtc {

std::string format_double(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

using Metadata = std::map<std::string, std::string>;

std::string render_csv(const Table& table, const Metadata& metadata);
std::string render_table_json(const Table& table, const Metadata& metadata);

// writes CSV or JSON depending on `format`, adjusting the extension of `stem`
std::string write_table(const std::string& dir, const std::string& stem,
                        const Table& table, const Metadata& metadata, OutFormat format);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace dtc
