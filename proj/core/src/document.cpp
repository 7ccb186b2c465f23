// Copyright 2026 The analog-search-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asl/document.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>

#include <json.hpp>

#include "asl/errors.hpp"

namespace asl {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_csv(const ResultDocument& doc, std::ostream& out) {
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    if (c) out << ',';
    out << doc.columns[c];
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    if (row.size() != doc.columns.size())
      throw domain_error("row width does not match column count");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
}

void write_json(const ResultDocument& doc, std::ostream& out) {
  nlohmann::ordered_json j;
  j["metadata"] = doc.metadata;
  j["columns"] = doc.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    if (row.size() != doc.columns.size())
      throw domain_error("row width does not match column count");
    rows.push_back(row);
  }
  j["rows"] = std::move(rows);
  out << j.dump(2) << '\n';
}

void write_document(const ResultDocument& doc, OutputFormat format,
                    const std::string& path_or_stdout) {
  const auto emit = [&](std::ostream& out) {
    if (format == OutputFormat::csv)
      write_csv(doc, out);
    else
      write_json(doc, out);
    out.flush();
    if (!out) throw resource_error("failed writing result document");
  };
  if (path_or_stdout.empty() || path_or_stdout == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream file(path_or_stdout, std::ios::binary);
  if (!file)
    throw resource_error("cannot open output file: " + path_or_stdout);
  emit(file);
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw usage_error("unknown format '" + name + "' (expected csv or json)");
}

}  // namespace asl
