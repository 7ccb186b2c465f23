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

#ifndef ASL_DOCUMENT_HPP
#define ASL_DOCUMENT_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace asl {

// Tabular result of one run. Numbers are written in their shortest
// round-trip form ('.' decimal point, no locale anywhere), so re-parsing an
// emitted document reproduces the in-memory doubles exactly and two runs
// with the same inputs emit identical bytes. The timestamp lives only in
// metadata; golden comparisons skip it.
struct ResultDocument {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

enum class OutputFormat { csv, json };

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

// CSV: one header line with the column names, then one line per row,
// '\n' endings, trailing newline. Metadata is a JSON-only affair.
void write_csv(const ResultDocument& doc, std::ostream& out);

// JSON object {"metadata": {...}, "columns": [...], "rows": [[...]]},
// trailing newline.
void write_json(const ResultDocument& doc, std::ostream& out);

// Writes to the given path, or to stdout for "" or "-". Unwritable
// destinations raise resource_error.
void write_document(const ResultDocument& doc, OutputFormat format,
                    const std::string& path_or_stdout);

OutputFormat parse_format(const std::string& name);

}  // namespace asl

#endif
