// Copyright 2026 The litgraph Authors.
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace litgraph::ingest {

struct CsvCell {
  std::string text;
  bool quoted = false;
};

struct CsvRecord {
  std::vector<CsvCell> cells;
  std::size_t line = 0;
  bool malformed = false;  // stray or unterminated quote
};

// RFC 4180 reader over an in-memory buffer. Accepts LF or CRLF line ends and
// quoted fields spanning lines.
class CsvReader {
 public:
  explicit CsvReader(std::string_view data);

  // False at end of input. Blank lines are skipped.
  bool next(CsvRecord& record);

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

}  // namespace litgraph::ingest
