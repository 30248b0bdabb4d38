// Copyright 2026 The Authors.
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

#ifndef DELIB_CSV_H_
#define DELIB_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace delib {

// RFC 4180 records: comma separated, optional double-quoted fields with ""
// escapes, CRLF or LF line ends. Quoted fields may span lines.
struct CsvRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

// Parses a whole document. Blank lines are skipped. Throws kFormat, with
// line and column, on a stray quote or an unterminated quoted field.
std::vector<CsvRecord> ParseCsv(std::string_view text);

// Quotes the field when it contains a comma, quote, CR or LF, or has
// leading/trailing spaces.
std::string CsvEscape(std::string_view field);
std::string CsvLine(const std::vector<std::string>& fields);

}  // namespace delib

#endif  // DELIB_CSV_H_
