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

#include "delib/csv.h"

#include <fmt/format.h>

#include "delib/error.h"

namespace delib {

std::vector<CsvRecord> ParseCsv(std::string_view text) {
  std::vector<CsvRecord> records;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t size = text.size();

  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kFormat, fmt::format("csv line {} column {}: {}", line, column, what));
  };

  while (pos < size) {
    CsvRecord record;
    record.line = line;
    bool record_done = false;
    bool blank = true;
    while (!record_done) {
      std::string field;
      if (pos < size && text[pos] == '"') {
        blank = false;
        ++pos;
        ++column;
        bool closed = false;
        while (pos < size) {
          const char c = text[pos];
          if (c == '"') {
            if (pos + 1 < size && text[pos + 1] == '"') {
              field.push_back('"');
              pos += 2;
              column += 2;
              continue;
            }
            ++pos;
            ++column;
            closed = true;
            break;
          }
          field.push_back(c);
          ++pos;
          if (c == '\n') {
            ++line;
            column = 1;
          } else {
            ++column;
          }
        }
        if (!closed) fail("unterminated quoted field");
        if (pos < size && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          fail("unexpected character after closing quote");
        }
      } else {
        while (pos < size && text[pos] != ',' && text[pos] != '\n' && text[pos] != '\r') {
          if (text[pos] == '"') fail("quote inside unquoted field");
          field.push_back(text[pos]);
          ++pos;
          ++column;
        }
        if (!field.empty()) blank = false;
      }
      record.fields.push_back(std::move(field));
      if (pos < size && text[pos] == ',') {
        blank = false;
        ++pos;
        ++column;
        continue;
      }
      // End of line or input.
      if (pos < size && text[pos] == '\r') ++pos;
      if (pos < size && text[pos] == '\n') ++pos;
      ++line;
      column = 1;
      record_done = true;
    }
    if (!blank) records.push_back(std::move(record));
  }
  return records;
}

std::string CsvEscape(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string CsvLine(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += CsvEscape(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace delib
