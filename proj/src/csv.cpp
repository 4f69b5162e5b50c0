// Copyright 2026 The rdnc Authors
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

#include "rdnc/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace rdnc {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                    kCsvDigits);
  if (res.ec != std::errc()) throw std::runtime_error("format_number failed");
  return std::string(buf, res.ptr);
}

CsvCell num(double v) { return {format_number(v), true}; }

CsvCell label(std::string text) {
  if (text.find_first_of(",\"\n\r") != std::string::npos) {
    throw std::invalid_argument("csv label contains a separator: " + text);
  }
  return {std::move(text), false};
}

void CsvTable::add_row(std::vector<CsvCell> row) {
  if (row.size() != header.size()) {
    throw std::invalid_argument("csv row width does not match header");
  }
  rows.push_back(std::move(row));
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j) out += ',';
    out += table.header[j];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += row[j].text;
    }
    out += '\n';
  }
  return out;
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << to_csv(table);
  if (!os) throw std::runtime_error("failed writing " + path);
}

double cell_value(const CsvCell& cell) {
  double v = 0.0;
  const char* first = cell.text.data();
  const char* last = first + cell.text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::invalid_argument("not a number: " + cell.text);
  }
  return v;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first_line = true;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (first_line) {
      table.header = std::move(fields);
      first_line = false;
      continue;
    }
    std::vector<CsvCell> row;
    for (auto& f : fields) {
      CsvCell cell{f, true};
      try {
        cell = num(cell_value(cell));
      } catch (const std::invalid_argument&) {
        cell.numeric = false;
      }
      row.push_back(std::move(cell));
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace rdnc
