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

#ifndef RDNC_CSV_HPP
#define RDNC_CSV_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rdnc {

inline constexpr int kCsvDigits = 12;

// 12 significant digits, '.' separator, independent of the global locale.
std::string format_number(double v);

// A cell is either a number or a bare label (no commas, quotes or newlines).
struct CsvCell {
  std::string text;
  bool numeric = true;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  void add_row(std::vector<CsvCell> row);
};

CsvCell num(double v);
CsvCell label(std::string text);

std::string to_csv(const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

// Parses text produced by to_csv; numeric cells are re-read as doubles and
// re-formatted, so to_csv(parse_csv(to_csv(t))) == to_csv(t).
CsvTable parse_csv(std::string_view text);

double cell_value(const CsvCell& cell);

}  // namespace rdnc

#endif  // RDNC_CSV_HPP
