//
// Copyright 2026 The ICE Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef ICE_TABLE_HPP_
#define ICE_TABLE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ice {

struct Cell {
  std::string raw;
  std::vector<std::string> tokens;

  static Cell from_raw(std::string raw);
};

// Header is metadata only; nothing in the embedding path reads it.
struct Column {
  std::optional<std::string> header;
  std::vector<Cell> cells;
};

// A table: ordered columns of equal length.
struct Relation {
  std::string table_id;
  std::vector<Column> columns;

  std::size_t row_count() const {
    return columns.empty() ? 0 : columns.front().cells.size();
  }
  // Throws DataError if the columns do not all have the same length.
  void check_rectangular() const;
};

bool operator==(const Cell& a, const Cell& b);
bool operator==(const Column& a, const Column& b);
bool operator==(const Relation& a, const Relation& b);

enum class TableFormat { kWikiSqlJsonl, kCsv };

std::optional<TableFormat> parse_table_format(std::string_view name);

// Parses WikiSQL table records (one JSON object per line with "id",
// "header" and "rows") or an RFC-4180 CSV whose first row is the header.
// CSV input carries no id of its own, so `csv_table_id` names the table.
// Errors name the offending line (malformed record) or table and row
// (ragged row). Table ids must be unique within one call.
std::vector<Relation> parse_table(std::string_view bytes, TableFormat format,
                                  std::string_view csv_table_id = "csv");

// WikiSQL-layout JSON lines; every cell written as a string.
std::string serialize_wikisql(const std::vector<Relation>& relations);

}  // namespace ice

#endif  // ICE_TABLE_HPP_
