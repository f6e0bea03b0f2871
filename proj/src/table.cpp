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

#include "ice/table.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "ice/error.hpp"
#include "ice/tokenizer.hpp"
#include "json.hpp"

namespace ice {
namespace {

using nlohmann::json;

std::string stringify_scalar(const json& value) {
  switch (value.type()) {
    case json::value_t::string:
      return value.get<std::string>();
    case json::value_t::null:
      return {};
    case json::value_t::boolean:
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
    case json::value_t::number_float:
      // Shortest round-trip decimal, locale independent ("2004", "1.5").
      return value.dump();
    default:
      throw DataError("cell value is not a scalar: " + value.dump());
  }
}

Relation make_relation(std::string table_id,
                       const std::vector<std::optional<std::string>>& headers,
                       const std::vector<std::vector<std::string>>& rows) {
  Relation rel;
  rel.table_id = std::move(table_id);
  rel.columns.resize(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    rel.columns[c].header = headers[c];
    rel.columns[c].cells.reserve(rows.size());
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != headers.size()) {
      std::ostringstream msg;
      msg << "ragged row in table '" << rel.table_id << "': row " << r
          << " has " << rows[r].size() << " cells, expected "
          << headers.size();
      throw DataError(msg.str());
    }
    for (std::size_t c = 0; c < headers.size(); ++c) {
      rel.columns[c].cells.push_back(Cell::from_raw(rows[r][c]));
    }
  }
  return rel;
}

std::optional<std::string> header_or_none(std::string h) {
  if (h.empty()) return std::nullopt;
  return h;
}

std::vector<Relation> parse_wikisql(std::string_view bytes) {
  std::vector<Relation> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto fail = [&](const std::string& why) {
      throw DataError("line " + std::to_string(line_no) + ": " + why);
    };
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) fail("record is not an object");
    if (!record.contains("id") || !record["id"].is_string())
      fail("missing string field \"id\"");
    if (!record.contains("header") || !record["header"].is_array())
      fail("missing array field \"header\"");
    if (!record.contains("rows") || !record["rows"].is_array())
      fail("missing array field \"rows\"");

    std::vector<std::optional<std::string>> headers;
    for (const auto& h : record["header"]) {
      if (!h.is_string()) fail("header entry is not a string");
      headers.push_back(header_or_none(h.get<std::string>()));
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : record["rows"]) {
      if (!row.is_array()) fail("row is not an array");
      std::vector<std::string> cells;
      for (const auto& v : row) {
        try {
          cells.push_back(stringify_scalar(v));
        } catch (const DataError& e) {
          fail(e.what());
        }
      }
      rows.push_back(std::move(cells));
    }
    out.push_back(make_relation(record["id"].get<std::string>(), headers, rows));
  }
  return out;
}

// RFC 4180: quoted fields may hold commas, CR/LF and doubled quotes.
std::vector<std::vector<std::string>> parse_csv_records(std::string_view bytes) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line_no = 1;
  std::size_t i = 0;

  const auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    records.push_back(std::move(record));
    record.clear();
    field_started = false;
  };

  while (i < bytes.size()) {
    const char c = bytes[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < bytes.size() && bytes[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        if (i < bytes.size() && bytes[i] != ',' && bytes[i] != '\n' &&
            bytes[i] != '\r') {
          throw DataError("line " + std::to_string(line_no) +
                          ": unexpected character after closing quote");
        }
        continue;
      }
      if (c == '\n') ++line_no;
      field.push_back(c);
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw DataError("line " + std::to_string(line_no) +
                          ": quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        ++i;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        ++i;
        break;
      case '\r':
        ++i;
        if (i < bytes.size() && bytes[i] == '\n') ++i;
        end_record();
        ++line_no;
        break;
      case '\n':
        ++i;
        end_record();
        ++line_no;
        break;
      default:
        field.push_back(c);
        field_started = true;
        ++i;
    }
  }
  if (in_quotes) {
    throw DataError("line " + std::to_string(line_no) +
                    ": unterminated quoted field");
  }
  if (field_started || !field.empty() || !record.empty()) end_record();

  // A record consisting of one empty field is a blank line.
  std::erase_if(records, [](const std::vector<std::string>& r) {
    return r.size() == 1 && r.front().empty();
  });
  return records;
}

std::vector<Relation> parse_csv(std::string_view bytes,
                                std::string_view table_id) {
  if (table_id.empty()) throw UsageError("CSV table id must be non-empty");
  auto records = parse_csv_records(bytes);
  if (records.empty()) throw DataError("CSV input has no header row");
  std::vector<std::optional<std::string>> headers;
  for (auto& h : records.front()) headers.push_back(header_or_none(std::move(h)));
  records.erase(records.begin());
  std::vector<Relation> out;
  out.push_back(make_relation(std::string(table_id), headers, records));
  return out;
}

}  // namespace

Cell Cell::from_raw(std::string raw) {
  Cell cell;
  cell.tokens = tokenize(raw);
  cell.raw = std::move(raw);
  return cell;
}

void Relation::check_rectangular() const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].cells.size() != row_count()) {
      throw DataError("table '" + table_id + "' column " + std::to_string(c) +
                      " has " + std::to_string(columns[c].cells.size()) +
                      " cells, expected " + std::to_string(row_count()));
    }
  }
}

bool operator==(const Cell& a, const Cell& b) {
  return a.raw == b.raw && a.tokens == b.tokens;
}
bool operator==(const Column& a, const Column& b) {
  return a.header == b.header && a.cells == b.cells;
}
bool operator==(const Relation& a, const Relation& b) {
  return a.table_id == b.table_id && a.columns == b.columns;
}

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "wikisql_jsonl") return TableFormat::kWikiSqlJsonl;
  if (name == "csv") return TableFormat::kCsv;
  return std::nullopt;
}

std::vector<Relation> parse_table(std::string_view bytes, TableFormat format,
                                  std::string_view csv_table_id) {
  auto relations = format == TableFormat::kCsv ? parse_csv(bytes, csv_table_id)
                                               : parse_wikisql(bytes);
  std::set<std::string_view> seen;
  for (const auto& rel : relations) {
    if (rel.table_id.empty()) throw DataError("empty table id");
    if (!seen.insert(rel.table_id).second) {
      throw DataError("duplicate table id '" + rel.table_id + "'");
    }
  }
  return relations;
}

std::string serialize_wikisql(const std::vector<Relation>& relations) {
  std::string out;
  for (const auto& rel : relations) {
    json record;
    record["id"] = rel.table_id;
    json header = json::array();
    for (const auto& col : rel.columns) header.push_back(col.header.value_or(""));
    record["header"] = std::move(header);
    json rows = json::array();
    for (std::size_t r = 0; r < rel.row_count(); ++r) {
      json row = json::array();
      for (const auto& col : rel.columns) row.push_back(col.cells[r].raw);
      rows.push_back(std::move(row));
    }
    record["rows"] = std::move(rows);
    out += record.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace ice
