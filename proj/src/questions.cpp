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

#include "ice/questions.hpp"

#include <set>

#include "ice/error.hpp"
#include "json.hpp"

namespace ice {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return {};
  return v.dump();
}

}  // namespace

std::vector<AnnotatedQuestion> parse_questions(std::string_view bytes) {
  std::vector<AnnotatedQuestion> out;
  std::size_t pos = 0, line_no = 0;
  while (pos < bytes.size()) {
    std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto fail = [&](const std::string& why) {
      throw DataError("question line " + std::to_string(line_no) + ": " + why);
    };
    ordered_json record;
    try {
      record = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
      fail(std::string("malformed JSON: ") + e.what());
    }
    if (!record.is_object()) fail("record is not an object");
    if (!record.contains("question") || !record["question"].is_string())
      fail("missing string field \"question\"");
    if (!record.contains("table_id") || !record["table_id"].is_string())
      fail("missing string field \"table_id\"");
    if (!record.contains("sql") || !record["sql"].is_object())
      fail("missing object field \"sql\"");
    const auto& sql = record["sql"];
    if (!sql.contains("sel") || !sql["sel"].is_number_integer() ||
        sql["sel"].get<long long>() < 0)
      fail("\"sql.sel\" must be a non-negative integer");
    if (!sql.contains("agg") || !sql["agg"].is_number_integer())
      fail("\"sql.agg\" must be an integer");
    if (!sql.contains("conds") || !sql["conds"].is_array())
      fail("\"sql.conds\" must be an array");

    AnnotatedQuestion q;
    q.question = record["question"].get<std::string>();
    q.table_id = record["table_id"].get<std::string>();
    q.select_column = sql["sel"].get<std::size_t>();
    q.aggregation = sql["agg"].get<int>();
    for (const auto& cond : sql["conds"]) {
      if (!cond.is_array() || cond.size() != 3 || !cond[0].is_number_integer() ||
          cond[0].get<long long>() < 0 || !cond[1].is_number_integer()) {
        fail("condition must be [column, operator, value]");
      }
      q.where_conditions.push_back(
          {cond[0].get<std::size_t>(), cond[1].get<int>(), scalar_text(cond[2])});
    }
    q.sql_json = sql.dump();
    q.record_json = record.dump();
    out.push_back(std::move(q));
  }
  return out;
}

std::string serialize_questions(std::span<const AnnotatedQuestion> questions) {
  std::string out;
  for (const auto& q : questions) {
    ordered_json record;
    if (!q.record_json.empty()) {
      record = ordered_json::parse(q.record_json);
    } else {
      record["table_id"] = q.table_id;
      record["question"] = q.question;
      ordered_json conds = ordered_json::array();
      for (const auto& c : q.where_conditions) {
        conds.push_back(ordered_json::array({c.column, c.op, c.value}));
      }
      record["sql"] = q.sql_json.empty()
                          ? ordered_json{{"sel", q.select_column},
                                         {"conds", conds},
                                         {"agg", q.aggregation}}
                          : ordered_json::parse(q.sql_json);
    }
    record["question"] = q.question;
    out += record.dump();
    out.push_back('\n');
  }
  return out;
}

TableMap make_table_map(std::span<const Relation> relations) {
  TableMap map;
  for (const auto& rel : relations) map.emplace(rel.table_id, &rel);
  return map;
}

void check_questions(std::span<const AnnotatedQuestion> questions,
                     const TableMap& tables) {
  std::set<std::string> missing;
  std::string bad_column;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const auto& q = questions[i];
    const auto it = tables.find(q.table_id);
    if (it == tables.end()) {
      missing.insert(q.table_id);
      continue;
    }
    if (!bad_column.empty()) continue;
    const std::size_t width = it->second->columns.size();
    bool ok = q.select_column < width;
    for (const auto& c : q.where_conditions) ok = ok && c.column < width;
    if (!ok) {
      bad_column = "question " + std::to_string(i) +
                   " references a column outside table '" + q.table_id + "'";
    }
  }
  if (!missing.empty()) {
    std::string msg = "unresolved table ids:";
    for (const auto& id : missing) msg += " " + id;
    throw DataError(msg);
  }
  if (!bad_column.empty()) throw DataError(bad_column);
}

}  // namespace ice
