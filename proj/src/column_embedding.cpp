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

#include "ice/column_embedding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "ice/error.hpp"

namespace ice {

std::optional<std::vector<double>> cell_embedding(const Cell& cell,
                                                  const VectorSpace& space) {
  std::vector<double> sum(space.dimension(), 0.0);
  std::size_t n = 0;
  for (const auto& tok : cell.tokens) {
    const auto v = space.lookup(tok);
    if (!v) continue;
    for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += (*v)[d];
    ++n;
  }
  if (n == 0) return std::nullopt;
  for (auto& x : sum) x /= static_cast<double>(n);
  return sum;
}

IceVector column_embedding(const Column& column, const VectorSpace& space,
                           ColumnKey source) {
  std::vector<std::vector<double>> cells;
  for (const auto& cell : column.cells) {
    if (auto e = cell_embedding(cell, space)) cells.push_back(std::move(*e));
  }
  if (cells.empty()) {
    throw DataError("column " + std::to_string(source.column) + " of table '" +
                    source.table_id + "' has no cell with an in-vocabulary token");
  }

  const std::size_t n = cells.size();
  const std::size_t mid = n / 2;
  IceVector out;
  out.values.resize(space.dimension());
  out.contributing_cells = n;
  out.source = std::move(source);

  std::vector<double> component(n);
  for (std::size_t d = 0; d < space.dimension(); ++d) {
    for (std::size_t i = 0; i < n; ++i) component[i] = cells[i][d];
    std::nth_element(component.begin(), component.begin() + mid, component.end());
    const double upper = component[mid];
    if (n % 2 == 1) {
      out.values[d] = upper;
    } else {
      const double lower = *std::max_element(component.begin(), component.begin() + mid);
      out.values[d] = std::midpoint(lower, upper);
    }
  }
  return out;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw UsageError("cosine of vectors with different lengths");
  }
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) throw UsageError("cosine of a zero-norm vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

IceIndex::IceIndex(std::vector<IceVector> entries) {
  for (auto& e : entries) add(std::move(e));
}

void IceIndex::add(IceVector entry) {
  if (!entries_.empty() && entry.values.size() != dimension()) {
    throw UsageError("ICE vector dimension mismatch");
  }
  if (entry.values.empty()) throw UsageError("empty ICE vector");
  if (!by_key_.emplace(entry.source, entries_.size()).second) {
    throw UsageError("duplicate ICE key (" + entry.source.table_id + ", " +
                     std::to_string(entry.source.column) + ")");
  }
  entries_.push_back(std::move(entry));
}

const IceVector* IceIndex::find(const ColumnKey& key) const {
  const auto it = by_key_.find(key);
  return it == by_key_.end() ? nullptr : &entries_[it->second];
}

IndexBuild build_index(std::span<const Relation> relations,
                       const VectorSpace& space) {
  IndexBuild out;
  for (const auto& rel : relations) {
    for (std::size_t c = 0; c < rel.columns.size(); ++c) {
      ColumnKey key{rel.table_id, c};
      try {
        out.index.add(column_embedding(rel.columns[c], space, key));
      } catch (const DataError&) {
        out.skipped.push_back(std::move(key));
      }
    }
  }
  return out;
}

std::vector<RankedColumn> rank_columns(std::span<const double> query,
                                       const IceIndex& index, std::size_t k) {
  std::vector<RankedColumn> ranked;
  if (index.empty()) return ranked;
  if (query.size() != index.dimension()) {
    throw UsageError("query dimension " + std::to_string(query.size()) +
                     " does not match index dimension " +
                     std::to_string(index.dimension()));
  }
  ranked.reserve(index.size());
  for (const auto& e : index.entries()) {
    ranked.push_back({e.source, cosine(query, e.values)});
  }
  const auto better = [](const RankedColumn& a, const RankedColumn& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.key < b.key;
  };
  const std::size_t keep = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(), better);
  ranked.resize(keep);
  return ranked;
}

std::string save_index(const IceIndex& index) {
  std::string out;
  char buf[32];
  for (const auto& e : index.entries()) {
    out += e.source.table_id;
    out += '\t' + std::to_string(e.source.column) + '\t' +
           std::to_string(e.contributing_cells);
    for (const double v : e.values) {
      std::snprintf(buf, sizeof buf, "\t%.6g", v);
      out += buf;
    }
    out.push_back('\n');
  }
  return out;
}

IceIndex load_index(std::string_view bytes) {
  IceIndex index;
  std::size_t pos = 0, line_no = 0;
  while (pos < bytes.size()) {
    std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fail = [&](const std::string& why) {
      throw DataError("index line " + std::to_string(line_no) + ": " + why);
    };
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 4) fail("expected table_id, column, count and values");

    const auto parse = [&](std::string_view s, auto& v) {
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size()) {
        fail("not a number: '" + std::string(s) + "'");
      }
    };
    IceVector e;
    e.source.table_id = std::string(fields[0]);
    if (e.source.table_id.empty()) fail("empty table id");
    parse(fields[1], e.source.column);
    parse(fields[2], e.contributing_cells);
    if (e.contributing_cells < 1) fail("contributing_cells must be >= 1");
    for (std::size_t i = 3; i < fields.size(); ++i) {
      double v = 0;
      parse(fields[i], v);
      if (!std::isfinite(v)) fail("non-finite value");
      e.values.push_back(v);
    }
    try {
      index.add(std::move(e));
    } catch (const UsageError& err) {
      fail(err.what());
    }
  }
  return index;
}

}  // namespace ice
