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

#ifndef ICE_COLUMN_EMBEDDING_HPP_
#define ICE_COLUMN_EMBEDDING_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ice/embedding.hpp"
#include "ice/table.hpp"

namespace ice {

struct ColumnKey {
  std::string table_id;
  std::size_t column = 0;

  auto operator<=>(const ColumnKey&) const = default;
};

// Content embedding of one column. `values` never depends on the header.
struct IceVector {
  std::vector<double> values;
  std::size_t contributing_cells = 0;
  ColumnKey source;
};

// Mean of the vectors of the cell's in-vocabulary tokens; nullopt when none
// of its tokens is in the vocabulary.
std::optional<std::vector<double>> cell_embedding(const Cell& cell,
                                                  const VectorSpace& space);

// Component-wise median of the defined cell embeddings; an even count takes
// the midpoint of the two central values. Throws DataError naming `source`
// when no cell is embeddable.
IceVector column_embedding(const Column& column, const VectorSpace& space,
                           ColumnKey source = {});

// Throws UsageError on a length mismatch or a zero-norm input.
double cosine(std::span<const double> a, std::span<const double> b);

struct RankedColumn {
  ColumnKey key;
  double similarity = 0;
};

// Frozen ICE vectors keyed by (table_id, column index).
class IceIndex {
 public:
  IceIndex() = default;
  explicit IceIndex(std::vector<IceVector> entries);

  // Throws UsageError on a duplicate key or dimension mismatch.
  void add(IceVector entry);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t dimension() const {
    return entries_.empty() ? 0 : entries_.front().values.size();
  }
  const std::vector<IceVector>& entries() const { return entries_; }
  const IceVector* find(const ColumnKey& key) const;

 private:
  std::vector<IceVector> entries_;
  std::map<ColumnKey, std::size_t> by_key_;
};

struct IndexBuild {
  IceIndex index;
  std::vector<ColumnKey> skipped;  // columns with no embeddable cell
};

IndexBuild build_index(std::span<const Relation> relations,
                       const VectorSpace& space);

// Top-k by descending cosine, ties by ascending key. k beyond the index size
// returns everything; an empty index returns an empty list.
std::vector<RankedColumn> rank_columns(std::span<const double> query,
                                       const IceIndex& index, std::size_t k);

// Tab-separated: table_id, column, contributing_cells, then the values at 6
// significant digits.
std::string save_index(const IceIndex& index);
IceIndex load_index(std::string_view bytes);

}  // namespace ice

#endif  // ICE_COLUMN_EMBEDDING_HPP_
