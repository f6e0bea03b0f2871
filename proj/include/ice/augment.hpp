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

#ifndef ICE_AUGMENT_HPP_
#define ICE_AUGMENT_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ice/embedding.hpp"
#include "ice/pos_tagger.hpp"
#include "ice/questions.hpp"

namespace ice {

struct Synonym {
  std::string text;                 // as written in the lexicon, trimmed
  std::vector<std::string> tokens;  // tokenized text; its length is what
                                    // the phrase-length filter counts
};

// Tag-conditioned synonym lookup. A synonym equal to its own key token is
// never stored.
class SynonymLexicon {
 public:
  // Returns false (and stores nothing) when the synonym tokenizes to the
  // key itself or to nothing.
  bool add(std::string_view token, PosTag tag, std::string_view synonym);

  const std::vector<Synonym>* find(std::string_view token, PosTag tag) const;
  std::size_t entry_count() const { return entries_.size(); }

 private:
  std::map<std::pair<std::string, PosTag>, std::vector<Synonym>, std::less<>>
      entries_;
};

// "token<TAB>tag<TAB>synonym1,synonym2,...", one entry per line; blank lines
// and lines starting with '#' are skipped.
SynonymLexicon parse_lexicon(std::string_view bytes);

// Builds every question obtained by replacing a non-empty subset of the
// header's words (at its first mention) with synonyms looked up under the tag
// each word carries in the question, keeping only phrases with as many tokens
// as the header. Text outside the replaced words is untouched; a replacement
// copies the capitalisation of the word it replaces. Candidates that still
// mention the header (a second occurrence) are dropped. Throws UsageError if
// the question does not contain the header.
std::vector<std::string> candidates(const AnnotatedQuestion& question,
                                    std::string_view header,
                                    const SynonymLexicon& lexicon,
                                    const PosTagger& tagger = default_tagger());

// Unweighted mean of the in-vocabulary token vectors.
std::optional<std::vector<double>> sentence_embedding(std::string_view text,
                                                      const VectorSpace& space);

struct Paraphrase {
  std::string chosen;
  double similarity = 0;
  // Chosen text equals the original: a no-op rewrite.
  bool degenerate = false;
};

// Candidate with the highest cosine to the original, ties to the
// lexicographically smallest. Candidates without an embedding are skipped.
std::optional<Paraphrase> select_paraphrase(std::string_view original,
                                            std::span<const std::string> cands,
                                            const VectorSpace& space);

struct AugmentationRecord {
  std::size_t question_index = 0;
  AnnotatedQuestion original;
  std::string header;
  std::vector<std::string> candidates;
  std::optional<std::string> chosen;
  std::optional<double> similarity;
};

struct AugmentOptions {
  // Also try where-clause headers, after the selection header.
  bool include_where_headers = false;
  const PosTagger* tagger = nullptr;  // default_tagger() when null
};

struct AugmentResult {
  std::vector<AnnotatedQuestion> questions;  // input order, SQL untouched
  std::vector<AugmentationRecord> records;   // one per question with a mention
  double yield_pct = 0;
  std::size_t rephrased = 0;
  std::size_t degenerate = 0;
};

AugmentResult augment_dataset(std::span<const AnnotatedQuestion> dataset,
                              const TableMap& tables,
                              const SynonymLexicon& lexicon,
                              const VectorSpace& space,
                              const AugmentOptions& options = {});

// One JSON object per record: index, original, header, chosen, similarity
// and candidates.
std::string serialize_records(std::span<const AugmentationRecord> records);

}  // namespace ice

#endif  // ICE_AUGMENT_HPP_
