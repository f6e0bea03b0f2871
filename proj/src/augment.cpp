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

#include "ice/augment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

#include "ice/bias.hpp"
#include "ice/column_embedding.hpp"
#include "ice/error.hpp"
#include "ice/tokenizer.hpp"
#include "json.hpp"

namespace ice {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_upper(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
}

bool has_lower(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return std::islower(static_cast<unsigned char>(c)); });
}

// Copies the capitalisation pattern of `like` onto `word`.
std::string match_case(std::string word, std::string_view like) {
  if (like.size() > 1 && has_upper(like) && !has_lower(like)) {
    for (auto& c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  } else if (!like.empty() && std::isupper(static_cast<unsigned char>(like[0])) &&
             !word.empty()) {
    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  }
  return word;
}

std::optional<std::vector<double>> mean_of(const std::vector<std::string>& tokens,
                                           const VectorSpace& space) {
  Cell cell;
  cell.tokens = tokens;
  return cell_embedding(cell, space);
}

bool nonzero(const std::vector<double>& v) {
  return std::any_of(v.begin(), v.end(), [](double x) { return x != 0.0; });
}

}  // namespace

bool SynonymLexicon::add(std::string_view token, PosTag tag,
                         std::string_view synonym) {
  const auto text = trim(synonym);
  auto tokens = tokenize(text);
  if (tokens.empty()) return false;
  if (tokens.size() == 1 && tokens.front() == token) return false;
  auto& list = entries_[{std::string(token), tag}];
  const bool duplicate = std::any_of(list.begin(), list.end(), [&](const Synonym& s) {
    return s.tokens == tokens;
  });
  if (duplicate) return false;
  list.push_back({std::string(text), std::move(tokens)});
  return true;
}

const std::vector<Synonym>* SynonymLexicon::find(std::string_view token,
                                                 PosTag tag) const {
  const auto it = entries_.find(std::pair<std::string, PosTag>(token, tag));
  return it == entries_.end() ? nullptr : &it->second;
}

SynonymLexicon parse_lexicon(std::string_view bytes) {
  SynonymLexicon lexicon;
  std::size_t pos = 0, line_no = 0;
  while (pos < bytes.size()) {
    std::size_t nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    const auto fail = [&](const std::string& why) {
      throw DataError("lexicon line " + std::to_string(line_no) + ": " + why);
    };
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos) fail("expected token<TAB>tag<TAB>synonyms");
    const auto key_tokens = tokenize(line.substr(0, t1));
    if (key_tokens.size() != 1) fail("key must be a single token");
    const auto tag = parse_pos_tag(trim(line.substr(t1 + 1, t2 - t1 - 1)));
    if (!tag) fail("unknown tag '" + std::string(line.substr(t1 + 1, t2 - t1 - 1)) + "'");

    std::string_view rest = line.substr(t2 + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      lexicon.add(key_tokens.front(), *tag, rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return lexicon;
}

std::vector<std::string> candidates(const AnnotatedQuestion& question,
                                    std::string_view header,
                                    const SynonymLexicon& lexicon,
                                    const PosTagger& tagger) {
  const auto spans = tokenize_with_spans(question.question);
  const auto header_tokens = tokenize(header);
  std::vector<std::string> tokens;
  tokens.reserve(spans.size());
  for (const auto& s : spans) tokens.push_back(s.text);

  const auto hit = header_tokens.empty()
                       ? tokens.end()
                       : std::search(tokens.begin(), tokens.end(),
                                     header_tokens.begin(), header_tokens.end());
  if (hit == tokens.end()) {
    throw UsageError("question does not contain header '" + std::string(header) + "'");
  }
  const auto start = static_cast<std::size_t>(hit - tokens.begin());
  const auto tags = tagger.tag(tokens);

  // Per header word: its synonyms under the tag it has in the question.
  const std::size_t m = header_tokens.size();
  std::vector<const std::vector<Synonym>*> options(m, nullptr);
  bool any = false;
  for (std::size_t i = 0; i < m; ++i) {
    const auto* syns = lexicon.find(header_tokens[i], tags[start + i]);
    if (syns && !syns->empty()) {
      options[i] = syns;
      any = true;
    }
  }
  std::vector<std::string> out;
  if (!any) return out;

  // Odometer over choices; 0 keeps the original word, k picks synonym k-1.
  std::vector<std::size_t> choice(m, 0);
  std::set<std::string> seen;
  const auto advance = [&] {
    for (std::size_t i = m; i-- > 0;) {
      const std::size_t limit = options[i] ? options[i]->size() : 0;
      if (choice[i] < limit) {
        ++choice[i];
        return true;
      }
      choice[i] = 0;
    }
    return false;
  };
  while (advance()) {
    std::size_t phrase_len = 0;
    for (std::size_t i = 0; i < m; ++i) {
      phrase_len += choice[i] == 0 ? 1 : (*options[i])[choice[i] - 1].tokens.size();
    }
    if (phrase_len != m) continue;

    std::string text = question.question;
    for (std::size_t i = m; i-- > 0;) {
      if (choice[i] == 0) continue;
      const auto& span = spans[start + i];
      const auto original = std::string_view(question.question)
                                .substr(span.begin, span.end - span.begin);
      text.replace(span.begin, span.end - span.begin,
                   match_case((*options[i])[choice[i] - 1].text, original));
    }
    if (contains_header(text, header)) continue;
    if (seen.insert(text).second) out.push_back(std::move(text));
  }
  return out;
}

std::optional<std::vector<double>> sentence_embedding(std::string_view text,
                                                      const VectorSpace& space) {
  return mean_of(tokenize(text), space);
}

std::optional<Paraphrase> select_paraphrase(std::string_view original,
                                            std::span<const std::string> cands,
                                            const VectorSpace& space) {
  const auto base = sentence_embedding(original, space);
  if (!base || !nonzero(*base)) return std::nullopt;

  std::optional<Paraphrase> best;
  for (const auto& cand : cands) {
    const auto v = sentence_embedding(cand, space);
    if (!v || !nonzero(*v)) continue;
    const double sim = cosine(*base, *v);
    if (!best || sim > best->similarity ||
        (sim == best->similarity && cand < best->chosen)) {
      best = Paraphrase{cand, sim, false};
    }
  }
  if (best) best->degenerate = best->chosen == original;
  return best;
}

AugmentResult augment_dataset(std::span<const AnnotatedQuestion> dataset,
                              const TableMap& tables,
                              const SynonymLexicon& lexicon,
                              const VectorSpace& space,
                              const AugmentOptions& options) {
  check_questions(dataset, tables);
  const PosTagger& tagger = options.tagger ? *options.tagger : default_tagger();

  AugmentResult result;
  result.questions.assign(dataset.begin(), dataset.end());
  for (std::size_t qi = 0; qi < dataset.size(); ++qi) {
    const auto& q = dataset[qi];
    const Relation& rel = *tables.find(q.table_id)->second;

    std::vector<std::size_t> columns{q.select_column};
    if (options.include_where_headers) {
      for (const auto& c : q.where_conditions) {
        if (std::find(columns.begin(), columns.end(), c.column) == columns.end()) {
          columns.push_back(c.column);
        }
      }
    }

    std::optional<AugmentationRecord> record;
    for (const std::size_t col : columns) {
      const auto& header = rel.columns[col].header;
      if (!header || tokenize(*header).empty() || !contains_header(q.question, *header)) {
        continue;
      }
      AugmentationRecord attempt;
      attempt.question_index = qi;
      attempt.original = q;
      attempt.header = *header;
      attempt.candidates = candidates(q, *header, lexicon, tagger);
      if (auto pick = select_paraphrase(q.question, attempt.candidates, space)) {
        attempt.chosen = pick->chosen;
        attempt.similarity = pick->similarity;
        if (pick->degenerate) ++result.degenerate;
      }
      const bool done = attempt.chosen.has_value();
      if (!record || done) record = std::move(attempt);
      if (done) break;
    }
    if (!record) continue;
    if (record->chosen && *record->chosen != q.question) {
      result.questions[qi].question = *record->chosen;
      ++result.rephrased;
    }
    result.records.push_back(std::move(*record));
  }
  if (!dataset.empty()) {
    result.yield_pct = 100.0 * static_cast<double>(result.rephrased) /
                       static_cast<double>(dataset.size());
  }
  return result;
}

std::string serialize_records(std::span<const AugmentationRecord> records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["index"] = r.question_index;
    j["original"] = r.original.question;
    j["header"] = r.header;
    j["chosen"] = r.chosen ? nlohmann::ordered_json(*r.chosen) : nullptr;
    j["similarity"] = r.similarity ? nlohmann::ordered_json(*r.similarity) : nullptr;
    j["candidates"] = r.candidates;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace ice
