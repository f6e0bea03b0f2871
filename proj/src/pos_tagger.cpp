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

#include "ice/pos_tagger.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

namespace ice {
namespace {

const std::unordered_map<std::string_view, PosTag>& closed_class() {
  static const auto* words = [] {
    auto* m = new std::unordered_map<std::string_view, PosTag>;
    const auto put = [m](PosTag tag, std::initializer_list<std::string_view> ws) {
      for (const auto w : ws) m->emplace(w, tag);
    };
    put(PosTag::kOther,
        {"the", "a", "an", "this", "that", "these", "those", "each", "every",
         "any", "some", "all", "no", "both", "either", "neither", "i", "you",
         "he", "she", "it", "we", "they", "me", "him", "her", "us", "them",
         "my", "your", "his", "its", "our", "their", "who", "whom", "whose",
         "which", "what", "when", "where", "why", "how", "of", "in", "on",
         "at", "by", "for", "with", "from", "to", "into", "during", "after",
         "before", "against", "between", "under", "over", "about", "than",
         "as", "per", "via", "within", "without", "through", "and", "or",
         "but", "nor", "if", "while", "there", "whether", "upon", "since",
         "until", "among", "s", "'"});
    put(PosTag::kVerb,
        {"is", "are", "was", "were", "be", "been", "being", "am", "do", "does",
         "did", "has", "have", "had", "can", "could", "will", "would", "shall",
         "should", "may", "might", "must", "won", "lost", "get", "got", "give",
         "gave", "given", "go", "went", "gone", "make", "made", "take", "took",
         "taken", "tell", "name", "list", "show", "say", "said", "come", "came",
         "see", "saw", "seen", "play", "win", "lose", "hold", "held", "run",
         "ran", "find", "found", "know", "knew", "known", "became", "become"});
    put(PosTag::kAdj,
        {"high", "higher", "highest", "low", "lower", "lowest", "large",
         "larger", "largest", "small", "smaller", "smallest", "most", "least",
         "total", "first", "last", "new", "old", "best", "worst", "more",
         "less", "many", "much", "other", "same", "different", "long", "short",
         "top", "big", "great", "greater", "greatest", "few", "fewer", "fewest",
         "average", "good", "bad", "final", "main", "original", "early",
         "late", "next", "previous", "current", "former", "open"});
    put(PosTag::kAdv,
        {"not", "also", "only", "very", "ever", "never", "often", "always",
         "too", "just", "still", "already", "again", "then", "here", "now",
         "yet", "once", "twice"});
    put(PosTag::kNum,
        {"zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
         "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
         "sixteen", "seventeen", "eighteen", "nineteen", "twenty", "thirty",
         "forty", "fifty", "sixty", "seventy", "eighty", "ninety", "hundred",
         "thousand", "million", "billion"});
    return m;
  }();
  return *words;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() > suffix.size() + 1 && w.ends_with(suffix);
}

PosTag tag_word(std::string_view w) {
  if (const auto it = closed_class().find(w); it != closed_class().end()) {
    return it->second;
  }
  bool digit = false, alpha = false;
  for (const char c : w) {
    const auto u = static_cast<unsigned char>(c);
    digit = digit || std::isdigit(u);
    alpha = alpha || std::isalpha(u) || u >= 0x80;
  }
  if (!digit && !alpha) return PosTag::kOther;
  if (digit) {
    // "2004", "1-0", "3rd", "1990s": numbers, ordinals and scores.
    const bool numeric_shape = std::all_of(w.begin(), w.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/';
    });
    if (numeric_shape || w.ends_with("st") || w.ends_with("nd") ||
        w.ends_with("rd") || w.ends_with("th") || w.ends_with("s")) {
      return PosTag::kNum;
    }
    return PosTag::kNoun;
  }

  static constexpr std::array<std::string_view, 11> kNounSuffixes = {
      "tion", "sion", "ment", "ness", "ity", "ship", "ance", "ence", "ism",
      "ist", "age"};
  static constexpr std::array<std::string_view, 8> kAdjSuffixes = {
      "ous", "ful", "ive", "able", "ible", "less", "ical", "ish"};
  for (const auto s : kNounSuffixes) {
    if (ends_with(w, s)) return PosTag::kNoun;
  }
  for (const auto s : kAdjSuffixes) {
    if (ends_with(w, s)) return PosTag::kAdj;
  }
  if (ends_with(w, "ly")) return PosTag::kAdv;
  if (w.size() > 4 && (w.ends_with("ing") || w.ends_with("ed"))) {
    return PosTag::kVerb;
  }
  return PosTag::kNoun;
}

bool is_determiner(std::string_view w) {
  static constexpr std::array<std::string_view, 12> kDeterminers = {
      "the", "a", "an", "this", "that", "my", "his", "its", "their", "our",
      "your", "her"};
  return std::find(kDeterminers.begin(), kDeterminers.end(), w) !=
         kDeterminers.end();
}

}  // namespace

std::string_view pos_tag_name(PosTag tag) {
  switch (tag) {
    case PosTag::kNoun: return "NOUN";
    case PosTag::kVerb: return "VERB";
    case PosTag::kAdj: return "ADJ";
    case PosTag::kAdv: return "ADV";
    case PosTag::kNum: return "NUM";
    case PosTag::kOther: return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const PosTag t : {PosTag::kNoun, PosTag::kVerb, PosTag::kAdj,
                         PosTag::kAdv, PosTag::kNum, PosTag::kOther}) {
    if (pos_tag_name(t) == upper) return t;
  }
  return std::nullopt;
}

std::vector<PosTag> RuleTagger::tag(std::span<const std::string> tokens) const {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    PosTag t = tag_word(tokens[i]);
    if ((t == PosTag::kVerb || t == PosTag::kAdv) && i > 0 &&
        is_determiner(tokens[i - 1]) && !closed_class().contains(tokens[i])) {
      t = PosTag::kNoun;
    }
    tags.push_back(t);
  }
  return tags;
}

const PosTagger& default_tagger() {
  static const RuleTagger tagger;
  return tagger;
}

std::vector<std::pair<std::string, PosTag>> pos_tag(
    std::span<const std::string> tokens, const PosTagger& tagger) {
  const auto tags = tagger.tag(tokens);
  std::vector<std::pair<std::string, PosTag>> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) out.emplace_back(tokens[i], tags[i]);
  return out;
}

}  // namespace ice
