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

#ifndef ICE_POS_TAGGER_HPP_
#define ICE_POS_TAGGER_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ice {

enum class PosTag { kNoun, kVerb, kAdj, kAdv, kNum, kOther };

std::string_view pos_tag_name(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

// Coarse part-of-speech tagger over lowercased tokens. Implementations must
// be deterministic and return exactly one tag per token.
class PosTagger {
 public:
  virtual ~PosTagger() = default;
  virtual std::vector<PosTag> tag(std::span<const std::string> tokens) const = 0;
};

// Closed-class word lists plus suffix rules; unknown alphabetic words are
// nouns. One contextual rule: a verb or adverb reading directly after a
// determiner or possessive becomes a noun ("the ranking").
class RuleTagger final : public PosTagger {
 public:
  std::vector<PosTag> tag(std::span<const std::string> tokens) const override;
};

const PosTagger& default_tagger();

std::vector<std::pair<std::string, PosTag>> pos_tag(
    std::span<const std::string> tokens, const PosTagger& tagger = default_tagger());

}  // namespace ice

#endif  // ICE_POS_TAGGER_HPP_
