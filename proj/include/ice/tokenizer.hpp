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

#ifndef ICE_TOKENIZER_HPP_
#define ICE_TOKENIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ice {

// A token together with the byte range it was cut from in the source text.
struct TokenSpan {
  std::string text;  // lowercased
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Shared tokenizer for cells, questions, headers and synonyms.
//
// Rules: ASCII letters are lowercased; whitespace separates tokens; every
// punctuation character becomes its own token, except '-' and '/' when both
// neighbours are alphanumeric ("tiger-cats", "westlake/macarthur"). Bytes
// >= 0x80 are treated as word characters so UTF-8 text passes through intact.
std::vector<std::string> tokenize(std::string_view text);

std::vector<TokenSpan> tokenize_with_spans(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace ice

#endif  // ICE_TOKENIZER_HPP_
