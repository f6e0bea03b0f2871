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

#include "ice/tokenizer.hpp"

namespace ice {
namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_alnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z') || c >= 0x80;
}

bool is_joiner(unsigned char c) { return c == '-' || c == '/'; }

char lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a')
                                : static_cast<char>(c);
}

}  // namespace

std::vector<TokenSpan> tokenize_with_spans(std::string_view text) {
  std::vector<TokenSpan> out;
  const auto at = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = at(i);
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (!is_alnum(c)) {
      out.push_back({std::string(1, lower(c)), i, i + 1});
      ++i;
      continue;
    }
    // Word: alphanumerics, plus joiners that sit between two alphanumerics.
    const std::size_t begin = i;
    std::string word;
    while (i < text.size()) {
      const unsigned char w = at(i);
      if (is_alnum(w)) {
        word.push_back(lower(w));
        ++i;
      } else if (is_joiner(w) && i + 1 < text.size() && is_alnum(at(i + 1))) {
        word.push_back(static_cast<char>(w));
        ++i;
      } else {
        break;
      }
    }
    out.push_back({std::move(word), begin, i});
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  for (auto& span : tokenize_with_spans(text)) {
    tokens.push_back(std::move(span.text));
  }
  return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace ice
