// Copyright 2026 The ctcr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctcr/textnorm.hpp"

#include <cctype>

namespace ctcr {

std::string normalize(std::string_view text, NormalizationMode mode) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool emitted = false;
  for (char raw : text) {
    unsigned char ch = static_cast<unsigned char>(raw);
    if (ch < 0x80 && std::isspace(ch)) {
      pending_space = true;
      continue;
    }
    if (!mode.keep_punctuation && ch < 0x80 && std::ispunct(ch)) continue;
    if (!mode.case_sensitive && ch < 0x80)
      ch = static_cast<unsigned char>(std::tolower(ch));
    if (pending_space && emitted) out += ' ';
    pending_space = false;
    emitted = true;
    out += static_cast<char>(ch);
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view normalized) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < normalized.size()) {
    while (i < normalized.size() && normalized[i] == ' ') ++i;
    size_t start = i;
    while (i < normalized.size() && normalized[i] != ' ') ++i;
    if (i > start) tokens.emplace_back(normalized.substr(start, i - start));
  }
  return tokens;
}

}  // namespace ctcr
