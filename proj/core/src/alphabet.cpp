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

#include "ctcr/alphabet.hpp"

#include "ctcr/error.hpp"
#include "ctcr/utf8.hpp"

namespace ctcr {

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw InvalidInputError("alphabet needs at least one symbol");
  for (size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (utf8_decode(s).size() != 1)
      throw InvalidInputError("alphabet symbol must be a single character: '" +
                              s + "'");
    if (!index_.emplace(s, static_cast<int>(i) + 1).second)
      throw InvalidInputError("duplicate alphabet symbol: '" + s + "'");
  }
}

const std::string& Alphabet::symbol(int index) const {
  if (index <= 0 || index >= size())
    throw InvalidInputError("symbol index out of range: " +
                            std::to_string(index));
  return symbols_[index - 1];
}

int Alphabet::index_of(std::string_view character) const {
  auto it = index_.find(character);
  return it == index_.end() ? -1 : it->second;
}

std::string Alphabet::text_of(std::span<const int> labeling) const {
  std::string out;
  for (int idx : labeling) out += symbol(idx);
  return out;
}

Labeling Alphabet::labeling_of(std::string_view text) const {
  Labeling out;
  for (const std::string& ch : utf8_chars(text)) {
    int idx = index_of(ch);
    if (idx < 0)
      throw InvalidInputError("character not in alphabet: '" + ch + "'");
    out.push_back(idx);
  }
  return out;
}

std::string Alphabet::escaped() const {
  std::string out = "\\0";
  for (const std::string& s : symbols_) {
    if (s == " ")
      out += "\\s";
    else if (s == "\\")
      out += "\\\\";
    else
      out += s;
  }
  return out;
}

Alphabet Alphabet::from_escaped(std::string_view line) {
  std::vector<std::string> chars = utf8_chars(line);
  std::vector<std::string> symbols;
  bool blank_seen = false;
  for (size_t i = 0; i < chars.size(); ++i) {
    std::string ch = chars[i];
    if (ch == "\\") {
      if (i + 1 >= chars.size())
        throw ParseError("dangling escape in alphabet line");
      std::string next = chars[++i];
      if (next == "0") {
        if (blank_seen || !symbols.empty())
          throw ParseError("blank \\0 must be first and unique");
        blank_seen = true;
        continue;
      } else if (next == "s") {
        ch = " ";
      } else if (next == "\\") {
        ch = "\\";
      } else {
        throw ParseError("unknown escape '\\" + next + "' in alphabet line");
      }
    }
    if (!blank_seen) throw ParseError("alphabet line must start with \\0");
    symbols.push_back(ch);
  }
  if (!blank_seen) throw ParseError("alphabet line must start with \\0");
  return Alphabet(std::move(symbols));
}

}  // namespace ctcr
