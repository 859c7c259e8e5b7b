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

#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctcr {

/// Symbol indices used in paths, labelings and posterior columns.
/// Index 0 is always the CTC blank; printable symbols occupy 1..C-1.
using Labeling = std::vector<int>;

class Alphabet {
 public:
  static constexpr int kBlank = 0;

  /// `symbols` are the printable characters in column order (blank excluded).
  /// Each entry must be a single unique codepoint.
  explicit Alphabet(std::vector<std::string> symbols);

  /// Total class count C, blank included.
  int size() const { return static_cast<int>(symbols_.size()) + 1; }
  int num_symbols() const { return static_cast<int>(symbols_.size()); }

  /// `index` in [1, C). Blank has no printable symbol.
  const std::string& symbol(int index) const;

  /// Returns -1 when the character is not in the alphabet.
  int index_of(std::string_view character) const;
  bool contains(std::string_view character) const {
    return index_of(character) >= 0;
  }

  std::string text_of(std::span<const int> labeling) const;

  /// Inverse of text_of. Throws InvalidInputError on characters outside the
  /// alphabet.
  Labeling labeling_of(std::string_view text) const;

  /// Escaped single-line form: blank as `\0`, space as `\s`, backslash as
  /// `\\`, everything else raw UTF-8 in index order (blank first).
  std::string escaped() const;
  static Alphabet from_escaped(std::string_view line);

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int, std::less<>> index_;
};

}  // namespace ctcr
