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

#include <string>
#include <string_view>
#include <vector>

namespace ctcr {

/// Case/punctuation handling used by evaluation and LM preprocessing.
/// (case_sensitive, keep_punctuation) = (true, true) is the identity mode
/// apart from whitespace cleanup.
struct NormalizationMode {
  bool case_sensitive = true;
  bool keep_punctuation = true;
};

/// Lowercases (ASCII) unless case_sensitive, strips ASCII punctuation unless
/// keep_punctuation, collapses whitespace runs to single spaces, trims ends.
std::string normalize(std::string_view text, NormalizationMode mode);

/// Whitespace tokens of already-normalized text.
std::vector<std::string> tokenize(std::string_view normalized);

}  // namespace ctcr
