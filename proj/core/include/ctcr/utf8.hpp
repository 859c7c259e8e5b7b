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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ctcr {

/// Decodes UTF-8 into codepoints. Throws InvalidInputError on malformed bytes.
std::vector<uint32_t> utf8_decode(std::string_view text);

/// Encodes codepoints back to UTF-8.
std::string utf8_encode(const std::vector<uint32_t>& codepoints);

std::string utf8_encode_one(uint32_t codepoint);

/// Splits UTF-8 text into single-codepoint strings.
std::vector<std::string> utf8_chars(std::string_view text);

}  // namespace ctcr
