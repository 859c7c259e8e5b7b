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

#include <iosfwd>
#include <string>

#include "ctcr/ngram_lm.hpp"

namespace ctcr {

/// Standard ARPA text serialization (\data\, \N-grams:, \end\), log10
/// values, n-grams sorted for byte-identical output. Backoff columns are
/// written for all orders below the top one.
void write_arpa(const NGramModel& model, std::ostream& out);
void write_arpa_file(const NGramModel& model, const std::string& path);

/// Parses ARPA text. Throws ParseError with a line number on malformed
/// input (bad counts, missing sections, missing \end\). Models without
/// <unk>/<s>/</s> entries get floor-probability unigrams injected so any
/// token sequence stays scorable.
NGramModel read_arpa(std::istream& in);
NGramModel read_arpa_file(const std::string& path);

}  // namespace ctcr
