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

#include <nlohmann/json.hpp>
#include <set>
#include <string>
#include <vector>

#include "ctcr/textnorm.hpp"

namespace ctcr {

/// Minimal unit-cost edit count (insert/delete/substitute), O(|a|*|b|) DP.
template <typename Seq>
int edit_distance(const Seq& a, const Seq& b) {
  const size_t n = a.size(), m = b.size();
  std::vector<int> row(m + 1);
  for (size_t j = 0; j <= m; ++j) row[j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) {
      int sub = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
      diag = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, sub});
    }
  }
  return row[m];
}

struct EvalPair {
  std::string line_id;
  std::string hypothesis;
  std::string reference;
};

struct LineEval {
  std::string line_id;
  int char_edits = 0;
  int char_ref_len = 0;
  int word_edits = 0;
  int word_ref_len = 0;
  bool empty_reference = false;
};

struct EvalReport {
  std::vector<LineEval> per_line;
  double corpus_cer = 0.0;  // percent, micro-averaged
  double corpus_wer = 0.0;  // percent, micro-averaged
  // cumulative_*_hist[e] = number of lines with <= e edits; the last entry
  // equals the line count.
  std::vector<long> cumulative_char_hist;
  std::vector<long> cumulative_word_hist;
  double ref_char_len_mean = 0.0;
  double ref_char_len_std = 0.0;
  NormalizationMode mode;
  bool count_whitespace = true;
};

struct EvalOptions {
  NormalizationMode mode;
  bool count_whitespace = true;  // include spaces in character edits
};

/// Per-line char/word edit counts on normalized text, micro-averaged CER/WER
/// and cumulative error histograms. Empty pair list is an error. Lines with
/// an empty reference contribute |hypothesis| edits at ref length 0 and are
/// flagged.
EvalReport evaluate(const std::vector<EvalPair>& pairs,
                    const EvalOptions& options);

/// Fraction of reference word tokens absent from the lexicon. References
/// must already be normalized like the lexicon; zero total tokens is an
/// error.
double oov_rate(const std::set<std::string>& lexicon,
                const std::vector<std::string>& normalized_references);

nlohmann::json report_to_json(const EvalReport& report);

}  // namespace ctcr
