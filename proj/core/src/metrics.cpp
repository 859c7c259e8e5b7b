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

#include "ctcr/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "ctcr/error.hpp"
#include "ctcr/utf8.hpp"

namespace ctcr {

namespace {

std::vector<uint32_t> char_sequence(const std::string& normalized,
                                    bool count_whitespace) {
  std::vector<uint32_t> cps = utf8_decode(normalized);
  if (!count_whitespace)
    std::erase_if(cps, [](uint32_t cp) { return cp == ' '; });
  return cps;
}

std::vector<long> cumulative_histogram(const std::vector<int>& edits) {
  int max_edits = edits.empty() ? 0 : *std::max_element(edits.begin(), edits.end());
  std::vector<long> hist(max_edits + 1, 0);
  for (int e : edits) ++hist[e];
  for (size_t i = 1; i < hist.size(); ++i) hist[i] += hist[i - 1];
  return hist;
}

}  // namespace

EvalReport evaluate(const std::vector<EvalPair>& pairs,
                    const EvalOptions& options) {
  if (pairs.empty()) throw InvalidParameterError("no evaluation pairs");

  EvalReport report;
  report.mode = options.mode;
  report.count_whitespace = options.count_whitespace;

  long total_char_edits = 0, total_char_len = 0;
  long total_word_edits = 0, total_word_len = 0;
  std::vector<int> char_edit_list, word_edit_list;
  double len_sum = 0.0, len_sq_sum = 0.0;

  for (const EvalPair& pair : pairs) {
    std::string hyp_norm = normalize(pair.hypothesis, options.mode);
    std::string ref_norm = normalize(pair.reference, options.mode);
    auto hyp_chars = char_sequence(hyp_norm, options.count_whitespace);
    auto ref_chars = char_sequence(ref_norm, options.count_whitespace);
    auto hyp_words = tokenize(hyp_norm);
    auto ref_words = tokenize(ref_norm);

    LineEval line;
    line.line_id = pair.line_id;
    line.char_ref_len = static_cast<int>(ref_chars.size());
    line.word_ref_len = static_cast<int>(ref_words.size());
    line.empty_reference = ref_chars.empty();
    line.char_edits = edit_distance(hyp_chars, ref_chars);
    line.word_edits = edit_distance(hyp_words, ref_words);

    total_char_edits += line.char_edits;
    total_char_len += line.char_ref_len;
    total_word_edits += line.word_edits;
    total_word_len += line.word_ref_len;
    char_edit_list.push_back(line.char_edits);
    word_edit_list.push_back(line.word_edits);
    len_sum += line.char_ref_len;
    len_sq_sum += static_cast<double>(line.char_ref_len) * line.char_ref_len;
    report.per_line.push_back(std::move(line));
  }

  const double n = static_cast<double>(pairs.size());
  report.corpus_cer =
      total_char_len > 0 ? 100.0 * total_char_edits / total_char_len : 0.0;
  report.corpus_wer =
      total_word_len > 0 ? 100.0 * total_word_edits / total_word_len : 0.0;
  report.cumulative_char_hist = cumulative_histogram(char_edit_list);
  report.cumulative_word_hist = cumulative_histogram(word_edit_list);
  report.ref_char_len_mean = len_sum / n;
  double var = len_sq_sum / n - report.ref_char_len_mean * report.ref_char_len_mean;
  report.ref_char_len_std = std::sqrt(std::max(0.0, var));
  return report;
}

double oov_rate(const std::set<std::string>& lexicon,
                const std::vector<std::string>& normalized_references) {
  if (normalized_references.empty())
    throw InvalidParameterError("empty reference set");
  long total = 0, missing = 0;
  for (const std::string& ref : normalized_references) {
    for (const std::string& token : tokenize(ref)) {
      ++total;
      if (!lexicon.count(token)) ++missing;
    }
  }
  if (total == 0)
    throw InvalidParameterError("reference set contains no word tokens");
  return static_cast<double>(missing) / static_cast<double>(total);
}

nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json per_line = nlohmann::json::array();
  for (const LineEval& line : report.per_line) {
    per_line.push_back({{"line_id", line.line_id},
                        {"char_edits", line.char_edits},
                        {"char_ref_len", line.char_ref_len},
                        {"word_edits", line.word_edits},
                        {"word_ref_len", line.word_ref_len},
                        {"empty_reference", line.empty_reference}});
  }
  return nlohmann::json{
      {"schema_version", 1},
      {"config",
       {{"case_sensitive", report.mode.case_sensitive},
        {"keep_punctuation", report.mode.keep_punctuation},
        {"count_whitespace", report.count_whitespace}}},
      {"line_count", report.per_line.size()},
      {"corpus_cer", report.corpus_cer},
      {"corpus_wer", report.corpus_wer},
      {"ref_char_len_mean", report.ref_char_len_mean},
      {"ref_char_len_std", report.ref_char_len_std},
      {"cumulative_char_hist", report.cumulative_char_hist},
      {"cumulative_word_hist", report.cumulative_word_hist},
      {"per_line", std::move(per_line)}};
}

}  // namespace ctcr
