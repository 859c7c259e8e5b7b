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

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ctcr {

/// Tokenized training text. Sentences are word lists after normalization.
struct Corpus {
  std::vector<std::vector<std::string>> sentences;
};

/// Interpolated Kneser-Ney n-gram model with a single fixed discount.
///
/// Counting: each sentence is padded with <s> and </s>; <s> is never a
/// prediction target. Lower-order levels use continuation counts (distinct
/// left extensions) derived from the all-regular-word types one order up.
/// The bottom level is the plain count ratio; zero-count vocab entries get
/// the constant floor 10^-99 so arbitrary text always scores finite.
///
/// Storage and queries are in log10 (ARPA convention). Queries follow the
/// standard backoff recursion: unseen n-gram = backoff(context) + shorter
/// query; every vocab word has a stored unigram so the recursion grounds.
class NGramModel {
 public:
  static constexpr const char* kBegin = "<s>";
  static constexpr const char* kEnd = "</s>";
  static constexpr const char* kUnknown = "<unk>";
  static constexpr double kFloorLog10 = -99.0;

  int order() const { return order_; }
  double discount() const { return discount_; }
  const std::vector<std::string>& vocab() const { return vocab_; }
  bool in_vocab(std::string_view word) const {
    return vocab_set_.count(std::string(word)) > 0;
  }

  /// log10 P(word | context). OOV words (as target or context) are mapped
  /// to <unk>; context is trimmed to the last order-1 words.
  double log10_prob(std::span<const std::string> context,
                    std::string_view word) const;

  /// log10 probability of the token sequence: begin-padded context, end
  /// token appended when append_end (the default scoring form).
  double score_sequence(std::span<const std::string> tokens,
                        bool append_end = true) const;

  /// Stored n-grams at `order_k` in (words, log10 prob) form, unsorted.
  const std::unordered_map<std::string, double>& prob_table(int order_k) const {
    return prob_.at(order_k - 1);
  }
  /// Stored backoff weights for contexts of length `len`.
  const std::unordered_map<std::string, double>& backoff_table(int len) const {
    return backoff_.at(len - 1);
  }

  /// Join/split for the internal \x1f-separated n-gram keys.
  static std::string join(std::span<const std::string> words);
  static std::vector<std::string> split(std::string_view key);

 private:
  friend NGramModel train_kn(const Corpus&, int, double);
  friend NGramModel read_arpa(std::istream&);

  void finalize_vocab();

  int order_ = 0;
  double discount_ = 0.0;
  std::vector<std::string> vocab_;  // sorted
  std::unordered_set<std::string> vocab_set_;
  // prob_[k-1]: joined k-gram -> log10 p;  backoff_[len-1]: context -> log10 w
  std::vector<std::unordered_map<std::string, double>> prob_;
  std::vector<std::unordered_map<std::string, double>> backoff_;
};

/// Trains the model described above. Errors: empty corpus, order outside
/// 1..5, discount outside (0,1), reserved tokens in the corpus.
NGramModel train_kn(const Corpus& corpus, int order, double discount = 0.75);

}  // namespace ctcr
