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

#include "ctcr/ngram_lm.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ctcr/error.hpp"

namespace ctcr {

namespace {
constexpr char kSep = '\x1f';
}

std::string NGramModel::join(std::span<const std::string> words) {
  std::string key;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) key += kSep;
    key += words[i];
  }
  return key;
}

std::vector<std::string> NGramModel::split(std::string_view key) {
  std::vector<std::string> words;
  size_t start = 0;
  for (size_t i = 0; i <= key.size(); ++i) {
    if (i == key.size() || key[i] == kSep) {
      words.emplace_back(key.substr(start, i - start));
      start = i + 1;
    }
  }
  return words;
}

void NGramModel::finalize_vocab() {
  vocab_.assign(vocab_set_.begin(), vocab_set_.end());
  std::sort(vocab_.begin(), vocab_.end());
}

double NGramModel::log10_prob(std::span<const std::string> context,
                              std::string_view word) const {
  std::string target(word);
  if (!vocab_set_.count(target)) target = kUnknown;

  size_t ctx_len =
      std::min(context.size(), static_cast<size_t>(order_ - 1));
  std::vector<std::string> ctx;
  ctx.reserve(ctx_len);
  for (size_t i = context.size() - ctx_len; i < context.size(); ++i) {
    ctx.push_back(vocab_set_.count(context[i]) ? context[i]
                                               : std::string(kUnknown));
  }

  double backoff_sum = 0.0;
  while (true) {
    std::vector<std::string> key_words = ctx;
    key_words.push_back(target);
    const auto& table = prob_[key_words.size() - 1];
    auto it = table.find(join(key_words));
    if (it != table.end()) return backoff_sum + it->second;
    // Unigrams are stored for the whole vocab, so ctx is nonempty here.
    const auto& bo = backoff_[ctx.size() - 1];
    auto bo_it = bo.find(join(ctx));
    if (bo_it != bo.end()) backoff_sum += bo_it->second;
    ctx.erase(ctx.begin());
  }
}

double NGramModel::score_sequence(std::span<const std::string> tokens,
                                  bool append_end) const {
  std::vector<std::string> context;
  for (int i = 0; i < order_ - 1; ++i) context.emplace_back(kBegin);

  double total = 0.0;
  auto advance = [&](const std::string& word) {
    total += log10_prob(context, word);
    context.push_back(vocab_set_.count(word) ? word : std::string(kUnknown));
    if (context.size() > static_cast<size_t>(order_ - 1) && order_ > 1)
      context.erase(context.begin());
    if (order_ == 1) context.clear();
  };
  for (const std::string& token : tokens) advance(token);
  if (append_end) total += log10_prob(context, kEnd);
  return total;
}

namespace {

bool is_boundary(const std::string& w) {
  return w == NGramModel::kBegin || w == NGramModel::kEnd;
}

using CountMap = std::unordered_map<std::string, long>;

}  // namespace

NGramModel train_kn(const Corpus& corpus, int order, double discount) {
  if (order < 1 || order > 5)
    throw InvalidParameterError("order must be in 1..5, got " +
                                std::to_string(order));
  if (!(discount > 0.0 && discount < 1.0))
    throw InvalidParameterError("discount must be in (0,1)");

  NGramModel model;
  model.order_ = order;
  model.discount_ = discount;
  model.vocab_set_ = {NGramModel::kBegin, NGramModel::kEnd,
                      NGramModel::kUnknown};

  // Raw padded counts per order. <s> is skipped as a prediction target.
  std::vector<CountMap> raw(order);
  long sentences_used = 0;
  for (const auto& sentence : corpus.sentences) {
    if (sentence.empty()) continue;
    ++sentences_used;
    std::vector<std::string> padded;
    padded.reserve(sentence.size() + 2);
    padded.emplace_back(NGramModel::kBegin);
    for (const std::string& token : sentence) {
      if (is_boundary(token) || token == NGramModel::kUnknown)
        throw InvalidInputError("reserved token in corpus: " + token);
      if (token.find(kSep) != std::string::npos)
        throw InvalidInputError("corpus token contains control byte 0x1f");
      model.vocab_set_.insert(token);
      padded.push_back(token);
    }
    padded.emplace_back(NGramModel::kEnd);
    for (int k = 1; k <= order; ++k) {
      for (size_t pos = 0; pos + k <= padded.size(); ++pos) {
        if (padded[pos + k - 1] == NGramModel::kBegin) continue;
        ++raw[k - 1][NGramModel::join(
            std::span(padded).subspan(pos, static_cast<size_t>(k)))];
      }
    }
  }
  if (sentences_used == 0) throw InvalidParameterError("empty corpus");
  model.finalize_vocab();

  // Effective counts: raw at the top order, continuation counts below.
  // Continuation statistics only consider all-regular-word types, which is
  // what makes the distinct-left-context ratios exact.
  std::vector<CountMap> eff(order);
  eff[order - 1] = raw[order - 1];
  for (int k = order - 1; k >= 1; --k) {
    for (const auto& [key, unused_count] : raw[k]) {
      std::vector<std::string> words = NGramModel::split(key);
      if (std::any_of(words.begin(), words.end(), is_boundary)) continue;
      ++eff[k - 1][NGramModel::join(
          std::span(words).subspan(1, words.size() - 1))];
    }
  }

  // Context totals and distinct-follower counts per level.
  std::vector<CountMap> ctx_total(order), ctx_distinct(order);
  for (int k = 2; k <= order; ++k) {
    for (const auto& [key, count] : eff[k - 1]) {
      std::vector<std::string> words = NGramModel::split(key);
      std::string ctx = NGramModel::join(
          std::span(words).subspan(0, words.size() - 1));
      ctx_total[k - 1][ctx] += count;
      ctx_distinct[k - 1][ctx] += 1;
    }
  }
  long bottom_total = 0;
  for (const auto& [key, count] : eff[0]) bottom_total += count;

  // Entries to store: counted n-grams, every vocab unigram, and the prefix
  // context of any stored higher-order entry (its backoff weight needs a
  // line to live on).
  std::vector<std::set<std::string>> stored(order);
  for (int k = 1; k <= order; ++k)
    for (const auto& [key, unused] : eff[k - 1]) stored[k - 1].insert(key);
  for (const std::string& word : model.vocab_) stored[0].insert(word);
  for (int k = order; k >= 2; --k) {
    for (const std::string& key : stored[k - 1]) {
      std::vector<std::string> words = NGramModel::split(key);
      stored[k - 2].insert(NGramModel::join(
          std::span(words).subspan(0, words.size() - 1)));
    }
  }

  model.prob_.resize(order);
  model.backoff_.resize(std::max(order - 1, 0));

  // Bottom level: plain ratio of effective counts, constant floor for
  // zero-count vocab entries.
  for (const std::string& key : stored[0]) {
    auto it = eff[0].find(key);
    double p = (it != eff[0].end() && bottom_total > 0)
                   ? static_cast<double>(it->second) / bottom_total
                   : 0.0;
    model.prob_[0][key] =
        p > 0.0 ? std::log10(p) : NGramModel::kFloorLog10;
  }

  for (int k = 2; k <= order; ++k) {
    // Backoff weights first: gamma(ctx) = D * distinct / total.
    for (const auto& [ctx, total] : ctx_total[k - 1]) {
      double gamma = discount * ctx_distinct[k - 1][ctx] / total;
      model.backoff_[k - 2][ctx] = std::log10(gamma);
    }
    // Interpolated probabilities; the lower-order part reuses the query
    // routine over the already-complete shorter tables.
    for (const std::string& key : stored[k - 1]) {
      std::vector<std::string> words = NGramModel::split(key);
      std::string ctx = NGramModel::join(
          std::span(words).subspan(0, words.size() - 1));
      std::span<const std::string> lower_ctx =
          std::span(words).subspan(1, words.size() - 2);
      double lower =
          std::pow(10.0, model.log10_prob(lower_ctx, words.back()));
      auto total_it = ctx_total[k - 1].find(ctx);
      double p;
      if (total_it == ctx_total[k - 1].end()) {
        p = lower;  // context never counted at this level: weight-1 backoff
      } else {
        double total = static_cast<double>(total_it->second);
        auto cnt_it = eff[k - 1].find(key);
        double count = cnt_it == eff[k - 1].end()
                           ? 0.0
                           : static_cast<double>(cnt_it->second);
        double gamma = discount * ctx_distinct[k - 1][ctx] / total;
        p = std::max(count - discount, 0.0) / total + gamma * lower;
      }
      model.prob_[k - 1][key] = std::log10(p);
    }
  }
  return model;
}

}  // namespace ctcr
