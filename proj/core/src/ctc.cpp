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

#include "ctcr/ctc.hpp"

#include <cmath>
#include <map>

#include "ctcr/error.hpp"
#include "ctcr/logmath.hpp"

namespace ctcr {

Labeling collapse(std::span<const int> path, const Alphabet& alphabet) {
  Labeling out;
  int prev = -1;
  for (int sym : path) {
    if (sym < 0 || sym >= alphabet.size())
      throw InvalidInputError("path symbol outside alphabet: " +
                              std::to_string(sym));
    if (sym != prev && sym != Alphabet::kBlank) out.push_back(sym);
    prev = sym;
  }
  return out;
}

GreedyResult greedy_decode(const PosteriorSequence& p) {
  Labeling path(p.num_frames());
  double total = 0.0;
  for (int t = 0; t < p.num_frames(); ++t) {
    int best = 0;
    double best_p = p.prob(t, 0);
    for (int c = 1; c < p.num_classes(); ++c) {
      if (p.prob(t, c) > best_p) {
        best_p = p.prob(t, c);
        best = c;
      }
    }
    path[t] = best;
    total += p.log_prob(t, best);
  }
  return GreedyResult{collapse(path, p.alphabet()), total};
}

namespace {

enum class DpMode { kSum, kMax };

double augmented_label_dp(const PosteriorSequence& p,
                          std::span<const int> labeling, DpMode mode) {
  const int t_max = p.num_frames();
  for (int sym : labeling) {
    if (sym <= 0 || sym >= p.num_classes())
      throw InvalidInputError("labeling symbol outside alphabet: " +
                              std::to_string(sym));
  }

  // Blank-augmented label: blank at even positions, labeling[i] at 2i+1.
  const int s_max = 2 * static_cast<int>(labeling.size()) + 1;
  auto sym_at = [&](int s) {
    return (s % 2 == 0) ? Alphabet::kBlank : labeling[s / 2];
  };
  auto combine = [mode](double a, double b) {
    return mode == DpMode::kSum ? log_add(a, b) : std::max(a, b);
  };

  std::vector<double> alpha(s_max, kLogZero), next(s_max, kLogZero);
  alpha[0] = p.log_prob(0, Alphabet::kBlank);
  if (s_max > 1) alpha[1] = p.log_prob(0, sym_at(1));

  for (int t = 1; t < t_max; ++t) {
    for (int s = 0; s < s_max; ++s) {
      double acc = alpha[s];
      if (s >= 1) acc = combine(acc, alpha[s - 1]);
      if (s >= 2 && sym_at(s) != Alphabet::kBlank &&
          sym_at(s) != sym_at(s - 2))
        acc = combine(acc, alpha[s - 2]);
      next[s] = acc == kLogZero ? kLogZero : acc + p.log_prob(t, sym_at(s));
    }
    alpha.swap(next);
  }

  double result = alpha[s_max - 1];
  if (s_max > 1) result = combine(result, alpha[s_max - 2]);
  return result;
}

}  // namespace

double ctc_forward(const PosteriorSequence& p, std::span<const int> labeling) {
  return augmented_label_dp(p, labeling, DpMode::kSum);
}

double ctc_best_path(const PosteriorSequence& p,
                     std::span<const int> labeling) {
  return augmented_label_dp(p, labeling, DpMode::kMax);
}

BruteForceResult brute_force_best_labeling(const PosteriorSequence& p) {
  const int t_max = p.num_frames();
  const int c_max = p.num_classes();
  double instance_size = std::pow(static_cast<double>(c_max), t_max);
  if (instance_size > 1e6)
    throw InvalidParameterError(
        "brute force refused: C^T = " + std::to_string(instance_size) +
        " exceeds 1e6 (T=" + std::to_string(t_max) +
        ", C=" + std::to_string(c_max) + ")");

  // Aggregate path probability per collapsed labeling; std::map keeps the
  // argmax tie-break lexicographic.
  std::map<Labeling, double> totals;
  Labeling path(t_max, 0);
  for (;;) {
    double prob = 1.0;
    for (int t = 0; t < t_max; ++t) prob *= p.prob(t, path[t]);
    totals[collapse(path, p.alphabet())] += prob;

    int t = t_max - 1;
    while (t >= 0 && path[t] == c_max - 1) path[t--] = 0;
    if (t < 0) break;
    ++path[t];
  }

  const Labeling* best = nullptr;
  double best_prob = -1.0;
  for (const auto& [labeling, prob] : totals) {
    if (prob > best_prob) {
      best_prob = prob;
      best = &labeling;
    }
  }
  return BruteForceResult{*best, log_prob(best_prob)};
}

}  // namespace ctcr
