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

#include "ctcr/alphabet.hpp"
#include "ctcr/posterior.hpp"

namespace ctcr {

/// CTC collapse: merge adjacent repeats, then delete blanks.
/// `path` holds symbol indices (blank = 0). Throws InvalidInputError when a
/// symbol is outside the alphabet.
Labeling collapse(std::span<const int> path, const Alphabet& alphabet);

struct GreedyResult {
  Labeling labeling;
  double log_prob;  // sum of argmax entries along the best path
};

/// Best-path decoding: argmax symbol per frame (ties -> lowest index),
/// collapsed.
GreedyResult greedy_decode(const PosteriorSequence& p);

/// log of the total probability of all paths that collapse to `labeling`.
/// Exact forward DP over the blank-augmented label, log-sum-exp stabilized.
/// Unreachable labelings score -inf; they are not an error.
double ctc_forward(const PosteriorSequence& p, std::span<const int> labeling);

/// log probability of the single best path that collapses to `labeling`
/// (same DP with max in place of sum).
double ctc_best_path(const PosteriorSequence& p,
                     std::span<const int> labeling);

struct BruteForceResult {
  Labeling labeling;
  double log_prob;
};

/// Exhaustive oracle: enumerates all C^T paths, aggregates probability by
/// collapsed labeling, returns the argmax (ties -> lexicographically
/// smallest labeling). Refuses instances with C^T > 1e6.
BruteForceResult brute_force_best_labeling(const PosteriorSequence& p);

}  // namespace ctcr
