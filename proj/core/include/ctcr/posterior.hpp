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
#include <vector>

#include "ctcr/alphabet.hpp"

namespace ctcr {

/// A T x C matrix of per-frame distributions over the alphabet-with-blank.
/// Immutable after construction; rows are validated to be stochastic.
class PosteriorSequence {
 public:
  /// `frames` is row-major T*C linear probabilities. Every row must sum to 1
  /// within 1e-6 and all entries must lie in [0, 1]; T >= 1.
  PosteriorSequence(Alphabet alphabet, int num_frames,
                    std::vector<double> frames);

  int num_frames() const { return num_frames_; }
  int num_classes() const { return alphabet_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }

  double prob(int t, int c) const {
    return frames_[static_cast<size_t>(t) * alphabet_.size() + c];
  }
  double log_prob(int t, int c) const {
    return log_frames_[static_cast<size_t>(t) * alphabet_.size() + c];
  }

 private:
  Alphabet alphabet_;
  int num_frames_;
  std::vector<double> frames_;
  std::vector<double> log_frames_;
};

// Canonical text form:
//   line 1:       "T C"
//   line 2:       escaped alphabet, blank first as \0
//   lines 3..T+2: C space-separated floats, row-stochastic
// Binary form: magic "CTCP", u32le T, u32le C, u32le alphabet byte length,
// escaped alphabet bytes, T*C f32le row-major frames. Reads sniff the magic.

PosteriorSequence read_posterior(std::istream& in);
PosteriorSequence read_posterior_file(const std::string& path);

void write_posterior_text(const PosteriorSequence& p, std::ostream& out);
void write_posterior_binary(const PosteriorSequence& p, std::ostream& out);
void write_posterior_file(const PosteriorSequence& p, const std::string& path,
                          bool binary = false);

}  // namespace ctcr
