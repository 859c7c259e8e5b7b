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

#include <cmath>
#include <limits>

namespace ctcr {

// All internal probability arithmetic is in the natural-log domain.
// kLogZero is the additive identity of log-sum-exp (probability 0).
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without overflow/underflow.
inline double log_add(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

/// log of a linear probability; maps 0 to kLogZero.
inline double log_prob(double p) { return p > 0.0 ? std::log(p) : kLogZero; }

inline constexpr double kLn10 = 2.302585092994045684017991454684;

/// log10 -> natural log.
inline double log10_to_ln(double x) { return x * kLn10; }

}  // namespace ctcr
