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

#include <stdexcept>
#include <string>

namespace ctcr {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input data (bad symbol, bad matrix, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Bad parameter value (beam width 0, empty lexicon, zero weights, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent configuration (mismatched alphabets, missing files, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File format violation. Carries a 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace ctcr
