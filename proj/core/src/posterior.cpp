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

#include "ctcr/posterior.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ctcr/error.hpp"
#include "ctcr/logmath.hpp"

namespace ctcr {

namespace {

constexpr char kMagic[4] = {'C', 'T', 'C', 'P'};
constexpr double kRowSumTolerance = 1e-6;

uint32_t read_u32le(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw ParseError("truncated binary posterior file");
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

void write_u32le(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                        static_cast<unsigned char>((v >> 8) & 0xFF),
                        static_cast<unsigned char>((v >> 16) & 0xFF),
                        static_cast<unsigned char>((v >> 24) & 0xFF)};
  out.write(reinterpret_cast<char*>(b), 4);
}

}  // namespace

PosteriorSequence::PosteriorSequence(Alphabet alphabet, int num_frames,
                                     std::vector<double> frames)
    : alphabet_(std::move(alphabet)),
      num_frames_(num_frames),
      frames_(std::move(frames)) {
  if (num_frames_ < 1) throw InvalidInputError("posterior needs T >= 1");
  const size_t c = static_cast<size_t>(alphabet_.size());
  if (frames_.size() != static_cast<size_t>(num_frames_) * c)
    throw InvalidInputError("posterior frame buffer size mismatch");
  for (int t = 0; t < num_frames_; ++t) {
    double sum = 0.0;
    for (size_t j = 0; j < c; ++j) {
      double v = frames_[t * c + j];
      if (!(v >= 0.0 && v <= 1.0))
        throw InvalidInputError("posterior entry outside [0,1] at frame " +
                                std::to_string(t));
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance)
      throw InvalidInputError("posterior row " + std::to_string(t) +
                              " sums to " + std::to_string(sum));
  }
  log_frames_.resize(frames_.size());
  for (size_t i = 0; i < frames_.size(); ++i)
    log_frames_[i] = log_prob(frames_[i]);
}

namespace {

PosteriorSequence read_posterior_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty posterior file", 1);
  std::istringstream header(line);
  long t = 0, c = 0;
  if (!(header >> t >> c) || t < 1 || c < 2)
    throw ParseError("bad posterior header, expected 'T C'", 1);

  if (!std::getline(in, line)) throw ParseError("missing alphabet line", 2);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  Alphabet alphabet = Alphabet::from_escaped(line);
  if (alphabet.size() != c)
    throw ParseError("alphabet size " + std::to_string(alphabet.size()) +
                         " does not match C=" + std::to_string(c),
                     2);

  std::vector<double> frames;
  frames.reserve(static_cast<size_t>(t) * c);
  for (long row = 0; row < t; ++row) {
    if (!std::getline(in, line))
      throw ParseError("missing posterior row", row + 3);
    std::istringstream values(line);
    for (long j = 0; j < c; ++j) {
      double v;
      if (!(values >> v))
        throw ParseError("bad float in posterior row", row + 3);
      frames.push_back(v);
    }
  }
  return PosteriorSequence(std::move(alphabet), static_cast<int>(t),
                           std::move(frames));
}

PosteriorSequence read_posterior_binary(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0)
    throw ParseError("bad magic in binary posterior file");
  uint32_t t = read_u32le(in);
  uint32_t c = read_u32le(in);
  uint32_t alpha_len = read_u32le(in);
  std::string alpha_line(alpha_len, '\0');
  in.read(alpha_line.data(), alpha_len);
  if (!in) throw ParseError("truncated alphabet block");
  Alphabet alphabet = Alphabet::from_escaped(alpha_line);
  if (alphabet.size() != static_cast<int>(c))
    throw ParseError("alphabet size does not match C");

  std::vector<float> raw(static_cast<size_t>(t) * c);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size() * sizeof(float)));
  if (!in) throw ParseError("truncated frame block");
  std::vector<double> frames(raw.begin(), raw.end());
  return PosteriorSequence(std::move(alphabet), static_cast<int>(t),
                           std::move(frames));
}

}  // namespace

PosteriorSequence read_posterior(std::istream& in) {
  int first = in.peek();
  if (first == 'C') return read_posterior_binary(in);
  return read_posterior_text(in);
}

PosteriorSequence read_posterior_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open posterior file: " + path);
  try {
    return read_posterior(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

void write_posterior_text(const PosteriorSequence& p, std::ostream& out) {
  out << p.num_frames() << ' ' << p.num_classes() << '\n';
  out << p.alphabet().escaped() << '\n';
  char buf[32];
  for (int t = 0; t < p.num_frames(); ++t) {
    for (int c = 0; c < p.num_classes(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.9g", p.prob(t, c));
      out << (c ? " " : "") << buf;
    }
    out << '\n';
  }
}

void write_posterior_binary(const PosteriorSequence& p, std::ostream& out) {
  out.write(kMagic, 4);
  write_u32le(out, static_cast<uint32_t>(p.num_frames()));
  write_u32le(out, static_cast<uint32_t>(p.num_classes()));
  std::string alpha = p.alphabet().escaped();
  write_u32le(out, static_cast<uint32_t>(alpha.size()));
  out.write(alpha.data(), static_cast<std::streamsize>(alpha.size()));
  for (int t = 0; t < p.num_frames(); ++t) {
    for (int c = 0; c < p.num_classes(); ++c) {
      float v = static_cast<float>(p.prob(t, c));
      static_assert(sizeof(float) == 4);
      out.write(reinterpret_cast<char*>(&v), 4);
    }
  }
}

void write_posterior_file(const PosteriorSequence& p, const std::string& path,
                          bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open for writing: " + path);
  if (binary)
    write_posterior_binary(p, out);
  else
    write_posterior_text(p, out);
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace ctcr
