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

#include "ctcr/arpa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ctcr/error.hpp"

namespace ctcr {

namespace {

std::string format_log10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v + 0.0);
  return buf;
}

std::string words_of_key(const std::string& key) {
  std::string out = key;
  std::replace(out.begin(), out.end(), '\x1f', ' ');
  return out;
}

}  // namespace

void write_arpa(const NGramModel& model, std::ostream& out) {
  const int order = model.order();
  out << "\\data\\\n";
  for (int k = 1; k <= order; ++k)
    out << "ngram " << k << '=' << model.prob_table(k).size() << '\n';

  for (int k = 1; k <= order; ++k) {
    std::vector<std::string> keys;
    keys.reserve(model.prob_table(k).size());
    for (const auto& [key, unused] : model.prob_table(k)) keys.push_back(key);
    std::sort(keys.begin(), keys.end());

    out << "\n\\" << k << "-grams:\n";
    const auto& probs = model.prob_table(k);
    for (const std::string& key : keys) {
      out << format_log10(probs.at(key)) << '\t' << words_of_key(key);
      if (k < order) {
        const auto& bo = model.backoff_table(k);
        auto it = bo.find(key);
        out << '\t' << format_log10(it == bo.end() ? 0.0 : it->second);
      }
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

void write_arpa_file(const NGramModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open for writing: " + path);
  write_arpa(model, out);
  if (!out) throw ParseError("write failed: " + path);
}

NGramModel read_arpa(std::istream& in) {
  std::string line;
  long line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  // Skip everything before \data\ (ARPA files may carry a preamble).
  bool found_data = false;
  while (next_line()) {
    if (line == "\\data\\") {
      found_data = true;
      break;
    }
  }
  if (!found_data) throw ParseError("missing \\data\\ section", line_no);

  std::vector<long> declared;
  std::string pending_header;
  while (next_line()) {
    if (line.empty()) break;
    if (line[0] == '\\') {  // section follows without a blank separator
      pending_header = line;
      break;
    }
    long k = 0, count = -1;
    if (std::sscanf(line.c_str(), "ngram %ld=%ld", &k, &count) != 2 ||
        k != static_cast<long>(declared.size()) + 1 || count < 0)
      throw ParseError("bad ngram count line: " + line, line_no);
    declared.push_back(count);
  }
  if (declared.empty()) throw ParseError("no ngram counts declared", line_no);
  const int order = static_cast<int>(declared.size());

  NGramModel model;
  model.order_ = order;
  model.discount_ = std::numeric_limits<double>::quiet_NaN();
  model.prob_.resize(order);
  model.backoff_.resize(std::max(order - 1, 0));

  bool saw_end = false;
  int k = 0;  // current section order, 0 = none
  bool use_pending = !pending_header.empty();
  while (use_pending || next_line()) {
    if (use_pending) {
      line = pending_header;
      use_pending = false;
    }
    if (line.empty()) continue;
    if (line == "\\end\\") {
      saw_end = true;
      break;
    }
    if (line[0] == '\\') {
      int section = 0;
      if (std::sscanf(line.c_str(), "\\%d-grams:", &section) != 1 ||
          section < 1 || section > order)
        throw ParseError("unexpected section header: " + line, line_no);
      k = section;
      continue;
    }
    if (k == 0) throw ParseError("entry outside any section", line_no);

    std::istringstream fields(line);
    double logp;
    if (!(fields >> logp))
      throw ParseError("bad log-probability field", line_no);
    std::vector<std::string> words(k);
    for (int i = 0; i < k; ++i) {
      if (!(fields >> words[i]))
        throw ParseError("too few words for " + std::to_string(k) + "-gram",
                         line_no);
    }
    double backoff;
    bool has_backoff = static_cast<bool>(fields >> backoff);
    if (has_backoff && k == order)
      throw ParseError("backoff on top-order entry", line_no);

    std::string key = NGramModel::join(words);
    model.prob_[k - 1][key] = logp;
    if (has_backoff && backoff != 0.0) model.backoff_[k - 1][key] = backoff;
    if (k == 1) model.vocab_set_.insert(words[0]);
  }
  if (!saw_end) throw ParseError("missing \\end\\ marker", line_no);

  for (int i = 1; i <= order; ++i) {
    if (static_cast<long>(model.prob_[i - 1].size()) != declared[i - 1])
      throw ParseError("ngram " + std::to_string(i) + " count mismatch: " +
                       std::to_string(model.prob_[i - 1].size()) +
                       " entries vs declared " +
                       std::to_string(declared[i - 1]));
  }

  for (const char* special :
       {NGramModel::kUnknown, NGramModel::kBegin, NGramModel::kEnd}) {
    if (!model.vocab_set_.count(special)) {
      model.vocab_set_.insert(special);
      model.prob_[0][special] = NGramModel::kFloorLog10;
    }
  }
  model.finalize_vocab();
  return model;
}

NGramModel read_arpa_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open ARPA file: " + path);
  try {
    return read_arpa(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace ctcr
