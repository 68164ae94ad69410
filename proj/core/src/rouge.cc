// Copyright 2026 The sumgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sumgraph/rouge.h"

#include <algorithm>
#include <map>

#include "sumgraph/error.h"

namespace sumgraph {
namespace {

bool IsWordByte(char c) {
  auto u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') ||
         (u >= 'A' && u <= 'Z') || u >= 0x80;
}

std::map<std::string, size_t> Counts(const std::vector<std::string> &tokens) {
  std::map<std::string, size_t> counts;
  for (const std::string &t : tokens) ++counts[t];
  return counts;
}

}  // namespace

std::vector<std::string> RougeTokens(std::string_view text,
                                     const WordSet &stopwords) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !IsWordByte(text[i])) ++i;
    size_t begin = i;
    while (i < text.size() && IsWordByte(text[i])) ++i;
    if (begin == i) break;
    std::string word(text.substr(begin, i - begin));
    for (char &c : word) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    if (!stopwords.Contains(word)) tokens.push_back(std::move(word));
  }
  return tokens;
}

RougeReport Rouge1(std::string_view system, std::string_view reference,
                   const WordSet &stopwords) {
  std::vector<std::string> sys = RougeTokens(system, stopwords);
  std::vector<std::string> ref = RougeTokens(reference, stopwords);
  RougeReport report;
  report.sys_count = sys.size();
  report.ref_count = ref.size();

  std::map<std::string, size_t> sys_counts = Counts(sys);
  for (const auto &[word, count] : Counts(ref)) {
    auto it = sys_counts.find(word);
    if (it != sys_counts.end()) report.matched += std::min(count, it->second);
  }

  if (report.ref_count > 0) {
    report.recall = static_cast<double>(report.matched) /
                    static_cast<double>(report.ref_count);
  }
  if (report.sys_count > 0) {
    report.precision = static_cast<double>(report.matched) /
                       static_cast<double>(report.sys_count);
  }
  if (report.recall + report.precision > 0.0) {
    report.f_score = 2.0 * report.recall * report.precision /
                     (report.recall + report.precision);
  }
  return report;
}

double WeightedAverage(std::span<const WeightedScore> values) {
  if (values.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                "weighted average of an empty list");
  }
  double sum = 0.0;
  double weight = 0.0;
  for (const WeightedScore &v : values) {
    if (v.doc_count == 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "weighted average needs document counts >= 1");
    }
    sum += v.score * static_cast<double>(v.doc_count);
    weight += static_cast<double>(v.doc_count);
  }
  return sum / weight;
}

}  // namespace sumgraph
