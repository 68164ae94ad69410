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

#ifndef SUMGRAPH_ROUGE_H_
#define SUMGRAPH_ROUGE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumgraph/lexicon.h"

namespace sumgraph {

// ROUGE-1 overlap between a system summary and a reference.
struct RougeReport {
  double recall = 0.0;
  double precision = 0.0;
  double f_score = 0.0;
  size_t matched = 0;    // clipped unigram matches
  size_t ref_count = 0;  // reference content unigrams
  size_t sys_count = 0;  // system content unigrams
};

// Lowercased alphanumeric runs with stopwords removed. Bytes outside
// ASCII are treated as word characters so UTF-8 words stay whole. This
// tokenizer is deliberately independent of the summarizer's.
std::vector<std::string> RougeTokens(std::string_view text,
                                     const WordSet &stopwords);

RougeReport Rouge1(std::string_view system, std::string_view reference,
                   const WordSet &stopwords);

struct WeightedScore {
  double score = 0.0;
  size_t doc_count = 0;
};

// Sum(score * count) / Sum(count). Throws Error(kInvalidArgument) for an
// empty list or a zero count.
double WeightedAverage(std::span<const WeightedScore> values);

}  // namespace sumgraph

#endif  // SUMGRAPH_ROUGE_H_
