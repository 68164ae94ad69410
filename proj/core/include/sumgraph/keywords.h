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

#ifndef SUMGRAPH_KEYWORDS_H_
#define SUMGRAPH_KEYWORDS_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sumgraph/lexicon.h"
#include "sumgraph/text.h"

namespace sumgraph {

// A maximal run of keyword tokens within one sentence.
using Segment = std::vector<Token>;

struct SentenceCandidates {
  size_t sentence_index = 0;
  std::vector<Segment> segments;
};

// Cuts the sentence's token stream at punctuation, stopwords and verbs.
// Delimiters are discarded; each remaining maximal run is a segment.
// Punctuation is detected from the sentence text between token spans, so
// "kind, thus" cuts after "kind" even though the comma is not a token.
std::vector<Segment> ExtractCandidates(const Sentence &sentence,
                                       const WordSet &stopwords,
                                       const VerbLexicon &verbs);

std::vector<SentenceCandidates> ExtractCandidates(const Document &doc,
                                                  const Lexicons &lexicons);

// Per-keyword counts. Counts are exact integers; score() is the ratio
// degree / frequency in double precision.
struct KeywordStats {
  std::string keyword;
  int64_t frequency = 0;
  int64_t degree = 0;

  double score() const {
    return frequency == 0 ? 0.0 : static_cast<double>(degree) /
                                      static_cast<double>(frequency);
  }
};

struct KeywordOptions {
  // Add each occurrence's own count to its degree, as RAKE does. Off by
  // default: degree counts only the other keyword occurrences.
  bool count_self = false;
};

using KeywordTable = std::map<std::string, KeywordStats, std::less<>>;

// frequency(k) is the number of occurrences of k across all segments.
// For every occurrence of k, degree(k) grows by the number of other
// keyword occurrences in the same sentence's segments.
KeywordTable ComputeKeywordStats(std::span<const SentenceCandidates> candidates,
                                 const KeywordOptions &options = {});

struct Occurrence {
  size_t sentence_index = 0;
  Span span;  // segment extent within the sentence text

  bool operator==(const Occurrence &other) const = default;
};

struct Keyphrase {
  std::vector<std::string> words;  // normalized keywords, in order
  std::vector<Occurrence> occurrences;
  double score = 0.0;  // sum of member keyword scores

  // Member words split into plain terms ("j. k. rowling" -> j, k, rowling).
  std::vector<std::string> Terms() const;
};

// One keyphrase per distinct normalized word sequence, ordered by first
// occurrence in the document.
std::vector<Keyphrase> ScoreKeyphrases(
    const KeywordTable &stats, std::span<const SentenceCandidates> candidates);

struct KeywordAnalysis {
  std::vector<SentenceCandidates> candidates;
  KeywordTable stats;
  std::vector<Keyphrase> keyphrases;
};

KeywordAnalysis AnalyzeKeywords(const Document &doc, const Lexicons &lexicons,
                                const KeywordOptions &options = {});

}  // namespace sumgraph

#endif  // SUMGRAPH_KEYWORDS_H_
