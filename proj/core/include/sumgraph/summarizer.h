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

#ifndef SUMGRAPH_SUMMARIZER_H_
#define SUMGRAPH_SUMMARIZER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumgraph/graph.h"
#include "sumgraph/keywords.h"
#include "sumgraph/lexicon.h"
#include "sumgraph/text.h"
#include "sumgraph/triples.h"

namespace sumgraph {

// Pipeline flavours.
//   kWinnow:       shrink the document to the sentences mentioning the
//                  most connected nodes, then summarize that.
//   kNonWinnow:    rank sentences by summed node connectivity.
//   kNonWinnowKS:  rank by summed connectivity x keyphrase score.
enum class Variant { kWinnow, kNonWinnow, kNonWinnowKS };

std::string_view VariantName(Variant variant);  // "w", "nw", "nw-ks"
Variant ParseVariant(std::string_view name);    // throws kInvalidArgument

// Length normalization f(L) applied as score / f(L), L = token count.
enum class Normalization { kNone, kIdentity, kSqrt, kLog };

std::string_view NormalizationName(Normalization normalization);
Normalization ParseNormalization(std::string_view name);

struct SummaryConfig {
  Variant variant = Variant::kNonWinnowKS;
  double ratio = 0.15;  // summary length as a fraction of the sentences
  int winnow_top_k = 3;  // first k tried when winnowing; 3 or 4
  // Winnowing keeps top_k when the intermediate document holds at least
  // winnow_min_fraction of the sentences, otherwise widens to 4 nodes.
  // winnow_max_fraction is the upper end of the intended band and is
  // reported but not enforced.
  double winnow_min_fraction = 0.60;
  double winnow_max_fraction = 0.70;
  Normalization normalize = Normalization::kNone;
  // When set, sentences are taken in rank order while the running word
  // count stays within the budget, instead of by ratio.
  std::optional<size_t> word_budget;
  KeywordOptions keywords;
  GraphOptions graph;

  // Throws Error(kInvalidArgument) on out-of-range fields.
  void Validate() const;
};

struct ScoredSentence {
  size_t sentence_index = 0;
  double raw_score = 0.0;
  size_t rank = 0;  // 0 is the best sentence
};

struct SummaryResult {
  std::vector<size_t> selected;  // ascending, i.e. document order
  // One entry per sentence, in sentence order. For the winnowing variant,
  // sentences outside the intermediate document rank after all of the
  // sentences inside it.
  std::vector<ScoredSentence> scores;
  SummaryConfig config;
  std::optional<size_t> intermediate_size;  // winnowing only
  bool keyphrase_fallback = false;  // no subject matched a keyphrase
  std::vector<std::string> diagnostics;
};

// max(1, floor(ratio * n)), or 0 for an empty document.
size_t SummaryLength(size_t sentence_count, double ratio);

// Sum of connectivity over the graph nodes occurring in each sentence.
// A node counts once per sentence however often it occurs.
std::vector<ScoredSentence> ScoreByConnectivity(const Document &doc,
                                                const EntityGraph &graph);

// Like ScoreByConnectivity, but each node contributes connectivity times
// the score of its best matching keyphrase (0 when none matches).
std::vector<ScoredSentence> ScoreByConnectivityAndKeyphrase(
    const Document &doc, const EntityGraph &graph,
    std::span<const Keyphrase> keyphrases);

// Fallback when the graph is empty: sum of the scores of the keyphrase
// occurrences in each sentence.
std::vector<ScoredSentence> ScoreByKeyphrases(
    const Document &doc, std::span<const Keyphrase> keyphrases);

std::vector<ScoredSentence> NormalizeScores(
    std::span<const ScoredSentence> scores, const Document &doc,
    Normalization normalization);

// Sentence indices ordered best first: score descending, then index.
std::vector<size_t> RankOrder(std::span<const ScoredSentence> scores);

// Selects SummaryLength(scores.size(), ratio) sentences by RankOrder and
// returns them in document order, with ranks filled in.
SummaryResult SelectSummary(std::span<const ScoredSentence> scores,
                            double ratio);

struct WinnowResult {
  Document document;                  // re-indexed intermediate document
  std::vector<size_t> original_index;  // intermediate -> original sentence
  size_t top_k = 0;
  bool fell_back = false;  // no sentence mentions a top node
};

// Keeps the sentences mentioning any of the top_k most connected nodes.
WinnowResult Winnow(const Document &doc, const EntityGraph &graph,
                    const SummaryConfig &config);

// Intermediate products of one pipeline pass.
struct Analysis {
  KeywordAnalysis keywords;
  std::vector<Triple> raw_triples;
  std::vector<Triple> triples;   // cleaned and anaphora-resolved
  std::vector<Triple> filtered;  // subjects matching a keyphrase
  EntityGraph graph;
};

class Summarizer {
 public:
  explicit Summarizer(Lexicons lexicons = Lexicons::Default(),
                      SummaryConfig config = {});

  const SummaryConfig &config() const { return config_; }
  const Lexicons &lexicons() const { return lexicons_; }

  // Runs keyword extraction, triple extraction (or takes the given
  // triples), cleanup, anaphora resolution, filtering and graph building.
  Analysis Analyze(const Document &doc,
                   std::optional<std::span<const Triple>> triples = {}) const;

  SummaryResult Summarize(
      const Document &doc,
      std::optional<std::span<const Triple>> triples = {}) const;

 private:
  std::vector<ScoredSentence> Score(const Document &doc,
                                    const Analysis &analysis,
                                    bool *fallback) const;
  std::vector<size_t> Take(const Document &doc,
                           std::span<const size_t> order) const;

  Lexicons lexicons_;
  SummaryConfig config_;
};

// Selected sentences in document order, one per line.
std::string RenderSummary(const Document &doc, const SummaryResult &result);

}  // namespace sumgraph

#endif  // SUMGRAPH_SUMMARIZER_H_
