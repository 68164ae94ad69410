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

#include "sumgraph/summarizer.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "sumgraph/error.h"

namespace sumgraph {
namespace {

// Graph nodes whose terms occur contiguously in the sentence, each once.
std::vector<size_t> NodesIn(const Sentence &sentence,
                            const EntityGraph &graph) {
  std::vector<std::string> terms = SentenceTerms(sentence);
  std::vector<size_t> present;
  for (size_t v = 0; v < graph.size(); ++v) {
    if (ContainsRun(terms, graph.terms(v))) present.push_back(v);
  }
  return present;
}

bool Matches(const std::vector<std::string> &a,
             const std::vector<std::string> &b) {
  return a == b || ContainsRun(a, b) || ContainsRun(b, a);
}

std::vector<ScoredSentence> Unranked(const Document &doc) {
  std::vector<ScoredSentence> scores(doc.size());
  for (size_t i = 0; i < doc.size(); ++i) scores[i].sentence_index = i;
  return scores;
}

void AssignRanks(std::span<const size_t> order,
                 std::vector<ScoredSentence> *scores) {
  for (size_t r = 0; r < order.size(); ++r) (*scores)[order[r]].rank = r;
}

}  // namespace

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kWinnow: return "w";
    case Variant::kNonWinnow: return "nw";
    case Variant::kNonWinnowKS: return "nw-ks";
  }
  return "?";
}

Variant ParseVariant(std::string_view name) {
  std::string n = ToLower(name);
  std::replace(n.begin(), n.end(), '_', '-');
  if (n == "w" || n == "summ-w") return Variant::kWinnow;
  if (n == "nw" || n == "summ-nw") return Variant::kNonWinnow;
  if (n == "nw-ks" || n == "nw-k*s" || n == "summ-nw-k*s") {
    return Variant::kNonWinnowKS;
  }
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown variant '{}' (expected w, nw or nw-ks)",
                          name));
}

std::string_view NormalizationName(Normalization normalization) {
  switch (normalization) {
    case Normalization::kNone: return "none";
    case Normalization::kIdentity: return "identity";
    case Normalization::kSqrt: return "sqrt";
    case Normalization::kLog: return "log";
  }
  return "?";
}

Normalization ParseNormalization(std::string_view name) {
  std::string n = ToLower(name);
  if (n == "none") return Normalization::kNone;
  if (n == "identity") return Normalization::kIdentity;
  if (n == "sqrt") return Normalization::kSqrt;
  if (n == "log") return Normalization::kLog;
  throw Error(ErrorKind::kInvalidArgument,
              fmt::format("unknown normalization '{}' (expected none, "
                          "identity, sqrt or log)",
                          name));
}

void SummaryConfig::Validate() const {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("ratio must be in (0, 1], got {}", ratio));
  }
  if (winnow_top_k != 3 && winnow_top_k != 4) {
    throw Error(ErrorKind::kInvalidArgument,
                fmt::format("winnow_top_k must be 3 or 4, got {}",
                            winnow_top_k));
  }
  if (!(winnow_min_fraction >= 0.0 &&
        winnow_min_fraction <= winnow_max_fraction &&
        winnow_max_fraction <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "winnow target must satisfy 0 <= min <= max <= 1");
  }
  if (word_budget && *word_budget == 0) {
    throw Error(ErrorKind::kInvalidArgument, "word budget must be positive");
  }
}

size_t SummaryLength(size_t sentence_count, double ratio) {
  if (sentence_count == 0) return 0;
  // The epsilon keeps products such as 0.1 * 30 from flooring to 2.
  double target = std::floor(ratio * static_cast<double>(sentence_count) + 1e-9);
  size_t length = target < 1.0 ? 1 : static_cast<size_t>(target);
  return std::min(length, sentence_count);
}

std::vector<ScoredSentence> ScoreByConnectivity(const Document &doc,
                                                const EntityGraph &graph) {
  std::vector<ScoredSentence> scores = Unranked(doc);
  for (const Sentence &sentence : doc.sentences) {
    double sum = 0.0;
    for (size_t v : NodesIn(sentence, graph)) {
      sum += static_cast<double>(graph.connectivity(v));
    }
    scores[sentence.index].raw_score = sum;
  }
  AssignRanks(RankOrder(scores), &scores);
  return scores;
}

std::vector<ScoredSentence> ScoreByConnectivityAndKeyphrase(
    const Document &doc, const EntityGraph &graph,
    std::span<const Keyphrase> keyphrases) {
  std::vector<std::vector<std::string>> phrase_terms;
  phrase_terms.reserve(keyphrases.size());
  for (const Keyphrase &k : keyphrases) phrase_terms.push_back(k.Terms());

  std::vector<double> node_score(graph.size(), 0.0);
  for (size_t v = 0; v < graph.size(); ++v) {
    double best = 0.0;
    bool found = false;
    for (size_t k = 0; k < keyphrases.size(); ++k) {
      if (phrase_terms[k].empty() || !Matches(graph.terms(v), phrase_terms[k])) {
        continue;
      }
      if (!found || keyphrases[k].score > best) best = keyphrases[k].score;
      found = true;
    }
    node_score[v] = static_cast<double>(graph.connectivity(v)) * best;
  }

  std::vector<ScoredSentence> scores = Unranked(doc);
  for (const Sentence &sentence : doc.sentences) {
    double sum = 0.0;
    for (size_t v : NodesIn(sentence, graph)) sum += node_score[v];
    scores[sentence.index].raw_score = sum;
  }
  AssignRanks(RankOrder(scores), &scores);
  return scores;
}

std::vector<ScoredSentence> ScoreByKeyphrases(
    const Document &doc, std::span<const Keyphrase> keyphrases) {
  std::vector<ScoredSentence> scores = Unranked(doc);
  for (const Keyphrase &k : keyphrases) {
    for (const Occurrence &o : k.occurrences) {
      if (o.sentence_index < scores.size()) {
        scores[o.sentence_index].raw_score += k.score;
      }
    }
  }
  AssignRanks(RankOrder(scores), &scores);
  return scores;
}

std::vector<ScoredSentence> NormalizeScores(
    std::span<const ScoredSentence> scores, const Document &doc,
    Normalization normalization) {
  std::vector<ScoredSentence> out(scores.begin(), scores.end());
  if (normalization == Normalization::kNone) return out;
  for (ScoredSentence &s : out) {
    double length = s.sentence_index < doc.size()
                        ? static_cast<double>(
                              doc.sentences[s.sentence_index].tokens.size())
                        : 0.0;
    if (length == 0.0) continue;
    double f = 1.0;
    switch (normalization) {
      case Normalization::kIdentity: f = length; break;
      case Normalization::kSqrt: f = std::sqrt(length); break;
      case Normalization::kLog: f = std::log(length + 1.0); break;
      case Normalization::kNone: break;
    }
    s.raw_score /= f;
  }
  AssignRanks(RankOrder(out), &out);
  return out;
}

std::vector<size_t> RankOrder(std::span<const ScoredSentence> scores) {
  std::vector<size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (scores[a].raw_score != scores[b].raw_score) {
      return scores[a].raw_score > scores[b].raw_score;
    }
    return scores[a].sentence_index < scores[b].sentence_index;
  });
  for (size_t &i : order) i = scores[i].sentence_index;
  return order;
}

SummaryResult SelectSummary(std::span<const ScoredSentence> scores,
                            double ratio) {
  SummaryResult result;
  result.config.ratio = ratio;
  result.scores.assign(scores.begin(), scores.end());
  std::sort(result.scores.begin(), result.scores.end(),
            [](const ScoredSentence &a, const ScoredSentence &b) {
              return a.sentence_index < b.sentence_index;
            });
  std::vector<size_t> order = RankOrder(result.scores);
  AssignRanks(order, &result.scores);
  size_t length = SummaryLength(scores.size(), ratio);
  result.selected.assign(order.begin(), order.begin() + length);
  std::sort(result.selected.begin(), result.selected.end());
  return result;
}

WinnowResult Winnow(const Document &doc, const EntityGraph &graph,
                    const SummaryConfig &config) {
  std::vector<std::vector<size_t>> nodes_in(doc.size());
  for (const Sentence &sentence : doc.sentences) {
    nodes_in[sentence.index] = NodesIn(sentence, graph);
  }
  auto filter = [&](size_t k) {
    std::vector<size_t> top = graph.TopConnected(k);
    std::vector<size_t> kept;
    for (size_t i = 0; i < doc.size(); ++i) {
      bool hit = std::any_of(nodes_in[i].begin(), nodes_in[i].end(),
                             [&](size_t v) {
                               return std::find(top.begin(), top.end(), v) !=
                                      top.end();
                             });
      if (hit) kept.push_back(i);
    }
    return kept;
  };

  WinnowResult result;
  result.top_k = static_cast<size_t>(config.winnow_top_k);
  std::vector<size_t> kept = filter(result.top_k);
  double fraction = doc.empty() ? 0.0
                                : static_cast<double>(kept.size()) /
                                      static_cast<double>(doc.size());
  if (fraction < config.winnow_min_fraction && result.top_k < 4) {
    result.top_k = 4;
    kept = filter(4);
  }
  if (kept.empty()) {
    result.fell_back = true;
    result.document = doc;
    result.original_index.resize(doc.size());
    std::iota(result.original_index.begin(), result.original_index.end(), 0);
    return result;
  }
  std::vector<Sentence> sentences;
  for (size_t i : kept) sentences.push_back(doc.sentences[i]);
  result.document = DocumentFromSentences(std::move(sentences));
  result.original_index = std::move(kept);
  return result;
}

Summarizer::Summarizer(Lexicons lexicons, SummaryConfig config)
    : lexicons_(std::move(lexicons)), config_(std::move(config)) {
  config_.Validate();
}

Analysis Summarizer::Analyze(
    const Document &doc,
    std::optional<std::span<const Triple>> triples) const {
  Analysis analysis;
  analysis.keywords = AnalyzeKeywords(doc, lexicons_, config_.keywords);
  if (triples) {
    analysis.raw_triples.assign(triples->begin(), triples->end());
  } else {
    analysis.raw_triples = ExtractTriplesHeuristic(doc, lexicons_);
  }
  std::vector<Triple> cleaned = CleanupTriples(analysis.raw_triples);
  analysis.triples = ResolveAnaphora(cleaned, doc, lexicons_.pronouns);
  analysis.filtered =
      FilterSubjects(analysis.triples, analysis.keywords.keyphrases);
  analysis.graph = EntityGraph::Build(analysis.filtered, config_.graph);
  return analysis;
}

std::vector<ScoredSentence> Summarizer::Score(const Document &doc,
                                              const Analysis &analysis,
                                              bool *fallback) const {
  std::vector<ScoredSentence> scores;
  *fallback = analysis.graph.retained_triples() == 0;
  if (*fallback) {
    scores = ScoreByKeyphrases(doc, analysis.keywords.keyphrases);
  } else if (config_.variant == Variant::kNonWinnowKS) {
    scores = ScoreByConnectivityAndKeyphrase(doc, analysis.graph,
                                             analysis.keywords.keyphrases);
  } else {
    scores = ScoreByConnectivity(doc, analysis.graph);
  }
  return NormalizeScores(scores, doc, config_.normalize);
}

std::vector<size_t> Summarizer::Take(const Document &doc,
                                     std::span<const size_t> order) const {
  std::vector<size_t> selected;
  if (config_.word_budget) {
    size_t words = 0;
    for (size_t i : order) {
      size_t n = Terms(doc.sentences[i].text).size();
      if (!selected.empty() && words + n > *config_.word_budget) break;
      selected.push_back(i);
      words += n;
    }
  } else {
    size_t length = SummaryLength(doc.size(), config_.ratio);
    selected.assign(order.begin(), order.begin() + length);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

SummaryResult Summarizer::Summarize(
    const Document &doc,
    std::optional<std::span<const Triple>> triples) const {
  SummaryResult result;
  result.config = config_;
  if (doc.empty()) return result;

  Analysis analysis = Analyze(doc, triples);
  bool fallback = false;
  std::vector<ScoredSentence> scores = Score(doc, analysis, &fallback);
  std::vector<size_t> order;

  if (config_.variant != Variant::kWinnow) {
    order = RankOrder(scores);
  } else {
    WinnowResult winnow = Winnow(doc, analysis.graph, config_);
    result.intermediate_size = winnow.document.size();
    if (winnow.fell_back) {
      result.diagnostics.push_back(
          "winnowing found no sentence mentioning a top node; using the "
          "full document");
      order = RankOrder(scores);
    } else {
      std::vector<size_t> position(doc.size(), SIZE_MAX);
      for (size_t i = 0; i < winnow.original_index.size(); ++i) {
        position[winnow.original_index[i]] = i;
      }
      std::optional<std::vector<Triple>> remapped;
      if (triples) {
        remapped.emplace();
        for (const Triple &t : *triples) {
          if (position[t.sentence_index] == SIZE_MAX) continue;
          Triple copy = t;
          copy.sentence_index = position[t.sentence_index];
          remapped->push_back(std::move(copy));
        }
      }
      Analysis inner = Analyze(
          winnow.document,
          remapped ? std::optional<std::span<const Triple>>(*remapped)
                   : std::nullopt);
      std::vector<ScoredSentence> inner_scores =
          Score(winnow.document, inner, &fallback);
      for (size_t i : RankOrder(inner_scores)) {
        size_t original = winnow.original_index[i];
        order.push_back(original);
        scores[original].raw_score = inner_scores[i].raw_score;
      }
      // Sentences dropped by winnowing only fill in when the intermediate
      // document is shorter than the summary.
      for (size_t i : RankOrder(scores)) {
        if (position[i] == SIZE_MAX) order.push_back(i);
      }
    }
  }

  AssignRanks(order, &scores);
  result.scores = std::move(scores);
  result.selected = Take(doc, order);
  result.keyphrase_fallback = fallback;
  if (fallback) {
    result.diagnostics.push_back(
        "no triple subject matched a keyphrase; ranked by keyphrase scores");
  }
  return result;
}

std::string RenderSummary(const Document &doc, const SummaryResult &result) {
  std::string out;
  for (size_t i : result.selected) {
    if (!out.empty()) out += '\n';
    out += doc.sentences[i].text;
  }
  return out;
}

}  // namespace sumgraph
