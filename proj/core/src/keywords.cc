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

#include "sumgraph/keywords.h"

#include <algorithm>
#include <unordered_map>

namespace sumgraph {
namespace {

bool HasPunctuationBetween(std::string_view text, const Token &left,
                           const Token &right) {
  for (size_t i = left.span.end; i < right.span.begin; ++i) {
    char c = text[i];
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') return true;
  }
  return false;
}

std::string PhraseKey(const Segment &segment) {
  std::string key;
  for (const Token &t : segment) {
    key += t.normalized;
    key += '\x1f';
  }
  return key;
}

}  // namespace

std::vector<Segment> ExtractCandidates(const Sentence &sentence,
                                       const WordSet &stopwords,
                                       const VerbLexicon &verbs) {
  std::vector<Segment> segments;
  Segment current;
  auto flush = [&] {
    if (!current.empty()) segments.push_back(std::move(current));
    current.clear();
  };
  const Token *previous = nullptr;
  for (const Token &token : sentence.tokens) {
    if (previous != nullptr &&
        HasPunctuationBetween(sentence.text, *previous, token)) {
      flush();
    }
    previous = &token;
    if (!token.is_entity_merge && (stopwords.Contains(token.normalized) ||
                                   verbs.IsVerb(token.normalized))) {
      flush();
      continue;
    }
    current.push_back(token);
  }
  flush();
  return segments;
}

std::vector<SentenceCandidates> ExtractCandidates(const Document &doc,
                                                  const Lexicons &lexicons) {
  std::vector<SentenceCandidates> out;
  out.reserve(doc.size());
  for (const Sentence &sentence : doc.sentences) {
    out.push_back({sentence.index,
                   ExtractCandidates(sentence, lexicons.stopwords,
                                     lexicons.verbs)});
  }
  return out;
}

KeywordTable ComputeKeywordStats(std::span<const SentenceCandidates> candidates,
                                 const KeywordOptions &options) {
  KeywordTable table;
  for (const SentenceCandidates &sentence : candidates) {
    std::unordered_map<std::string_view, int64_t> counts;
    int64_t total = 0;
    for (const Segment &segment : sentence.segments) {
      for (const Token &token : segment) {
        ++counts[token.normalized];
        ++total;
      }
    }
    for (const auto &[word, count] : counts) {
      auto it = table.find(word);
      if (it == table.end()) {
        it = table.emplace(std::string(word), KeywordStats{}).first;
        it->second.keyword = std::string(word);
      }
      KeywordStats &stats = it->second;
      stats.frequency += count;
      // Every occurrence sees the other (total - 1) occurrences.
      stats.degree += count * (total - 1);
      if (options.count_self) stats.degree += count;
    }
  }
  return table;
}

std::vector<std::string> Keyphrase::Terms() const {
  std::vector<std::string> terms;
  for (const std::string &w : words) {
    for (std::string &t : sumgraph::Terms(w)) terms.push_back(std::move(t));
  }
  return terms;
}

std::vector<Keyphrase> ScoreKeyphrases(
    const KeywordTable &stats, std::span<const SentenceCandidates> candidates) {
  std::vector<Keyphrase> phrases;
  std::unordered_map<std::string, size_t> index;
  for (const SentenceCandidates &sentence : candidates) {
    for (const Segment &segment : sentence.segments) {
      Occurrence occurrence{sentence.sentence_index,
                            {segment.front().span.begin,
                             segment.back().span.end}};
      auto [it, inserted] = index.emplace(PhraseKey(segment), phrases.size());
      if (!inserted) {
        phrases[it->second].occurrences.push_back(occurrence);
        continue;
      }
      Keyphrase phrase;
      for (const Token &token : segment) {
        phrase.words.push_back(token.normalized);
        auto s = stats.find(token.normalized);
        if (s != stats.end()) phrase.score += s->second.score();
      }
      phrase.occurrences.push_back(occurrence);
      phrases.push_back(std::move(phrase));
    }
  }
  return phrases;
}

KeywordAnalysis AnalyzeKeywords(const Document &doc, const Lexicons &lexicons,
                                const KeywordOptions &options) {
  KeywordAnalysis analysis;
  analysis.candidates = ExtractCandidates(doc, lexicons);
  analysis.stats = ComputeKeywordStats(analysis.candidates, options);
  analysis.keyphrases = ScoreKeyphrases(analysis.stats, analysis.candidates);
  return analysis;
}

}  // namespace sumgraph
