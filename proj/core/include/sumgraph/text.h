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

#ifndef SUMGRAPH_TEXT_H_
#define SUMGRAPH_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumgraph/lexicon.h"

namespace sumgraph {

// Half-open byte range [begin, end) into a sentence's text.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const Span &other) const = default;
};

struct Token {
  std::string surface;     // text as written, surrounding punctuation removed
  std::string normalized;  // lowercased surface
  bool is_entity_merge = false;
  Span span;

  bool operator==(const Token &other) const = default;
};

struct Sentence {
  size_t index = 0;
  std::string text;
  std::vector<Token> tokens;  // never empty for sentences in a Document
};

// Raw text plus its sentence decomposition. Sentence indices are
// 0..n-1 in order.
struct Document {
  std::string raw_text;
  std::vector<Sentence> sentences;

  size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
};

// Splits text into sentences ending in '.', '!' or '?'. A period does not
// end a sentence when it follows an abbreviation, a single uppercase
// initial, or sits between two digits. Closing quotes and brackets after
// the terminator stay with the sentence. Unterminated trailing text
// forms a final sentence.
std::vector<std::string> SplitSentences(std::string_view text,
                                        const WordSet &abbreviations);

// Whitespace tokenization. Leading and trailing punctuation is stripped
// from each piece; pieces consisting only of punctuation produce no
// token. Internal hyphens, apostrophes and periods are kept.
std::vector<Token> Tokenize(std::string_view sentence_text);

// Merges maximal runs of two or more capitalized non-stopword tokens into
// a single entity token ("J. K. Rowling"). Tokens separated by anything
// other than whitespace do not merge, except across the period of an
// initial or abbreviation.
std::vector<Token> MergeProperNouns(std::string_view sentence_text,
                                    std::span<const Token> tokens,
                                    const WordSet &stopwords,
                                    const WordSet &abbreviations);

// Full preprocessing: split, tokenize, merge. Fragments without any
// token (stray punctuation) are appended to the preceding sentence.
Document Preprocess(std::string_view text, const Lexicons &lexicons);

// Builds a document from already-split sentences, re-indexing from 0.
Document DocumentFromSentences(std::vector<Sentence> sentences);

// Word-level terms of free text: whitespace split, surrounding
// punctuation stripped, lowercased, empty pieces dropped. Entity strings,
// keyphrases and sentences are all compared through this view.
std::vector<std::string> Terms(std::string_view text);

// Concatenated terms of every token in the sentence.
std::vector<std::string> SentenceTerms(const Sentence &sentence);

std::string JoinTerms(std::span<const std::string> terms);

// True if `needle` is non-empty and occurs contiguously in `haystack`.
bool ContainsRun(std::span<const std::string> haystack,
                 std::span<const std::string> needle);

// ASCII helpers; bytes outside ASCII pass through unchanged.
std::string ToLower(std::string_view text);
std::string_view TrimWhitespace(std::string_view text);
std::string_view StripPunctuation(std::string_view text);
bool IsCapitalized(std::string_view word);

}  // namespace sumgraph

#endif  // SUMGRAPH_TEXT_H_
