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

#include "sumgraph/text.h"

#include <algorithm>
#include <cctype>

namespace sumgraph {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAsciiPunct(char c) {
  auto u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsAlpha(char c) { return IsUpper(c) || (c >= 'a' && c <= 'z'); }

// Typographic punctuation encoded as UTF-8: dashes, curly quotes,
// ellipsis, guillemets.
constexpr std::string_view kWidePunct[] = {
    "\xE2\x80\x93", "\xE2\x80\x94", "\xE2\x80\x98", "\xE2\x80\x99",
    "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\xA6", "\xC2\xAB",
    "\xC2\xBB",
};

// Byte length of the punctuation mark at the start (or end) of text, 0 if
// there is none.
size_t LeadingPunct(std::string_view text) {
  if (text.empty()) return 0;
  if (IsAsciiPunct(text.front())) return 1;
  for (std::string_view p : kWidePunct) {
    if (text.starts_with(p)) return p.size();
  }
  return 0;
}

size_t TrailingPunct(std::string_view text) {
  if (text.empty()) return 0;
  if (IsAsciiPunct(text.back())) return 1;
  for (std::string_view p : kWidePunct) {
    if (text.ends_with(p)) return p.size();
  }
  return 0;
}

// Characters that may trail a sentence terminator and still belong to the
// sentence.
size_t ClosingMark(std::string_view text) {
  if (text.empty()) return 0;
  switch (text.front()) {
    case '.': case '!': case '?': case '"': case '\'': case ')':
    case ']': case '}':
      return 1;
    default:
      break;
  }
  for (std::string_view p : {std::string_view("\xE2\x80\x9D"),
                             std::string_view("\xE2\x80\x99"),
                             std::string_view("\xE2\x80\xA6"),
                             std::string_view("\xC2\xBB")}) {
    if (text.starts_with(p)) return p.size();
  }
  return 0;
}

bool IsAbbreviation(std::string_view word, const WordSet &abbreviations) {
  if (word.empty()) return false;
  return abbreviations.Contains(word) ||
         abbreviations.Contains(std::string(word) + ".");
}

// True if the period at text[pos] does not end a sentence.
bool IsProtectedPeriod(std::string_view text, size_t pos,
                       const WordSet &abbreviations) {
  // Decimal number: 1.24
  if (pos > 0 && pos + 1 < text.size() && IsDigit(text[pos - 1]) &&
      IsDigit(text[pos + 1])) {
    return true;
  }
  // Single uppercase initial: "J." in "J. K. Rowling", "S." in "U.S."
  if (pos > 0 && IsUpper(text[pos - 1]) &&
      (pos == 1 || !IsAlpha(text[pos - 2]))) {
    return true;
  }
  size_t start = pos;
  while (start > 0 && !IsSpace(text[start - 1])) --start;
  std::string_view word = text.substr(start, pos - start);
  while (size_t n = LeadingPunct(word)) word.remove_prefix(n);
  return IsAbbreviation(word, abbreviations);
}

void PushTrimmed(std::string_view piece, std::vector<std::string> *out) {
  piece = TrimWhitespace(piece);
  if (!piece.empty()) out->emplace_back(piece);
}

bool Mergeable(const Token &token, const WordSet &stopwords) {
  return IsCapitalized(token.surface) && !stopwords.Contains(token.normalized);
}

bool Joinable(std::string_view text, const Token &left, const Token &right,
              const WordSet &abbreviations) {
  std::string_view gap = text.substr(left.span.end,
                                     right.span.begin - left.span.end);
  if (!gap.empty() && gap.front() == '.') {
    bool initial = left.surface.size() == 1 && IsUpper(left.surface[0]);
    if (!initial && !IsAbbreviation(left.surface, abbreviations)) return false;
    gap.remove_prefix(1);
  }
  return std::all_of(gap.begin(), gap.end(), IsSpace);
}

}  // namespace

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (IsUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view TrimWhitespace(std::string_view text) {
  while (!text.empty() && IsSpace(text.front())) text.remove_prefix(1);
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

std::string_view StripPunctuation(std::string_view text) {
  while (size_t n = LeadingPunct(text)) text.remove_prefix(n);
  while (size_t n = TrailingPunct(text)) text.remove_suffix(n);
  return text;
}

bool IsCapitalized(std::string_view word) {
  return !word.empty() && IsUpper(word.front());
}

std::vector<std::string> SplitSentences(std::string_view text,
                                        const WordSet &abbreviations) {
  std::vector<std::string> sentences;
  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    bool terminal = c == '!' || c == '?' ||
                    (c == '.' && !IsProtectedPeriod(text, i, abbreviations));
    if (!terminal) {
      ++i;
      continue;
    }
    size_t end = i + 1;
    while (size_t n = ClosingMark(text.substr(end))) end += n;
    // A terminator glued to the next word ("example.com") is not a boundary.
    if (end < text.size() && !IsSpace(text[end])) {
      i = end;
      continue;
    }
    PushTrimmed(text.substr(start, end - start), &sentences);
    start = end;
    i = end;
  }
  PushTrimmed(text.substr(start), &sentences);
  return sentences;
}

std::vector<Token> Tokenize(std::string_view sentence_text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = sentence_text.size();
  while (i < n) {
    while (i < n && IsSpace(sentence_text[i])) ++i;
    size_t begin = i;
    while (i < n && !IsSpace(sentence_text[i])) ++i;
    if (begin == i) break;
    std::string_view piece = sentence_text.substr(begin, i - begin);
    size_t lead = 0;
    while (size_t k = LeadingPunct(piece.substr(lead))) lead += k;
    if (lead == piece.size()) continue;
    piece.remove_prefix(lead);
    while (size_t k = TrailingPunct(piece)) piece.remove_suffix(k);
    Token token;
    token.surface = std::string(piece);
    token.normalized = ToLower(piece);
    token.span = {begin + lead, begin + lead + piece.size()};
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<Token> MergeProperNouns(std::string_view sentence_text,
                                    std::span<const Token> tokens,
                                    const WordSet &stopwords,
                                    const WordSet &abbreviations) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  size_t i = 0;
  while (i < tokens.size()) {
    if (!Mergeable(tokens[i], stopwords)) {
      out.push_back(tokens[i++]);
      continue;
    }
    size_t j = i + 1;
    while (j < tokens.size() && Mergeable(tokens[j], stopwords) &&
           Joinable(sentence_text, tokens[j - 1], tokens[j], abbreviations)) {
      ++j;
    }
    if (j - i == 1) {
      out.push_back(tokens[i++]);
      continue;
    }
    Token merged;
    merged.span = {tokens[i].span.begin, tokens[j - 1].span.end};
    merged.surface = std::string(
        sentence_text.substr(merged.span.begin, merged.span.size()));
    merged.normalized = ToLower(merged.surface);
    merged.is_entity_merge = true;
    out.push_back(std::move(merged));
    i = j;
  }
  return out;
}

Document Preprocess(std::string_view text, const Lexicons &lexicons) {
  Document doc;
  doc.raw_text = std::string(text);
  std::string pending;
  for (std::string &piece : SplitSentences(text, lexicons.abbreviations)) {
    std::string sentence_text =
        pending.empty() ? std::move(piece) : pending + " " + piece;
    pending.clear();
    std::vector<Token> tokens = Tokenize(sentence_text);
    if (tokens.empty()) {
      if (doc.sentences.empty()) {
        pending = std::move(sentence_text);
      } else {
        doc.sentences.back().text += " " + sentence_text;
      }
      continue;
    }
    Sentence sentence;
    sentence.index = doc.sentences.size();
    sentence.tokens = MergeProperNouns(sentence_text, tokens,
                                       lexicons.stopwords,
                                       lexicons.abbreviations);
    sentence.text = std::move(sentence_text);
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

Document DocumentFromSentences(std::vector<Sentence> sentences) {
  Document doc;
  for (size_t i = 0; i < sentences.size(); ++i) {
    sentences[i].index = i;
    if (i > 0) doc.raw_text += ' ';
    doc.raw_text += sentences[i].text;
  }
  doc.sentences = std::move(sentences);
  return doc;
}

std::vector<std::string> Terms(std::string_view text) {
  std::vector<std::string> terms;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t begin = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    std::string_view piece = StripPunctuation(text.substr(begin, i - begin));
    if (!piece.empty()) terms.push_back(ToLower(piece));
  }
  return terms;
}

std::vector<std::string> SentenceTerms(const Sentence &sentence) {
  std::vector<std::string> terms;
  terms.reserve(sentence.tokens.size());
  for (const Token &token : sentence.tokens) {
    if (token.is_entity_merge) {
      for (std::string &t : Terms(token.normalized)) terms.push_back(std::move(t));
    } else {
      terms.push_back(token.normalized);
    }
  }
  return terms;
}

std::string JoinTerms(std::span<const std::string> terms) {
  std::string out;
  for (const std::string &t : terms) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

bool ContainsRun(std::span<const std::string> haystack,
                 std::span<const std::string> needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

}  // namespace sumgraph
