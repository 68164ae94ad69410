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

#ifndef SUMGRAPH_LEXICON_H_
#define SUMGRAPH_LEXICON_H_

#include <filesystem>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace sumgraph {

// Case-insensitive set of words. Entries are stored lowercased.
class WordSet {
 public:
  WordSet() = default;
  WordSet(std::initializer_list<std::string_view> words);

  // Parses a word list: one entry per line, '#' starts a comment line,
  // surrounding whitespace is ignored.
  static WordSet Parse(std::string_view text);

  // Reads and parses a word list file. Throws Error(kIo) if unreadable.
  static WordSet Load(const std::filesystem::path &path);

  bool Contains(std::string_view word) const;
  void Insert(std::string_view word);
  void Erase(std::string_view word);

  size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

 private:
  std::set<std::string, std::less<>> words_;
};

// Verb recognition from a list of base forms and irregular inflections.
// Regular inflections of listed base forms are recognised by suffix
// stripping: -s, -es, -ies, -ed, -d, -ied, -ing, and doubled final
// consonants ("stopped", "planning").
class VerbLexicon {
 public:
  VerbLexicon() = default;
  explicit VerbLexicon(WordSet forms) : forms_(std::move(forms)) {}

  bool IsVerb(std::string_view word) const;

  const WordSet &forms() const { return forms_; }

 private:
  WordSet forms_;
};

// The word lists consumed by the pipeline.
struct Lexicons {
  WordSet stopwords;
  WordSet abbreviations;
  WordSet pronouns;
  WordSet conjunctions;
  VerbLexicon verbs;

  // Lists bundled with the library.
  static const Lexicons &Default();
};

WordSet DefaultStopwords();
WordSet DefaultAbbreviations();
WordSet DefaultPronouns();
WordSet DefaultConjunctions();
VerbLexicon DefaultVerbs();

}  // namespace sumgraph

#endif  // SUMGRAPH_LEXICON_H_
