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

#include "sumgraph/lexicon.h"

#include <fstream>
#include <sstream>
#include <string_view>

#include "sumgraph/error.h"
#include "sumgraph/text.h"

namespace sumgraph {
namespace data {
extern const std::string_view kStopwords;
extern const std::string_view kVerbs;
extern const std::string_view kAbbreviations;
extern const std::string_view kPronouns;
extern const std::string_view kConjunctions;
}  // namespace data

WordSet::WordSet(std::initializer_list<std::string_view> words) {
  for (std::string_view w : words) Insert(w);
}

WordSet WordSet::Parse(std::string_view text) {
  WordSet set;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    line = TrimWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    set.Insert(line);
  }
  return set;
}

WordSet WordSet::Load(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot read word list " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

bool WordSet::Contains(std::string_view word) const {
  return words_.find(ToLower(word)) != words_.end();
}

void WordSet::Insert(std::string_view word) { words_.insert(ToLower(word)); }

void WordSet::Erase(std::string_view word) {
  auto it = words_.find(ToLower(word));
  if (it != words_.end()) words_.erase(it);
}

namespace {

bool IsConsonant(char c) {
  return c >= 'a' && c <= 'z' && c != 'a' && c != 'e' && c != 'i' &&
         c != 'o' && c != 'u';
}

}  // namespace

bool VerbLexicon::IsVerb(std::string_view word) const {
  std::string w = ToLower(word);
  if (w.empty()) return false;
  if (forms_.Contains(w)) return true;
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }

  auto known = [this](std::string_view stem) {
    return stem.size() >= 2 && forms_.Contains(stem);
  };
  auto ends_with = [&w](std::string_view suffix) {
    return w.size() > suffix.size() + 1 && w.ends_with(suffix);
  };
  auto drop = [&w](size_t n) { return w.substr(0, w.size() - n); };
  // "stopped" -> "stop", "planning" -> "plan".
  auto undouble = [](const std::string &stem) {
    size_t n = stem.size();
    if (n >= 3 && stem[n - 1] == stem[n - 2] && IsConsonant(stem[n - 1])) {
      return stem.substr(0, n - 1);
    }
    return std::string();
  };

  if (ends_with("ies") && known(drop(3) + "y")) return true;
  if (ends_with("es") && known(drop(2))) return true;
  if (ends_with("s") && !w.ends_with("ss") && known(drop(1))) return true;
  if (ends_with("ied") && known(drop(3) + "y")) return true;
  if (ends_with("ed")) {
    if (known(drop(2)) || known(drop(1))) return true;
    std::string u = undouble(drop(2));
    if (!u.empty() && known(u)) return true;
  }
  if (ends_with("ing")) {
    std::string stem = drop(3);
    if (known(stem) || known(stem + "e")) return true;
    std::string u = undouble(stem);
    if (!u.empty() && known(u)) return true;
  }
  return false;
}

WordSet DefaultStopwords() { return WordSet::Parse(data::kStopwords); }
WordSet DefaultAbbreviations() { return WordSet::Parse(data::kAbbreviations); }
WordSet DefaultPronouns() { return WordSet::Parse(data::kPronouns); }
WordSet DefaultConjunctions() { return WordSet::Parse(data::kConjunctions); }
VerbLexicon DefaultVerbs() { return VerbLexicon(WordSet::Parse(data::kVerbs)); }

const Lexicons &Lexicons::Default() {
  static const Lexicons *lexicons = new Lexicons{
      DefaultStopwords(), DefaultAbbreviations(), DefaultPronouns(),
      DefaultConjunctions(), DefaultVerbs()};
  return *lexicons;
}

}  // namespace sumgraph
