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

#include "sumgraph/triples.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>

#include <fmt/format.h>

#include "json.hpp"
#include "sumgraph/error.h"

namespace sumgraph {
namespace {

enum class Role { kEntity, kVerb, kOther };

Role Classify(const Token &token, const Lexicons &lexicons) {
  if (token.is_entity_merge) return Role::kEntity;
  if (lexicons.pronouns.Contains(token.normalized)) return Role::kEntity;
  if (lexicons.verbs.IsVerb(token.normalized)) return Role::kVerb;
  if (lexicons.stopwords.Contains(token.normalized)) return Role::kOther;
  return Role::kEntity;
}

bool IsModal(std::string_view word) {
  static constexpr std::string_view kModals[] = {
      "will", "would", "shall", "should", "can",
      "could", "may", "might", "must"};
  return std::find(std::begin(kModals), std::end(kModals), word) !=
         std::end(kModals);
}

bool HasClauseBreak(std::string_view text, const Token &left,
                    const Token &right) {
  for (size_t i = left.span.end; i < right.span.begin; ++i) {
    if (text[i] == ',' || text[i] == ';') return true;
  }
  return false;
}

std::string Extent(const Sentence &sentence, const Token &first,
                   const Token &last) {
  return sentence.text.substr(first.span.begin,
                              last.span.end - first.span.begin);
}

struct Clause {
  std::vector<const Token *> tokens;
  std::vector<Role> roles;
};

std::vector<Clause> SplitClauses(const Sentence &sentence,
                                 const Lexicons &lexicons) {
  std::vector<Clause> clauses(1);
  const Token *previous = nullptr;
  for (const Token &token : sentence.tokens) {
    bool cut = previous != nullptr &&
               HasClauseBreak(sentence.text, *previous, token);
    previous = &token;
    bool conjunction = !token.is_entity_merge &&
                       lexicons.conjunctions.Contains(token.normalized);
    if ((cut || conjunction) && !clauses.back().tokens.empty()) {
      clauses.emplace_back();
    }
    if (conjunction) continue;
    clauses.back().tokens.push_back(&token);
    clauses.back().roles.push_back(Classify(token, lexicons));
  }
  return clauses;
}

std::optional<Triple> MatchClause(const Sentence &sentence,
                                  const Clause &clause) {
  const auto &roles = clause.roles;
  const auto &tokens = clause.tokens;
  const size_t n = roles.size();

  size_t verb = n;
  bool seen_entity = false;
  for (size_t j = 0; j < n; ++j) {
    if (roles[j] == Role::kVerb && seen_entity) {
      verb = j;
      break;
    }
    if (roles[j] == Role::kEntity) seen_entity = true;
  }
  if (verb == n) return std::nullopt;

  size_t verb_end = verb;
  while (verb_end < n && roles[verb_end] == Role::kVerb) ++verb_end;
  // A word the lexicon does not know still completes a modal: "will
  // connect", "could rise".
  if (verb_end < n && roles[verb_end] == Role::kEntity &&
      !tokens[verb_end]->is_entity_merge &&
      IsModal(tokens[verb_end - 1]->normalized)) {
    ++verb_end;
  }

  size_t subject = verb;
  while (subject > 0 && roles[subject - 1] == Role::kEntity) --subject;
  if (subject == verb) return std::nullopt;

  size_t object = verb_end;
  while (object < n && roles[object] == Role::kOther) ++object;
  if (object == n || roles[object] != Role::kEntity) return std::nullopt;
  size_t object_end = object;
  while (object_end < n && roles[object_end] == Role::kEntity) ++object_end;

  Triple triple;
  triple.subject = Extent(sentence, *tokens[subject], *tokens[verb - 1]);
  triple.action = Extent(sentence, *tokens[verb], *tokens[verb_end - 1]);
  triple.object = Extent(sentence, *tokens[object], *tokens[object_end - 1]);
  triple.sentence_index = sentence.index;
  triple.provenance = Provenance::kHeuristic;
  return triple;
}

struct NormalizedTriple {
  std::vector<std::string> subject;
  std::vector<std::string> action;
  std::vector<std::string> object;
};

NormalizedTriple Normalize(const Triple &t) {
  return {Terms(t.subject), Terms(t.action), Terms(t.object)};
}

bool IsPartOf(const std::vector<std::string> &part,
              const std::vector<std::string> &whole) {
  return part.empty() || part == whole || ContainsRun(whole, part);
}

bool IsPartOf(const NormalizedTriple &part, const NormalizedTriple &whole) {
  return IsPartOf(part.subject, whole.subject) &&
         IsPartOf(part.action, whole.action) &&
         IsPartOf(part.object, whole.object);
}

// Applies the three cleanup rules to the triples of one sentence.
void CleanupSentence(std::span<const Triple *const> group,
                     std::vector<Triple> *out) {
  std::vector<const Triple *> kept;
  std::vector<NormalizedTriple> norms;
  std::set<std::string> seen;
  for (const Triple *t : group) {
    NormalizedTriple n = Normalize(*t);
    if (n.subject.empty() || n.object.empty()) continue;
    std::string key = JoinTerms(n.subject) + '\x1f' + JoinTerms(n.action) +
                      '\x1f' + JoinTerms(n.object);
    if (!seen.insert(std::move(key)).second) continue;
    kept.push_back(t);
    norms.push_back(std::move(n));
  }

  // Longest object per (subject, action).
  std::map<std::string, size_t> best;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::string key = JoinTerms(norms[i].subject) + '\x1f' +
                      JoinTerms(norms[i].action);
    auto [it, inserted] = best.emplace(key, i);
    if (!inserted && norms[i].object.size() > norms[it->second].object.size()) {
      it->second = i;
    }
  }
  std::vector<bool> alive(kept.size(), false);
  for (const auto &[key, i] : best) alive[i] = true;

  std::vector<bool> subsumed(kept.size(), false);
  for (size_t i = 0; i < kept.size(); ++i) {
    if (!alive[i]) continue;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (i != j && alive[j] && IsPartOf(norms[i], norms[j])) {
        subsumed[i] = true;
        break;
      }
    }
  }
  for (size_t i = 0; i < kept.size(); ++i) {
    if (alive[i] && !subsumed[i]) out->push_back(*kept[i]);
  }
}

[[noreturn]] void FieldError(size_t line, std::string_view field,
                             std::string_view what) {
  throw Error(ErrorKind::kFormat,
              fmt::format("line {}: field '{}': {}", line, field, what));
}

}  // namespace

const char *ProvenanceName(Provenance provenance) {
  return provenance == Provenance::kIngested ? "ingested" : "heuristic";
}

std::vector<Triple> ExtractTriplesHeuristic(const Sentence &sentence,
                                            const Lexicons &lexicons) {
  std::vector<Triple> triples;
  for (const Clause &clause : SplitClauses(sentence, lexicons)) {
    if (auto triple = MatchClause(sentence, clause)) {
      triples.push_back(std::move(*triple));
    }
  }
  return triples;
}

std::vector<Triple> ExtractTriplesHeuristic(const Document &doc,
                                            const Lexicons &lexicons) {
  std::vector<Triple> triples;
  for (const Sentence &sentence : doc.sentences) {
    for (Triple &t : ExtractTriplesHeuristic(sentence, lexicons)) {
      triples.push_back(std::move(t));
    }
  }
  return triples;
}

std::vector<Triple> ParseTriples(std::istream &in, size_t sentence_count) {
  using nlohmann::json;
  std::vector<Triple> triples;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = TrimWhitespace(line);
    if (view.empty() || view.front() == '#') continue;

    json record;
    try {
      record = json::parse(view);
    } catch (const json::parse_error &e) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("line {}: invalid JSON: {}", line_number,
                              e.what()));
    }
    if (!record.is_object()) {
      throw Error(ErrorKind::kFormat,
                  fmt::format("line {}: expected a JSON object", line_number));
    }
    for (const auto &item : record.items()) {
      const std::string &key = item.key();
      if (key != "s" && key != "a" && key != "o" && key != "i") {
        FieldError(line_number, key, "unexpected key");
      }
    }

    Triple triple;
    triple.provenance = Provenance::kIngested;
    for (auto [field, target] : {std::pair{"s", &triple.subject},
                                 std::pair{"a", &triple.action},
                                 std::pair{"o", &triple.object}}) {
      auto it = record.find(field);
      if (it == record.end()) FieldError(line_number, field, "missing");
      if (!it->is_string()) FieldError(line_number, field, "expected a string");
      *target = std::string(TrimWhitespace(it->get_ref<const std::string &>()));
      if (target->empty()) FieldError(line_number, field, "empty string");
    }

    auto index = record.find("i");
    if (index == record.end()) FieldError(line_number, "i", "missing");
    if (!index->is_number_integer()) {
      FieldError(line_number, "i", "expected a non-negative integer");
    }
    if (index->is_number_unsigned()) {
      uint64_t value = index->get<uint64_t>();
      if (value >= sentence_count) {
        FieldError(line_number, "i",
                   fmt::format("sentence index out of range: {} (document "
                               "has {} sentences)",
                               value, sentence_count));
      }
      triple.sentence_index = static_cast<size_t>(value);
    } else {
      FieldError(line_number, "i", "expected a non-negative integer");
    }
    triples.push_back(std::move(triple));
  }
  return triples;
}

std::vector<Triple> IngestTriples(const std::filesystem::path &path,
                                  const Document &doc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot read triple file " + path.string());
  }
  try {
    return ParseTriples(in, doc.size());
  } catch (const Error &e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::vector<Triple> CleanupTriples(std::span<const Triple> raw) {
  std::vector<const Triple *> order;
  order.reserve(raw.size());
  for (const Triple &t : raw) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](const Triple *a, const Triple *b) {
                     return a->sentence_index < b->sentence_index;
                   });

  std::vector<Triple> out;
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j < order.size() &&
           order[j]->sentence_index == order[i]->sentence_index) {
      ++j;
    }
    CleanupSentence(std::span(order).subspan(i, j - i), &out);
    i = j;
  }
  return out;
}

std::vector<Triple> ResolveAnaphora(std::span<const Triple> triples,
                                    const Document &doc,
                                    const WordSet &pronouns) {
  std::vector<Triple> out(triples.begin(), triples.end());
  // Last non-pronoun subject seen for each sentence.
  std::map<size_t, std::string> subjects;
  for (Triple &t : out) {
    if (t.sentence_index >= doc.size()) {
      throw Error(ErrorKind::kInvalidArgument,
                  fmt::format("triple refers to sentence {} of a {}-sentence "
                              "document",
                              t.sentence_index, doc.size()));
    }
    if (pronouns.Contains(JoinTerms(Terms(t.subject)))) {
      auto it = subjects.lower_bound(t.sentence_index);
      if (it != subjects.begin()) {
        --it;
        t.subject = it->second;
        t.resolved = true;
      }
    }
    if (!pronouns.Contains(JoinTerms(Terms(t.subject)))) {
      subjects[t.sentence_index] = t.subject;
    }
  }
  return out;
}

}  // namespace sumgraph
