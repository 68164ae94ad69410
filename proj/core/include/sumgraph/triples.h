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

#ifndef SUMGRAPH_TRIPLES_H_
#define SUMGRAPH_TRIPLES_H_

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "sumgraph/lexicon.h"
#include "sumgraph/text.h"

namespace sumgraph {

enum class Provenance { kHeuristic, kIngested };

const char *ProvenanceName(Provenance provenance);

// A (subject, action, object) relation asserted by one sentence.
struct Triple {
  std::string subject;
  std::string action;
  std::string object;
  size_t sentence_index = 0;
  Provenance provenance = Provenance::kHeuristic;
  bool resolved = false;  // subject was rewritten by anaphora resolution

  bool operator==(const Triple &other) const = default;
};

// Rule-based subject-verb-object extraction for active-voice clauses.
//
// The sentence is cut into clauses at commas, semicolons and coordinating
// conjunctions. In each clause the action is the first run of verbs that
// follows at least one entity token; the subject is the run of entity
// tokens ending right before it and the object is the first run of entity
// tokens after it, skipping stopwords. Entity tokens are tokens that are
// neither stopwords nor verbs; pronouns also count as entities so that
// anaphora resolution has something to rewrite.
std::vector<Triple> ExtractTriplesHeuristic(const Sentence &sentence,
                                            const Lexicons &lexicons);

std::vector<Triple> ExtractTriplesHeuristic(const Document &doc,
                                            const Lexicons &lexicons);

// Reads the triple-file format: one JSON object per line with exactly the
// keys "s", "a", "o" (strings) and "i" (sentence index). Blank lines and
// lines starting with '#' are skipped. Throws Error(kFormat) naming the
// line and field for malformed records and out-of-range indices.
std::vector<Triple> ParseTriples(std::istream &in, size_t sentence_count);

// Throws Error(kIo) if the file cannot be opened.
std::vector<Triple> IngestTriples(const std::filesystem::path &path,
                                  const Document &doc);

// Removes redundant triples within each sentence:
//   1. exact duplicates (by normalized terms) collapse to one;
//   2. of triples sharing subject and action, only the longest object
//      survives (first wins ties);
//   3. a triple whose subject, action and object are each contiguous
//      term runs of another surviving triple is dropped.
// Triples with an empty subject or object are dropped. Output is ordered
// by sentence index, then input order.
std::vector<Triple> CleanupTriples(std::span<const Triple> raw);

// Replaces pronoun subjects with the last non-pronoun subject of the
// nearest preceding sentence that has one. Objects are never touched.
std::vector<Triple> ResolveAnaphora(std::span<const Triple> triples,
                                    const Document &doc,
                                    const WordSet &pronouns);

}  // namespace sumgraph

#endif  // SUMGRAPH_TRIPLES_H_
