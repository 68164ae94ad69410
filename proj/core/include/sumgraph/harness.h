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

#ifndef SUMGRAPH_HARNESS_H_
#define SUMGRAPH_HARNESS_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumgraph/lexicon.h"
#include "sumgraph/rouge.h"
#include "sumgraph/summarizer.h"

namespace sumgraph {

struct CorpusEntry {
  std::string doc_id;
  std::filesystem::path document_path;
  std::filesystem::path reference_path;
  // Externally extracted triples for the document, if the corpus has them.
  std::optional<std::filesystem::path> triples_path;
};

struct Corpus {
  std::vector<CorpusEntry> entries;  // sorted by doc_id
  std::vector<std::string> warnings;
};

// Pairs root/docs/<name>.txt with root/refs/<name>.txt. Documents without
// a reference are skipped with a warning. root/triples/<name>.jsonl, when
// present, supplies the document's triples in triple-file format.
// Throws Error(kCorpus) if root or root/docs is missing or holds no
// documents.
Corpus LoadCorpus(const std::filesystem::path &root);

// Reads a whole file. Throws Error(kIo).
std::string ReadFile(const std::filesystem::path &path);

struct EvalRow {
  std::string doc_id;
  std::string variant;  // "w", "nw", "nw-ks" or "lead"
  double ratio = 0.0;
  RougeReport report;
};

struct SkippedRow {
  std::string doc_id;
  std::string variant;
  double ratio = 0.0;
  std::string reason;
};

struct Moments {
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 for fewer than 2 rows
};

struct Aggregate {
  std::string variant;
  double ratio = 0.0;
  size_t count = 0;
  Moments recall;
  Moments precision;
  Moments f_score;
};

struct SweepOptions {
  std::vector<Variant> variants = {Variant::kWinnow, Variant::kNonWinnow,
                                   Variant::kNonWinnowKS};
  std::vector<double> ratios = {0.10, 0.15, 0.20};
  bool include_lead = true;
  size_t jobs = 1;      // documents processed concurrently
  SummaryConfig base;   // variant and ratio are overridden per run
};

struct SweepResult {
  // Ordered by doc_id, then variant (lead last), then ratio.
  std::vector<EvalRow> rows;
  std::vector<SkippedRow> skipped;
  // Ordered by variant, then ratio.
  std::vector<Aggregate> aggregates;
};

// The first SummaryLength(n, ratio) sentences.
std::vector<size_t> LeadSelection(size_t sentence_count, double ratio);

// Summarizes every document with every variant and ratio, plus the lead
// baseline, and scores each summary against its reference with ROUGE-1.
// A failing document yields skipped rows instead of aborting the sweep.
SweepResult RunSweep(std::span<const CorpusEntry> corpus,
                     const Lexicons &lexicons, const SweepOptions &options);

std::vector<Aggregate> AggregateRows(std::span<const EvalRow> rows);

}  // namespace sumgraph

#endif  // SUMGRAPH_HARNESS_H_
