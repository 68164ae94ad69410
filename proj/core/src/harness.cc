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

#include "sumgraph/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "sumgraph/error.h"
#include "sumgraph/triples.h"

namespace sumgraph {
namespace fs = std::filesystem;
namespace {

struct DocumentRuns {
  std::vector<EvalRow> rows;
  std::vector<SkippedRow> skipped;
};

DocumentRuns EvaluateDocument(const CorpusEntry &entry,
                              const Lexicons &lexicons,
                              const SweepOptions &options) {
  DocumentRuns runs;
  std::vector<std::string> variants;
  for (Variant v : options.variants) variants.emplace_back(VariantName(v));
  if (options.include_lead) variants.emplace_back("lead");

  auto skip_all = [&](const std::string &reason) {
    for (const std::string &v : variants) {
      for (double r : options.ratios) {
        runs.skipped.push_back({entry.doc_id, v, r, reason});
      }
    }
  };

  Document doc;
  std::string reference;
  std::optional<std::vector<Triple>> triples;
  try {
    doc = Preprocess(ReadFile(entry.document_path), lexicons);
    reference = ReadFile(entry.reference_path);
    if (entry.triples_path) triples = IngestTriples(*entry.triples_path, doc);
  } catch (const std::exception &e) {
    skip_all(e.what());
    return runs;
  }
  if (doc.empty()) {
    skip_all("document has no sentences");
    return runs;
  }

  for (Variant variant : options.variants) {
    for (double ratio : options.ratios) {
      std::string name(VariantName(variant));
      try {
        SummaryConfig config = options.base;
        config.variant = variant;
        config.ratio = ratio;
        Summarizer summarizer(lexicons, config);
        SummaryResult result =
            triples ? summarizer.Summarize(doc, std::span<const Triple>(*triples))
                    : summarizer.Summarize(doc);
        runs.rows.push_back(
            {entry.doc_id, name, ratio,
             Rouge1(RenderSummary(doc, result), reference,
                    lexicons.stopwords)});
      } catch (const std::exception &e) {
        runs.skipped.push_back({entry.doc_id, name, ratio, e.what()});
      }
    }
  }
  if (options.include_lead) {
    for (double ratio : options.ratios) {
      SummaryResult lead;
      lead.selected = LeadSelection(doc.size(), ratio);
      runs.rows.push_back({entry.doc_id, "lead", ratio,
                           Rouge1(RenderSummary(doc, lead), reference,
                                  lexicons.stopwords)});
    }
  }
  return runs;
}

Moments ComputeMoments(const std::vector<double> &values) {
  Moments m;
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - m.mean) * (v - m.mean);
    m.sd = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return m;
}

}  // namespace

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Corpus LoadCorpus(const fs::path &root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorKind::kCorpus,
                "corpus root is not a directory: " + root.string());
  }
  const fs::path docs = root / "docs";
  const fs::path refs = root / "refs";
  const fs::path triples = root / "triples";
  if (!fs::is_directory(docs, ec)) {
    throw Error(ErrorKind::kCorpus, "missing docs/ under " + root.string());
  }

  std::vector<fs::path> documents;
  for (const fs::directory_entry &e : fs::directory_iterator(docs)) {
    if (e.is_regular_file() && e.path().extension() == ".txt") {
      documents.push_back(e.path());
    }
  }
  if (documents.empty()) {
    throw Error(ErrorKind::kCorpus, "no documents in " + docs.string());
  }
  std::sort(documents.begin(), documents.end());

  Corpus corpus;
  for (const fs::path &doc : documents) {
    fs::path ref = refs / doc.filename();
    std::string id = doc.stem().string();
    if (!fs::is_regular_file(ref, ec)) {
      corpus.warnings.push_back(
          fmt::format("{}: no reference summary at {}; skipped", id,
                      ref.string()));
      continue;
    }
    CorpusEntry entry{id, doc, ref, std::nullopt};
    fs::path t = triples / (id + ".jsonl");
    if (fs::is_regular_file(t, ec)) entry.triples_path = t;
    corpus.entries.push_back(std::move(entry));
  }
  return corpus;
}

std::vector<size_t> LeadSelection(size_t sentence_count, double ratio) {
  std::vector<size_t> lead(SummaryLength(sentence_count, ratio));
  for (size_t i = 0; i < lead.size(); ++i) lead[i] = i;
  return lead;
}

SweepResult RunSweep(std::span<const CorpusEntry> corpus,
                     const Lexicons &lexicons, const SweepOptions &options) {
  if (corpus.empty()) {
    throw Error(ErrorKind::kCorpus, "cannot evaluate an empty corpus");
  }
  std::vector<const CorpusEntry *> entries;
  for (const CorpusEntry &e : corpus) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry *a, const CorpusEntry *b) {
              return a->doc_id < b->doc_id;
            });

  std::vector<DocumentRuns> runs(entries.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < entries.size(); i = next++) {
      runs[i] = EvaluateDocument(*entries[i], lexicons, options);
    }
  };
  size_t jobs = std::clamp<size_t>(options.jobs, 1, entries.size());
  std::vector<std::thread> threads;
  for (size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread &t : threads) t.join();

  SweepResult result;
  for (DocumentRuns &r : runs) {
    std::move(r.rows.begin(), r.rows.end(), std::back_inserter(result.rows));
    std::move(r.skipped.begin(), r.skipped.end(),
              std::back_inserter(result.skipped));
  }
  result.aggregates = AggregateRows(result.rows);
  return result;
}

std::vector<Aggregate> AggregateRows(std::span<const EvalRow> rows) {
  struct Bucket {
    std::string variant;
    double ratio;
    std::vector<double> recall, precision, f_score;
  };
  std::vector<Bucket> buckets;
  for (const EvalRow &row : rows) {
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const Bucket &b) {
                             return b.variant == row.variant &&
                                    b.ratio == row.ratio;
                           });
    if (it == buckets.end()) {
      buckets.push_back({row.variant, row.ratio, {}, {}, {}});
      it = buckets.end() - 1;
    }
    it->recall.push_back(row.report.recall);
    it->precision.push_back(row.report.precision);
    it->f_score.push_back(row.report.f_score);
  }
  std::vector<Aggregate> out;
  for (const Bucket &b : buckets) {
    out.push_back({b.variant, b.ratio, b.recall.size(),
                   ComputeMoments(b.recall), ComputeMoments(b.precision),
                   ComputeMoments(b.f_score)});
  }
  return out;
}

}  // namespace sumgraph
