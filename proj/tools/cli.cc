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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumgraph/error.h"
#include "sumgraph/graph.h"
#include "sumgraph/harness.h"
#include "sumgraph/keywords.h"
#include "sumgraph/lexicon.h"
#include "sumgraph/rouge.h"
#include "sumgraph/summarizer.h"
#include "sumgraph/text.h"
#include "sumgraph/triples.h"

namespace sumgraph::cli {
namespace {

using nlohmann::ordered_json;

// Word-list overrides shared by every subcommand.
struct LexiconFlags {
  std::string stopwords;
  std::string verbs;
  std::string abbreviations;
  std::string pronouns;

  void Register(CLI::App *app) {
    app->add_option("--stopwords", stopwords, "Stopword list file");
    app->add_option("--verbs", verbs, "Verb lexicon file");
    app->add_option("--abbreviations", abbreviations,
                    "Abbreviation list file");
    app->add_option("--pronouns", pronouns, "Pronoun list file");
  }

  Lexicons Load() const {
    Lexicons lexicons = Lexicons::Default();
    if (!stopwords.empty()) lexicons.stopwords = WordSet::Load(stopwords);
    if (!verbs.empty()) lexicons.verbs = VerbLexicon(WordSet::Load(verbs));
    if (!abbreviations.empty()) {
      lexicons.abbreviations = WordSet::Load(abbreviations);
    }
    if (!pronouns.empty()) lexicons.pronouns = WordSet::Load(pronouns);
    return lexicons;
  }
};

struct SummarizeFlags {
  std::string file;
  double ratio = 0.15;
  std::string variant = "nw-ks";
  std::string normalize = "none";
  std::string triples_file;
  size_t word_budget = 0;
  bool json = false;
  bool count_self = false;
  bool binary_edges = false;
  LexiconFlags lexicons;
};

struct KeywordsFlags {
  std::string file;
  bool json = false;
  bool count_self = false;
  LexiconFlags lexicons;
};

struct TriplesFlags {
  std::string file;
  std::string graph_out;
  std::string triples_file;
  bool binary_edges = false;
  LexiconFlags lexicons;
};

struct EvalFlags {
  std::string corpus;
  std::vector<double> ratios = {0.10, 0.15, 0.20};
  std::vector<std::string> variants = {"w", "nw", "nw-ks"};
  std::string normalize = "none";
  bool no_lead = false;
  bool json = false;
  bool csv = false;
  size_t jobs = 1;
  LexiconFlags lexicons;
};

std::string Score(double value) { return fmt::format("{:.6f}", value); }

void WriteFile(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) {
    throw Error(ErrorKind::kIo, "cannot write " + path);
  }
}

ordered_json ConfigJson(const SummaryConfig &config) {
  ordered_json j;
  j["variant"] = VariantName(config.variant);
  j["ratio"] = config.ratio;
  j["normalize"] = NormalizationName(config.normalize);
  j["winnow_top_k"] = config.winnow_top_k;
  j["winnow_target"] = {config.winnow_min_fraction,
                        config.winnow_max_fraction};
  j["word_budget"] = config.word_budget ? ordered_json(*config.word_budget)
                                        : ordered_json(nullptr);
  j["degree_counts_self"] = config.keywords.count_self;
  j["edge_multiplicity"] = config.graph.edge_multiplicity;
  return j;
}

ordered_json RougeJson(const RougeReport &r) {
  ordered_json j;
  j["recall"] = r.recall;
  j["precision"] = r.precision;
  j["f"] = r.f_score;
  j["matched"] = r.matched;
  j["ref_count"] = r.ref_count;
  j["sys_count"] = r.sys_count;
  return j;
}

int Summarize(const SummarizeFlags &flags, std::ostream &out,
              std::ostream &err) {
  Lexicons lexicons = flags.lexicons.Load();
  SummaryConfig config;
  config.variant = ParseVariant(flags.variant);
  config.ratio = flags.ratio;
  config.normalize = ParseNormalization(flags.normalize);
  if (flags.word_budget > 0) config.word_budget = flags.word_budget;
  config.keywords.count_self = flags.count_self;
  config.graph.edge_multiplicity = !flags.binary_edges;

  Document doc = Preprocess(ReadFile(flags.file), lexicons);
  Summarizer summarizer(lexicons, config);
  SummaryResult result;
  if (!flags.triples_file.empty()) {
    std::vector<Triple> triples = IngestTriples(flags.triples_file, doc);
    result = summarizer.Summarize(doc, std::span<const Triple>(triples));
  } else {
    result = summarizer.Summarize(doc);
  }
  for (const std::string &d : result.diagnostics) err << "note: " << d << '\n';

  if (!flags.json) {
    std::string text = RenderSummary(doc, result);
    if (!text.empty()) out << text << '\n';
    return kExitOk;
  }
  ordered_json j;
  j["file"] = flags.file;
  j["sentence_count"] = doc.size();
  j["variant"] = VariantName(config.variant);
  j["config"] = ConfigJson(result.config);
  j["selected"] = result.selected;
  ordered_json sentences = ordered_json::array();
  for (size_t i : result.selected) sentences.push_back(doc.sentences[i].text);
  j["sentences"] = std::move(sentences);
  ordered_json scores = ordered_json::array();
  for (const ScoredSentence &s : result.scores) {
    scores.push_back(
        {{"index", s.sentence_index}, {"score", s.raw_score}, {"rank", s.rank}});
  }
  j["scores"] = std::move(scores);
  j["intermediate_size"] = result.intermediate_size
                               ? ordered_json(*result.intermediate_size)
                               : ordered_json(nullptr);
  j["keyphrase_fallback"] = result.keyphrase_fallback;
  j["diagnostics"] = result.diagnostics;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int Keywords(const KeywordsFlags &flags, std::ostream &out) {
  Lexicons lexicons = flags.lexicons.Load();
  Document doc = Preprocess(ReadFile(flags.file), lexicons);
  KeywordOptions options;
  options.count_self = flags.count_self;
  KeywordAnalysis analysis = AnalyzeKeywords(doc, lexicons, options);

  std::vector<const KeywordStats *> stats;
  for (const auto &[word, s] : analysis.stats) stats.push_back(&s);
  std::stable_sort(stats.begin(), stats.end(),
                   [](const KeywordStats *a, const KeywordStats *b) {
                     return a->score() > b->score();
                   });
  std::vector<const Keyphrase *> phrases;
  for (const Keyphrase &k : analysis.keyphrases) phrases.push_back(&k);
  std::stable_sort(phrases.begin(), phrases.end(),
                   [](const Keyphrase *a, const Keyphrase *b) {
                     return a->score > b->score;
                   });

  if (flags.json) {
    ordered_json j;
    ordered_json kw = ordered_json::array();
    for (const KeywordStats *s : stats) {
      kw.push_back({{"keyword", s->keyword},
                    {"frequency", s->frequency},
                    {"degree", s->degree},
                    {"score", s->score()}});
    }
    ordered_json kp = ordered_json::array();
    for (const Keyphrase *k : phrases) {
      ordered_json occurrences = ordered_json::array();
      for (const Occurrence &o : k->occurrences) {
        occurrences.push_back({o.sentence_index, o.span.begin, o.span.end});
      }
      kp.push_back({{"words", k->words},
                    {"score", k->score},
                    {"occurrences", std::move(occurrences)}});
    }
    j["keywords"] = std::move(kw);
    j["keyphrases"] = std::move(kp);
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << "# keyword\tfrequency\tdegree\tscore\n";
  for (const KeywordStats *s : stats) {
    out << s->keyword << '\t' << s->frequency << '\t' << s->degree << '\t'
        << Score(s->score()) << '\n';
  }
  out << "\n# keyphrase\toccurrences\tscore\n";
  for (const Keyphrase *k : phrases) {
    out << fmt::format("{}\t{}\t{}\n", fmt::join(k->words, " "),
                       k->occurrences.size(), Score(k->score));
  }
  return kExitOk;
}

int Triples(const TriplesFlags &flags, std::ostream &out) {
  Lexicons lexicons = flags.lexicons.Load();
  Document doc = Preprocess(ReadFile(flags.file), lexicons);
  SummaryConfig config;
  config.graph.edge_multiplicity = !flags.binary_edges;
  Summarizer summarizer(lexicons, config);
  Analysis analysis;
  if (!flags.triples_file.empty()) {
    std::vector<Triple> triples = IngestTriples(flags.triples_file, doc);
    analysis = summarizer.Analyze(doc, std::span<const Triple>(triples));
  } else {
    analysis = summarizer.Analyze(doc);
  }

  out << "# sentence\tsubject\taction\tobject\tprovenance\tresolved\tkept\n";
  for (const Triple &t : analysis.triples) {
    bool kept = std::find(analysis.filtered.begin(), analysis.filtered.end(),
                          t) != analysis.filtered.end();
    out << t.sentence_index << '\t' << t.subject << '\t' << t.action << '\t'
        << t.object << '\t' << ProvenanceName(t.provenance) << '\t'
        << (t.resolved ? "yes" : "no") << '\t' << (kept ? "yes" : "no")
        << '\n';
  }

  if (!flags.graph_out.empty()) {
    std::ostringstream edges, nodes;
    WriteEdgeList(edges, analysis.graph);
    WriteNodeList(nodes, analysis.graph);
    WriteFile(flags.graph_out + ".edges.tsv", edges.str());
    WriteFile(flags.graph_out + ".nodes.tsv", nodes.str());
  }
  return kExitOk;
}

int Eval(const EvalFlags &flags, std::ostream &out, std::ostream &err) {
  if (flags.json && flags.csv) {
    throw Error(ErrorKind::kInvalidArgument,
                "--json and --csv are mutually exclusive");
  }
  Lexicons lexicons = flags.lexicons.Load();
  SweepOptions options;
  options.variants.clear();
  for (const std::string &v : flags.variants) {
    options.variants.push_back(ParseVariant(v));
  }
  options.ratios = flags.ratios;
  options.include_lead = !flags.no_lead;
  options.jobs = flags.jobs;
  options.base.normalize = ParseNormalization(flags.normalize);
  for (double r : options.ratios) {
    SummaryConfig probe = options.base;
    probe.ratio = r;
    probe.Validate();
  }

  Corpus corpus = LoadCorpus(flags.corpus);
  for (const std::string &w : corpus.warnings) err << "warning: " << w << '\n';
  if (corpus.entries.empty()) {
    throw Error(ErrorKind::kCorpus, "no document has a reference summary");
  }
  SweepResult sweep = RunSweep(corpus.entries, lexicons, options);
  for (const SkippedRow &s : sweep.skipped) {
    err << fmt::format("skipped: {} {} {}: {}\n", s.doc_id, s.variant,
                       s.ratio, s.reason);
  }

  if (flags.csv) {
    out << "doc_id,variant,ratio,recall,precision,f\n";
    for (const EvalRow &row : sweep.rows) {
      out << fmt::format("{},{},{},{},{},{}\n", row.doc_id, row.variant,
                         row.ratio, Score(row.report.recall),
                         Score(row.report.precision),
                         Score(row.report.f_score));
    }
    return kExitOk;
  }
  if (flags.json) {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const EvalRow &row : sweep.rows) {
      ordered_json r;
      r["doc_id"] = row.doc_id;
      r["variant"] = row.variant;
      r["ratio"] = row.ratio;
      ordered_json report = RougeJson(row.report);
      for (auto &[k, v] : report.items()) r[k] = v;
      rows.push_back(std::move(r));
    }
    ordered_json aggregates = ordered_json::array();
    for (const Aggregate &a : sweep.aggregates) {
      aggregates.push_back(
          {{"variant", a.variant},
           {"ratio", a.ratio},
           {"count", a.count},
           {"recall", {{"mean", a.recall.mean}, {"sd", a.recall.sd}}},
           {"precision", {{"mean", a.precision.mean}, {"sd", a.precision.sd}}},
           {"f", {{"mean", a.f_score.mean}, {"sd", a.f_score.sd}}}});
    }
    ordered_json skipped = ordered_json::array();
    for (const SkippedRow &s : sweep.skipped) {
      skipped.push_back({{"doc_id", s.doc_id},
                         {"variant", s.variant},
                         {"ratio", s.ratio},
                         {"reason", s.reason}});
    }
    j["rows"] = std::move(rows);
    j["aggregates"] = std::move(aggregates);
    j["skipped"] = std::move(skipped);
    j["warnings"] = corpus.warnings;
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  out << fmt::format("{} documents\n", corpus.entries.size());
  out << fmt::format("{:<8}{:>7}{:>6}  {:>17}  {:>17}  {:>17}\n", "variant",
                     "ratio", "docs", "recall (sd)", "precision (sd)",
                     "f (sd)");
  for (const Aggregate &a : sweep.aggregates) {
    out << fmt::format(
        "{:<8}{:>7.2f}{:>6}  {:.4f} ({:.4f})  {:.4f} ({:.4f})  "
        "{:.4f} ({:.4f})\n",
        a.variant, a.ratio, a.count, a.recall.mean, a.recall.sd,
        a.precision.mean, a.precision.sd, a.f_score.mean, a.f_score.sd);
  }
  return kExitOk;
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return kExitUsage;
    case ErrorKind::kIo: return kExitIo;
    case ErrorKind::kFormat: return kExitIo;
    case ErrorKind::kCorpus: return kExitCorpus;
  }
  return kExitUsage;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Hybrid keyword and entity-graph extractive summarizer",
               "sumgraph"};
  app.require_subcommand(1);

  SummarizeFlags summarize;
  CLI::App *summarize_cmd =
      app.add_subcommand("summarize", "Summarize a text file");
  summarize_cmd->add_option("file", summarize.file, "Input text file")
      ->required();
  summarize_cmd
      ->add_option("--ratio", summarize.ratio,
                   "Summary length as a fraction of the sentences")
      ->capture_default_str();
  summarize_cmd
      ->add_option("--variant", summarize.variant, "w, nw or nw-ks")
      ->capture_default_str();
  summarize_cmd
      ->add_option("--normalize", summarize.normalize,
                   "none, identity, sqrt or log")
      ->capture_default_str();
  summarize_cmd->add_option("--triples-file", summarize.triples_file,
                            "Use triples from this file instead of the "
                            "built-in extractor");
  summarize_cmd->add_option("--word-budget", summarize.word_budget,
                            "Select by word budget instead of ratio");
  summarize_cmd->add_flag("--json", summarize.json, "Emit a JSON record");
  summarize_cmd->add_flag("--degree-counts-self", summarize.count_self,
                          "Count a keyword's own occurrence in its degree");
  summarize_cmd->add_flag("--binary-edges", summarize.binary_edges,
                          "Ignore repeated subject-object pairs");
  summarize.lexicons.Register(summarize_cmd);

  KeywordsFlags keywords;
  CLI::App *keywords_cmd =
      app.add_subcommand("keywords", "Dump keyword and keyphrase scores");
  keywords_cmd->add_option("file", keywords.file, "Input text file")
      ->required();
  keywords_cmd->add_flag("--json", keywords.json, "Emit JSON");
  keywords_cmd->add_flag("--degree-counts-self", keywords.count_self,
                         "Count a keyword's own occurrence in its degree");
  keywords.lexicons.Register(keywords_cmd);

  TriplesFlags triples;
  CLI::App *triples_cmd = app.add_subcommand(
      "triples", "Dump cleaned triples and optionally the entity graph");
  triples_cmd->add_option("file", triples.file, "Input text file")->required();
  triples_cmd->add_option("--graph-out", triples.graph_out,
                          "Write PREFIX.edges.tsv and PREFIX.nodes.tsv");
  triples_cmd->add_option("--triples-file", triples.triples_file,
                          "Use triples from this file");
  triples_cmd->add_flag("--binary-edges", triples.binary_edges,
                        "Ignore repeated subject-object pairs");
  triples.lexicons.Register(triples_cmd);

  EvalFlags eval;
  CLI::App *eval_cmd = app.add_subcommand(
      "eval", "ROUGE-1 sweep over a corpus of document/reference pairs");
  eval_cmd->add_option("--corpus", eval.corpus, "Corpus root directory")
      ->required();
  eval_cmd->add_option("--ratios", eval.ratios, "Summary length fractions")
      ->delimiter(',')
      ->capture_default_str();
  eval_cmd->add_option("--variants", eval.variants, "Variants to run")
      ->delimiter(',')
      ->capture_default_str();
  eval_cmd->add_option("--normalize", eval.normalize,
                       "none, identity, sqrt or log")
      ->capture_default_str();
  eval_cmd->add_option("--jobs", eval.jobs, "Documents processed in parallel")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_flag("--no-lead", eval.no_lead, "Skip the lead baseline");
  eval_cmd->add_flag("--json", eval.json, "Emit JSON");
  eval_cmd->add_flag("--csv", eval.csv, "Emit CSV rows");
  eval.lexicons.Register(eval_cmd);

  // CLI11 consumes a vector of arguments from the back.
  std::vector<std::string> reversed;
  for (size_t i = args.size(); i > 1; --i) reversed.push_back(args[i - 1]);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (summarize_cmd->parsed()) return Summarize(summarize, out, err);
    if (keywords_cmd->parsed()) return Keywords(keywords, out);
    if (triples_cmd->parsed()) return Triples(triples, out);
    if (eval_cmd->parsed()) return Eval(eval, out, err);
  } catch (const Error &e) {
    err << "sumgraph: " << e.what() << '\n';
    return ExitCode(e.kind());
  } catch (const std::exception &e) {
    err << "sumgraph: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace sumgraph::cli
