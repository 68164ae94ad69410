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

#include "sumgraph/summarizer.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "sumgraph/error.h"
#include "sumgraph/harness.h"
#include "testing/oracles.h"

namespace sumgraph {
namespace {

const Lexicons &Lex() { return Lexicons::Default(); }

Triple T(std::string s, std::string o, size_t i = 0) {
  return Triple{std::move(s), "rel", std::move(o), i};
}

std::vector<ScoredSentence> Scores(std::vector<double> raw) {
  std::vector<ScoredSentence> out;
  for (size_t i = 0; i < raw.size(); ++i) out.push_back({i, raw[i], 0});
  return out;
}

std::vector<Document> CorpusDocuments() {
  std::vector<Document> docs;
  for (const CorpusEntry &e : LoadCorpus(SUMGRAPH_TEST_CORPUS).entries) {
    docs.push_back(Preprocess(ReadFile(e.document_path), Lex()));
  }
  return docs;
}

const std::vector<Document> &Corpus() {
  static const std::vector<Document> docs = CorpusDocuments();
  return docs;
}

TEST(VariantTest, NamesRoundTrip) {
  for (Variant v :
       {Variant::kWinnow, Variant::kNonWinnow, Variant::kNonWinnowKS}) {
    EXPECT_EQ(ParseVariant(VariantName(v)), v);
  }
  EXPECT_EQ(ParseVariant("Summ-NW-K*S"), Variant::kNonWinnowKS);
  EXPECT_EQ(ParseVariant("nw_ks"), Variant::kNonWinnowKS);
  EXPECT_THROW(ParseVariant("lead"), Error);
  for (Normalization n : {Normalization::kNone, Normalization::kIdentity,
                          Normalization::kSqrt, Normalization::kLog}) {
    EXPECT_EQ(ParseNormalization(NormalizationName(n)), n);
  }
  EXPECT_THROW(ParseNormalization("cube"), Error);
}

TEST(SummaryConfigTest, Validation) {
  SummaryConfig config;
  EXPECT_NO_THROW(config.Validate());
  for (double bad : {0.0, -0.1, 1.5, std::nan("")}) {
    config.ratio = bad;
    EXPECT_THROW(config.Validate(), Error) << bad;
  }
  config.ratio = 1.0;
  EXPECT_NO_THROW(config.Validate());
  config.winnow_top_k = 5;
  EXPECT_THROW(config.Validate(), Error);
  config.winnow_top_k = 4;
  config.word_budget = 0;
  EXPECT_THROW(config.Validate(), Error);
}

TEST(SummaryLengthTest, FloorWithMinimumOne) {
  EXPECT_EQ(SummaryLength(10, 0.20), 2u);
  EXPECT_EQ(SummaryLength(3, 0.10), 1u);
  EXPECT_EQ(SummaryLength(30, 0.10), 3u);
  EXPECT_EQ(SummaryLength(20, 0.15), 3u);
  EXPECT_EQ(SummaryLength(5, 1.0), 5u);
  EXPECT_EQ(SummaryLength(0, 0.5), 0u);
}

TEST(ScoreByConnectivityTest, SumsNodesOncePerSentence) {
  Document doc = Preprocess(
      "Alpha met beta. Nothing here. Alpha saw alpha again.", Lex());
  EntityGraph g = EntityGraph::Build(std::vector<Triple>{T("alpha", "beta")});
  std::vector<ScoredSentence> s = ScoreByConnectivity(doc, g);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].raw_score, 1.0);
  EXPECT_EQ(s[1].raw_score, 0.0);
  EXPECT_EQ(s[2].raw_score, 1.0);
  EXPECT_EQ(s[0].rank, 0u);
  EXPECT_EQ(s[2].rank, 1u);
  EXPECT_EQ(s[1].rank, 2u);
}

TEST(ScoreByConnectivityTest, MatchesBruteForceScan) {
  for (const Document &doc : Corpus()) {
    Analysis analysis = Summarizer().Analyze(doc);
    const EntityGraph &g = analysis.graph;
    std::vector<ScoredSentence> scores = ScoreByConnectivity(doc, g);
    for (const Sentence &sentence : doc.sentences) {
      std::string joined = JoinTerms(SentenceTerms(sentence));
      double expected = 0.0;
      for (size_t v = 0; v < g.size(); ++v) {
        if (testing::PhraseInSentence(JoinTerms(g.terms(v)), joined)) {
          expected += static_cast<double>(g.connectivity(v));
        }
      }
      EXPECT_EQ(scores[sentence.index].raw_score, expected);
    }
  }
}

TEST(ScoreByConnectivityAndKeyphraseTest, NodeProduct) {
  Document doc = Preprocess("solar power helps the grid.", Lex());
  EntityGraph g =
      EntityGraph::Build(std::vector<Triple>{T("solar power", "grid")});
  Keyphrase solar;
  solar.words = {"solar", "power"};
  solar.score = 5.0;
  Keyphrase grid;
  grid.words = {"grid"};
  grid.score = 7.0;
  std::vector<Keyphrase> keyphrases = {solar, grid};
  std::vector<ScoredSentence> s =
      ScoreByConnectivityAndKeyphrase(doc, g, keyphrases);
  // grid has connectivity 0, so only solar power contributes.
  EXPECT_EQ(s[0].raw_score, 5.0);
}

TEST(ScoreByConnectivityAndKeyphraseTest, BestMatchingKeyphraseAndMissing) {
  Document doc = Preprocess("solar power helps. wind farms help.", Lex());
  EntityGraph g = EntityGraph::Build(
      std::vector<Triple>{T("solar power", "grid"), T("wind farms", "grid")});
  Keyphrase solar;
  solar.words = {"solar"};
  solar.score = 2.0;
  Keyphrase solar_power;
  solar_power.words = {"solar", "power", "plant"};
  solar_power.score = 3.0;
  std::vector<Keyphrase> keyphrases = {solar, solar_power};
  std::vector<ScoredSentence> s =
      ScoreByConnectivityAndKeyphrase(doc, g, keyphrases);
  EXPECT_EQ(s[0].raw_score, 3.0);
  EXPECT_EQ(s[1].raw_score, 0.0);
}

TEST(ScoreByKeyphrasesTest, SumsPerOccurrence) {
  Document doc = Preprocess("solar power. solar power and solar power.", Lex());
  KeywordAnalysis analysis = AnalyzeKeywords(doc, Lex());
  std::vector<ScoredSentence> s = ScoreByKeyphrases(doc, analysis.keyphrases);
  ASSERT_EQ(analysis.keyphrases.size(), 1u);
  double k = analysis.keyphrases[0].score;
  EXPECT_DOUBLE_EQ(s[0].raw_score, k);
  EXPECT_DOUBLE_EQ(s[1].raw_score, 2 * k);
}

TEST(NormalizeScoresTest, Functions) {
  Document doc = Preprocess(
      "one two three four. a b c d e f g h i j.", Lex());
  std::vector<ScoredSentence> raw = Scores({10.0, 10.0});
  EXPECT_DOUBLE_EQ(NormalizeScores(raw, doc, Normalization::kSqrt)[0].raw_score,
                   5.0);
  EXPECT_DOUBLE_EQ(
      NormalizeScores(raw, doc, Normalization::kIdentity)[1].raw_score, 1.0);
  EXPECT_DOUBLE_EQ(NormalizeScores(raw, doc, Normalization::kLog)[0].raw_score,
                   10.0 / std::log(5.0));
  std::vector<ScoredSentence> none =
      NormalizeScores(raw, doc, Normalization::kNone);
  EXPECT_EQ(none[0].raw_score, 10.0);
  EXPECT_EQ(none[1].raw_score, 10.0);
}

TEST(SelectSummaryTest, TopRatioInDocumentOrder) {
  SummaryResult r =
      SelectSummary(Scores({1, 5, 0, 3, 9, 2, 2, 8, 0, 1}), 0.20);
  EXPECT_EQ(r.selected, (std::vector<size_t>{4, 7}));
  EXPECT_EQ(r.scores[4].rank, 0u);
  EXPECT_EQ(r.scores[7].rank, 1u);
}

TEST(SelectSummaryTest, TiesGoToEarlierSentences) {
  SummaryResult r = SelectSummary(Scores(std::vector<double>(10, 1.0)), 0.30);
  EXPECT_EQ(r.selected, (std::vector<size_t>{0, 1, 2}));
}

TEST(SelectSummaryTest, MinimumOneAndEmpty) {
  EXPECT_EQ(SelectSummary(Scores({0, 1, 0}), 0.10).selected,
            std::vector<size_t>{1});
  EXPECT_TRUE(SelectSummary({}, 0.5).selected.empty());
}

TEST(WinnowTest, KeepsThreeWhenCoverageIsHigh) {
  // Ten sentences; the three most connected nodes appear in seven of them.
  Document doc = Preprocess(
      "alpha one. beta two. gamma three. alpha four. beta five. gamma six. "
      "alpha seven. delta eight. epsilon nine. zeta ten.",
      Lex());
  std::vector<Triple> triples = {
      T("alpha", "x"), T("alpha", "y"), T("alpha", "z"), T("beta", "x"),
      T("beta", "y"),  T("gamma", "x"), T("gamma", "y"), T("delta", "x")};
  EntityGraph g = EntityGraph::Build(triples);
  WinnowResult w = Winnow(doc, g, {});
  EXPECT_EQ(w.top_k, 3u);
  EXPECT_FALSE(w.fell_back);
  EXPECT_EQ(w.document.size(), 7u);
  EXPECT_EQ(w.original_index, (std::vector<size_t>{0, 1, 2, 3, 4, 5, 6}));
  for (size_t i = 0; i < w.document.size(); ++i) {
    EXPECT_EQ(w.document.sentences[i].index, i);
    EXPECT_EQ(w.document.sentences[i].text,
              doc.sentences[w.original_index[i]].text);
  }
}

TEST(WinnowTest, WidensToFourWhenCoverageIsLow) {
  Document doc = Preprocess(
      "alpha one. beta two. gamma three. delta four. delta five. omega six. "
      "omega seven. omega eight. omega nine. omega ten.",
      Lex());
  std::vector<Triple> triples = {
      T("alpha", "x"), T("alpha", "y"), T("alpha", "z"), T("beta", "x"),
      T("beta", "y"),  T("gamma", "x"), T("gamma", "y"), T("delta", "x")};
  EntityGraph g = EntityGraph::Build(triples);
  WinnowResult w = Winnow(doc, g, {});
  EXPECT_EQ(w.top_k, 4u);
  EXPECT_EQ(w.original_index, (std::vector<size_t>{0, 1, 2, 3, 4}));
}

TEST(WinnowTest, EmptyGraphFallsBack) {
  Document doc = Preprocess("alpha one. beta two.", Lex());
  WinnowResult w = Winnow(doc, EntityGraph{}, {});
  EXPECT_TRUE(w.fell_back);
  EXPECT_EQ(w.document.size(), doc.size());
  EXPECT_EQ(w.original_index, (std::vector<size_t>{0, 1}));
}

TEST(SummarizerTest, EmptyDocument) {
  SummaryResult r = Summarizer().Summarize(Document{});
  EXPECT_TRUE(r.selected.empty());
  EXPECT_EQ(RenderSummary(Document{}, r), "");
}

TEST(SummarizerTest, KeyphraseFallbackWhenNoTripleSurvives) {
  Document doc = Preprocess("Tall trees. Green hills and tall trees.", Lex());
  SummaryResult r = Summarizer().Summarize(doc);
  EXPECT_TRUE(r.keyphrase_fallback);
  EXPECT_EQ(r.selected, std::vector<size_t>{1});
  EXPECT_FALSE(r.diagnostics.empty());
}

TEST(SummarizerTest, ExternalTriplesDriveScores) {
  Document doc = Preprocess(
      "The harbor bridge opened. Ferries ran late. The council met.", Lex());
  std::vector<Triple> triples = {
      Triple{"council", "approved", "harbor bridge", 2,
             Provenance::kIngested}};
  SummaryConfig config;
  config.variant = Variant::kNonWinnow;
  config.ratio = 0.3;
  SummaryResult r = Summarizer(Lex(), config).Summarize(doc, triples);
  EXPECT_FALSE(r.keyphrase_fallback);
  EXPECT_EQ(r.selected, std::vector<size_t>{2});
}

TEST(SummarizerTest, WordBudget) {
  const Document &doc = Corpus().at(0);
  SummaryConfig config;
  config.word_budget = 60;
  SummaryResult r = Summarizer(Lex(), config).Summarize(doc);
  size_t words = 0;
  for (size_t i : r.selected) words += Terms(doc.sentences[i].text).size();
  ASSERT_FALSE(r.selected.empty());
  EXPECT_LE(words, 60u);
  EXPECT_TRUE(std::is_sorted(r.selected.begin(), r.selected.end()));

  config.word_budget = 1;
  EXPECT_EQ(Summarizer(Lex(), config).Summarize(doc).selected.size(), 1u);
}

TEST(SummarizerTest, RenderJoinsSelectedSentences) {
  Document doc = Preprocess("One here. Two there. Three everywhere.", Lex());
  SummaryResult r;
  r.selected = {0, 2};
  EXPECT_EQ(RenderSummary(doc, r), "One here.\nThree everywhere.");
}

TEST(SummarizerPropertyTest, SelectionContracts) {
  for (const Document &doc : Corpus()) {
    for (Variant v :
         {Variant::kWinnow, Variant::kNonWinnow, Variant::kNonWinnowKS}) {
      std::vector<size_t> previous;
      for (double ratio : {0.10, 0.15, 0.20}) {
        SummaryConfig config;
        config.variant = v;
        config.ratio = ratio;
        SummaryResult r = Summarizer(Lex(), config).Summarize(doc);
        EXPECT_EQ(r.selected.size(),
                  std::max<size_t>(1, static_cast<size_t>(
                                          std::floor(ratio * doc.size() +
                                                     1e-9))));
        for (size_t i = 1; i < r.selected.size(); ++i) {
          EXPECT_LT(r.selected[i - 1], r.selected[i]);
        }
        EXPECT_TRUE(std::includes(r.selected.begin(), r.selected.end(),
                                  previous.begin(), previous.end()));
        previous = r.selected;
        ASSERT_EQ(r.scores.size(), doc.size());
        std::vector<size_t> ranks;
        for (const ScoredSentence &s : r.scores) ranks.push_back(s.rank);
        std::sort(ranks.begin(), ranks.end());
        for (size_t i = 0; i < ranks.size(); ++i) EXPECT_EQ(ranks[i], i);
        if (v == Variant::kWinnow) {
          ASSERT_TRUE(r.intermediate_size.has_value());
          EXPECT_LE(*r.intermediate_size, doc.size());
        } else {
          EXPECT_FALSE(r.intermediate_size.has_value());
        }
      }
    }
  }
}

TEST(SummarizerPropertyTest, SelectionMonotoneInRatioOnRandomScores) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> value(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> raw(std::uniform_int_distribution<size_t>(1, 40)(rng));
    for (double &x : raw) x = value(rng);
    std::vector<size_t> previous;
    for (double ratio = 0.05; ratio <= 1.0; ratio += 0.05) {
      SummaryResult r = SelectSummary(Scores(raw), ratio);
      EXPECT_TRUE(std::includes(r.selected.begin(), r.selected.end(),
                                previous.begin(), previous.end()));
      previous = r.selected;
    }
  }
}

TEST(SummarizerPropertyTest, UniformKeyphraseScoresMatchNonWinnow) {
  for (const Document &doc : Corpus()) {
    Analysis analysis = Summarizer().Analyze(doc);
    for (double c : {0.5, 2.5, 7.0}) {
      std::vector<Keyphrase> uniform = analysis.keywords.keyphrases;
      for (Keyphrase &k : uniform) k.score = c;
      std::vector<size_t> nw =
          RankOrder(ScoreByConnectivity(doc, analysis.graph));
      std::vector<size_t> ks = RankOrder(
          ScoreByConnectivityAndKeyphrase(doc, analysis.graph, uniform));
      EXPECT_EQ(nw, ks);
    }
  }
}

TEST(SummarizerPropertyTest, ScalingConnectivityKeepsSelection) {
  for (const Document &doc : Corpus()) {
    Analysis analysis = Summarizer().Analyze(doc);
    std::vector<Triple> tripled;
    for (int copy = 0; copy < 3; ++copy) {
      tripled.insert(tripled.end(), analysis.filtered.begin(),
                     analysis.filtered.end());
    }
    EntityGraph scaled = EntityGraph::Build(tripled);
    for (double ratio : {0.10, 0.15, 0.20}) {
      EXPECT_EQ(
          SelectSummary(ScoreByConnectivity(doc, analysis.graph), ratio)
              .selected,
          SelectSummary(ScoreByConnectivity(doc, scaled), ratio).selected);
    }
  }
}

TEST(SummarizerPropertyTest, RerunsAreIdentical) {
  const Document &doc = Corpus().at(1);
  for (Variant v :
       {Variant::kWinnow, Variant::kNonWinnow, Variant::kNonWinnowKS}) {
    SummaryConfig config;
    config.variant = v;
    Summarizer summarizer(Lex(), config);
    SummaryResult a = summarizer.Summarize(doc);
    SummaryResult b = summarizer.Summarize(doc);
    EXPECT_EQ(a.selected, b.selected);
    EXPECT_EQ(RenderSummary(doc, a), RenderSummary(doc, b));
  }
}

}  // namespace
}  // namespace sumgraph
