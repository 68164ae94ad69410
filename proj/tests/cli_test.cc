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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include "json.hpp"

namespace sumgraph::cli {
namespace {

namespace fs = std::filesystem;

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "sumgraph");
  std::ostringstream out, err;
  int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

const fs::path kCorpus = SUMGRAPH_TEST_CORPUS;
const fs::path kGolden = SUMGRAPH_TEST_GOLDEN;

std::string Doc(const std::string &id) {
  return (kCorpus / "docs" / (id + ".txt")).string();
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path TempFile(const std::string &name, std::string_view text) {
  fs::path path = fs::temp_directory_path() / ("sumgraph_cli_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, NoArgumentsIsUsageError) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bogus"}).code, kExitUsage);
}

TEST(CliTest, HelpSucceeds) {
  Output o = RunCli({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("summarize"), std::string::npos);
}

TEST(CliTest, SummarizeBadOptionsAreUsageErrors) {
  EXPECT_EQ(RunCli({"summarize", Doc("river_flood"), "--ratio", "0"}).code,
            kExitUsage);
  EXPECT_EQ(RunCli({"summarize", Doc("river_flood"), "--variant", "x"}).code,
            kExitUsage);
  EXPECT_EQ(
      RunCli({"summarize", Doc("river_flood"), "--normalize", "cube"}).code,
      kExitUsage);
  EXPECT_EQ(RunCli({"summarize"}).code, kExitUsage);
}

TEST(CliTest, MissingFileIsIoError) {
  Output o = RunCli({"summarize", "/nonexistent/doc.txt"});
  EXPECT_EQ(o.code, kExitIo);
  EXPECT_FALSE(o.err.empty());
  EXPECT_EQ(RunCli({"summarize", Doc("river_flood"), "--stopwords",
                    "/nonexistent/stop.txt"})
                .code,
            kExitIo);
}

TEST(CliTest, MalformedTriplesFileIsIoError) {
  fs::path bad = TempFile("bad.jsonl", "{\"s\":\"a\",\"a\":\"b\"}\n");
  Output o = RunCli({"summarize", Doc("river_flood"), "--triples-file",
                     bad.string()});
  EXPECT_EQ(o.code, kExitIo);
  EXPECT_NE(o.err.find("line 1"), std::string::npos);
  fs::remove(bad);
}

TEST(CliTest, SummarizeMatchesGoldenFiles) {
  for (const auto &entry : fs::directory_iterator(kCorpus / "docs")) {
    std::string id = entry.path().stem().string();
    for (std::string variant : {"w", "nw", "nw-ks"}) {
      Output o = RunCli({"summarize", entry.path().string(), "--variant",
                         variant, "--ratio", "0.15"});
      ASSERT_EQ(o.code, kExitOk) << o.err;
      EXPECT_EQ(o.out, Slurp(kGolden / (id + "." + variant + ".txt")))
          << id << " " << variant;
    }
  }
}

TEST(CliTest, SummarizeJson) {
  Output o = RunCli({"summarize", Doc("solar_farm"), "--variant", "w",
                     "--json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  nlohmann::json j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["variant"], "w");
  size_t n = j["sentence_count"];
  EXPECT_EQ(j["selected"].size(), std::max<size_t>(1, n * 15 / 100));
  EXPECT_EQ(j["selected"].size(), j["sentences"].size());
  EXPECT_EQ(j["scores"].size(), n);
  EXPECT_TRUE(j["intermediate_size"].is_number());
  EXPECT_LE(j["intermediate_size"].get<size_t>(), n);
}

TEST(CliTest, SummarizeWithTriplesFileAndWordBudget) {
  fs::path triples = TempFile(
      "good.jsonl",
      "# external triples\n"
      "{\"s\":\"the river\",\"a\":\"flooded\",\"o\":\"the town\",\"i\":0}\n");
  Output o = RunCli({"summarize", Doc("river_flood"), "--triples-file",
                     triples.string(), "--word-budget", "40",
                     "--normalize", "sqrt"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_FALSE(o.out.empty());
  fs::remove(triples);
}

TEST(CliTest, KeywordsTable) {
  fs::path doc = TempFile(
      "kw.txt",
      "solar power reduces operating cost. solar panels generate power.");
  Output o = RunCli({"keywords", doc.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("solar\t2\t5\t2.5"), std::string::npos) << o.out;
  Output j = RunCli({"keywords", doc.string(), "--json"});
  ASSERT_EQ(j.code, kExitOk);
  nlohmann::json parsed;
  EXPECT_NO_THROW(parsed = nlohmann::json::parse(j.out));
  EXPECT_TRUE(parsed.is_object() || parsed.is_array());
  fs::remove(doc);
}

TEST(CliTest, TriplesAndGraphExport) {
  fs::path prefix = fs::temp_directory_path() / "sumgraph_cli_graph";
  Output o = RunCli({"triples", Doc("solar_farm"), "--graph-out",
                     prefix.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_FALSE(o.out.empty());
  std::string edges = Slurp(prefix.string() + ".edges.tsv");
  std::string nodes = Slurp(prefix.string() + ".nodes.tsv");
  ASSERT_FALSE(edges.empty());
  ASSERT_FALSE(nodes.empty());
  uint64_t edge_total = 0, node_total = 0;
  std::istringstream e(edges), n(nodes);
  std::string line;
  while (std::getline(e, line)) {
    edge_total += std::stoull(line.substr(line.rfind('\t') + 1));
  }
  while (std::getline(n, line)) {
    node_total += std::stoull(line.substr(line.rfind('\t') + 1));
  }
  EXPECT_EQ(edge_total, node_total);
  fs::remove(prefix.string() + ".edges.tsv");
  fs::remove(prefix.string() + ".nodes.tsv");
}

TEST(CliTest, EvalCsv) {
  Output o = RunCli({"eval", "--corpus", kCorpus.string(), "--csv",
                     "--variants", "nw,w", "--ratios", "0.1,0.2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::istringstream in(o.out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "doc_id,variant,ratio,recall,precision,f");
  size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5) << line;
  }
  // Two variants plus lead, two ratios, twelve documents.
  EXPECT_EQ(rows, 12u * 3 * 2);
}

TEST(CliTest, EvalJson) {
  Output o = RunCli({"eval", "--corpus", kCorpus.string(), "--json",
                     "--no-lead", "--jobs", "3"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  nlohmann::json j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["rows"].size(), 12u * 3 * 3);
  EXPECT_EQ(j["aggregates"].size(), 9u);
}

TEST(CliTest, EvalTextTable) {
  Output o = RunCli({"eval", "--corpus", kCorpus.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("lead"), std::string::npos);
}

TEST(CliTest, EvalCorpusErrors) {
  EXPECT_EQ(RunCli({"eval", "--corpus", "/nonexistent/corpus"}).code,
            kExitCorpus);
  fs::path empty = fs::temp_directory_path() / "sumgraph_cli_empty_corpus";
  fs::create_directories(empty / "docs");
  EXPECT_EQ(RunCli({"eval", "--corpus", empty.string()}).code, kExitCorpus);
  fs::remove_all(empty);
  EXPECT_EQ(RunCli({"eval"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"eval", "--corpus", kCorpus.string(), "--ratios", "2"})
                .code,
            kExitUsage);
}

}  // namespace
}  // namespace sumgraph::cli
