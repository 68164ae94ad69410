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

#include <benchmark/benchmark.h>

#include "sumgraph/harness.h"
#include "sumgraph/keywords.h"
#include "sumgraph/rouge.h"
#include "sumgraph/summarizer.h"
#include "sumgraph/text.h"

namespace sumgraph {
namespace {

struct Fixture {
  std::string text;
  std::string reference;
  Document doc;
  std::vector<CorpusEntry> entries;
};

const Fixture &Data() {
  static const Fixture fixture = [] {
    Fixture f;
    f.entries = LoadCorpus(SUMGRAPH_BENCH_CORPUS).entries;
    f.text = ReadFile(f.entries.at(0).document_path);
    f.reference = ReadFile(f.entries.at(0).reference_path);
    f.doc = Preprocess(f.text, Lexicons::Default());
    return f;
  }();
  return fixture;
}

void BM_Preprocess(benchmark::State &state) {
  const Fixture &f = Data();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Preprocess(f.text, Lexicons::Default()));
  }
  state.SetBytesProcessed(state.iterations() * f.text.size());
}
BENCHMARK(BM_Preprocess);

void BM_Keywords(benchmark::State &state) {
  const Fixture &f = Data();
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnalyzeKeywords(f.doc, Lexicons::Default()));
  }
}
BENCHMARK(BM_Keywords);

void BM_Summarize(benchmark::State &state) {
  const Fixture &f = Data();
  SummaryConfig config;
  config.variant = static_cast<Variant>(state.range(0));
  Summarizer summarizer(Lexicons::Default(), config);
  for (auto _ : state) benchmark::DoNotOptimize(summarizer.Summarize(f.doc));
  state.SetLabel(std::string(VariantName(config.variant)));
}
BENCHMARK(BM_Summarize)->DenseRange(0, 2);

void BM_Rouge1(benchmark::State &state) {
  const Fixture &f = Data();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Rouge1(f.text, f.reference, Lexicons::Default().stopwords));
  }
}
BENCHMARK(BM_Rouge1);

void BM_Sweep(benchmark::State &state) {
  const Fixture &f = Data();
  SweepOptions options;
  options.jobs = static_cast<size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        RunSweep(f.entries, Lexicons::Default(), options));
  }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace sumgraph

BENCHMARK_MAIN();
