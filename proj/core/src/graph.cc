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

#include "sumgraph/graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sumgraph {

std::vector<Triple> FilterSubjects(std::span<const Triple> triples,
                                   std::span<const Keyphrase> keyphrases) {
  std::vector<std::vector<std::string>> phrases;
  phrases.reserve(keyphrases.size());
  for (const Keyphrase &k : keyphrases) {
    std::vector<std::string> terms = k.Terms();
    if (!terms.empty()) phrases.push_back(std::move(terms));
  }

  std::vector<Triple> kept;
  for (const Triple &t : triples) {
    std::vector<std::string> subject = Terms(t.subject);
    if (subject.empty()) continue;
    bool match = std::any_of(
        phrases.begin(), phrases.end(), [&](const auto &phrase) {
          return phrase == subject || ContainsRun(subject, phrase) ||
                 ContainsRun(phrase, subject);
        });
    if (match) kept.push_back(t);
  }
  return kept;
}

EntityGraph EntityGraph::Build(std::span<const Triple> triples,
                               const GraphOptions &options) {
  struct Edge {
    std::string from, to;
    size_t sentence;
  };
  std::vector<Edge> edges;
  std::map<std::string, std::vector<std::string>> names;
  EntityGraph graph;
  for (const Triple &t : triples) {
    std::vector<std::string> subject = Terms(t.subject);
    std::vector<std::string> object = Terms(t.object);
    if (subject.empty() || object.empty()) continue;
    std::string from = JoinTerms(subject);
    std::string to = JoinTerms(object);
    if (from == to) {
      ++graph.self_loops_;
      continue;
    }
    names.emplace(from, std::move(subject));
    names.emplace(to, std::move(object));
    edges.push_back({std::move(from), std::move(to), t.sentence_index});
  }

  const size_t n = names.size();
  std::map<std::string_view, size_t> index;
  for (auto &[name, terms] : names) {
    index.emplace(name, graph.nodes_.size());
    graph.nodes_.push_back(name);
    graph.terms_.push_back(terms);
  }
  graph.adjacency_.assign(n * n, 0);
  graph.connectivity_.assign(n, 0);
  std::vector<std::set<size_t>> sentences(n);
  for (const Edge &e : edges) {
    size_t from = index.at(e.from);
    size_t to = index.at(e.to);
    uint32_t &cell = graph.adjacency_[from * n + to];
    if (options.edge_multiplicity || cell == 0) ++cell;
    sentences[from].insert(e.sentence);
    sentences[to].insert(e.sentence);
  }
  graph.retained_ = edges.size();
  for (size_t v = 0; v < n; ++v) {
    const uint32_t *row = graph.adjacency_.data() + v * n;
    graph.connectivity_[v] = std::accumulate(row, row + n, uint64_t{0});
    graph.sentences_.emplace_back(sentences[v].begin(), sentences[v].end());
  }
  return graph;
}

std::optional<size_t> EntityGraph::Find(std::string_view name) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end() || *it != name) return std::nullopt;
  return static_cast<size_t>(it - nodes_.begin());
}

uint64_t EntityGraph::total_connectivity() const {
  return std::accumulate(connectivity_.begin(), connectivity_.end(),
                         uint64_t{0});
}

std::vector<size_t> EntityGraph::TopConnected(size_t k) const {
  std::vector<size_t> order(size());
  std::iota(order.begin(), order.end(), 0);
  auto first_sentence = [this](size_t v) {
    return sentences_[v].empty() ? SIZE_MAX : sentences_[v].front();
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (connectivity_[a] != connectivity_[b]) {
      return connectivity_[a] > connectivity_[b];
    }
    if (first_sentence(a) != first_sentence(b)) {
      return first_sentence(a) < first_sentence(b);
    }
    return nodes_[a] < nodes_[b];
  });
  if (order.size() > k) order.resize(k);
  return order;
}

void WriteEdgeList(std::ostream &out, const EntityGraph &graph) {
  for (size_t from = 0; from < graph.size(); ++from) {
    for (size_t to = 0; to < graph.size(); ++to) {
      if (uint32_t count = graph.edge(from, to)) {
        out << graph.node(from) << '\t' << graph.node(to) << '\t' << count
            << '\n';
      }
    }
  }
}

void WriteNodeList(std::ostream &out, const EntityGraph &graph) {
  for (size_t v = 0; v < graph.size(); ++v) {
    out << graph.node(v) << '\t' << graph.connectivity(v) << '\n';
  }
}

}  // namespace sumgraph
