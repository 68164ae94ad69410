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

#ifndef SUMGRAPH_GRAPH_H_
#define SUMGRAPH_GRAPH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumgraph/keywords.h"
#include "sumgraph/triples.h"

namespace sumgraph {

// Keeps the triples whose subject terms equal a keyphrase's terms, contain
// them as a contiguous run, or are contained in them.
std::vector<Triple> FilterSubjects(std::span<const Triple> triples,
                                   std::span<const Keyphrase> keyphrases);

struct GraphOptions {
  // Repeated subject->object pairs add weight. When false every edge
  // counts once.
  bool edge_multiplicity = true;
};

// Directed subject->object graph over normalized entity strings.
//
// Nodes are sorted by name, so the graph does not depend on the order of
// the input triples. Self-loops (subject equal to object after
// normalization) are not retained. With edge multiplicity on, the
// connectivity of all nodes sums to retained_triples().
class EntityGraph {
 public:
  EntityGraph() = default;

  static EntityGraph Build(std::span<const Triple> triples,
                           const GraphOptions &options = {});

  size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  const std::vector<std::string> &nodes() const { return nodes_; }
  const std::string &node(size_t v) const { return nodes_[v]; }
  const std::vector<std::string> &terms(size_t v) const { return terms_[v]; }
  std::optional<size_t> Find(std::string_view name) const;

  // Edge weight from `from` to `to`.
  uint32_t edge(size_t from, size_t to) const {
    return adjacency_[from * nodes_.size() + to];
  }
  // Out-degree counting weight: the row sum of the adjacency matrix.
  uint64_t connectivity(size_t v) const { return connectivity_[v]; }
  uint64_t total_connectivity() const;

  // Sorted indices of sentences whose retained triples mention the node.
  const std::vector<size_t> &node_sentences(size_t v) const {
    return sentences_[v];
  }

  size_t retained_triples() const { return retained_; }
  size_t self_loops() const { return self_loops_; }

  // Up to k nodes by connectivity, highest first. Ties go to the node
  // seen in the earliest sentence, then to the smaller name.
  std::vector<size_t> TopConnected(size_t k) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<std::vector<std::string>> terms_;
  std::vector<uint32_t> adjacency_;  // row-major, size() x size()
  std::vector<uint64_t> connectivity_;
  std::vector<std::vector<size_t>> sentences_;
  size_t retained_ = 0;
  size_t self_loops_ = 0;
};

// "source<TAB>target<TAB>count" per non-zero edge, row-major node order.
void WriteEdgeList(std::ostream &out, const EntityGraph &graph);

// "node<TAB>connectivity" per node.
void WriteNodeList(std::ostream &out, const EntityGraph &graph);

}  // namespace sumgraph

#endif  // SUMGRAPH_GRAPH_H_
