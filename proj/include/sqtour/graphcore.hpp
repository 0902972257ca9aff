// Copyright 2026 The sqtour Authors.
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

#ifndef SQTOUR_GRAPHCORE_HPP_
#define SQTOUR_GRAPHCORE_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace sqtour {

using NodeId = int;
using EdgeId = int;
using Cost = std::int64_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
};

// One end of an edge. end == 0 sits at Edge::u, end == 1 at Edge::v; a loop
// has both darts at the same node.
struct Dart {
  EdgeId edge = 0;
  int end = 0;

  Dart mate() const { return {edge, 1 - end}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Undirected multigraph with parallel edges and loops. Edge ids are dense and
// assigned in insertion order; darts at a node are kept sorted by (edge, end).
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int node_count);

  EdgeId add_edge(NodeId u, NodeId v);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Dart> darts_at(NodeId v) const { return incidence_[v]; }
  int degree(NodeId v) const { return static_cast<int>(incidence_[v].size()); }

  NodeId node_of(Dart d) const { return d.end == 0 ? edges_[d.edge].u : edges_[d.edge].v; }
  NodeId opposite(Dart d) const { return node_of(d.mate()); }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> incidence_;
};

struct WeightedGraph {
  MultiGraph graph;
  std::vector<Cost> weight;  // indexed by EdgeId, nonnegative

  WeightedGraph() = default;
  WeightedGraph(MultiGraph g, std::vector<Cost> w);
};

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int a, int b);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

bool is_connected(const MultiGraph& g);

// Connectivity of (V, {e : keep[e]}).
bool is_connected(const MultiGraph& g, std::span<const std::uint8_t> keep);

struct MinCut {
  Cost value = 0;
  std::vector<NodeId> side;  // sorted; always contains node 0
};

// Stoer-Wagner. Loops are ignored. Throws InvalidInput on a disconnected graph
// or fewer than two nodes.
MinCut global_min_cut(const WeightedGraph& g);

// Sum of weights of non-loop edges with exactly one end in the side.
Cost cut_weight(const WeightedGraph& g, std::span<const std::uint8_t> in_side);

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n, Cost fill = 0) : n_(n), d_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }
  Cost& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  Cost operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  Cost max_entry() const;

 private:
  int n_ = 0;
  std::vector<Cost> d_;
};

struct ShortestPathTree {
  NodeId source = 0;
  std::vector<Cost> dist;
  std::vector<EdgeId> pred_edge;  // -1 at the source

  // Edges on the tree path from source to target, target end first.
  std::vector<EdgeId> path_to(const MultiGraph& g, NodeId target) const;
};

// Dijkstra; predecessors change only on strict improvement so the tree is
// deterministic. Unreachable nodes keep dist == kUnreachable.
ShortestPathTree shortest_paths(const WeightedGraph& g, NodeId source);

inline constexpr Cost kUnreachable = INT64_MAX / 4;

// All-pairs shortest paths. Throws InvalidInput when disconnected.
DistanceMatrix metric_closure(const WeightedGraph& g);

struct EulerCircuit {
  std::vector<NodeId> nodes;  // closed: nodes.front() == nodes.back()
  std::vector<EdgeId> edges;  // edges[i] joins nodes[i] and nodes[i + 1]
};

// Hierholzer's algorithm, always leaving a node through its lowest unused
// dart. Requires every degree even and all edges in one component with start.
EulerCircuit eulerian_circuit(const MultiGraph& g, NodeId start);

}  // namespace sqtour

#endif  // SQTOUR_GRAPHCORE_HPP_
