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

#include "sqtour/tjoin.hpp"

#include <algorithm>
#include <string>

#include "sqtour/error.hpp"

namespace sqtour {

std::vector<NodeId> odd_nodes(const MultiGraph& g, std::span<const EdgeId> edges) {
  std::vector<int> parity(g.node_count(), 0);
  for (EdgeId e : edges) {
    parity[g.edge(e).u] ^= 1;
    parity[g.edge(e).v] ^= 1;
  }
  std::vector<NodeId> odd;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (parity[v]) odd.push_back(v);
  }
  return odd;
}

TJoin min_t_join(const WeightedGraph& g, std::span<const NodeId> t, MatchingEngine engine) {
  const int k = static_cast<int>(t.size());
  if (k % 2 != 0) throw InvalidInput("T must have even cardinality");
  if (!is_connected(g.graph)) throw InvalidInput("disconnected graph");
  std::vector<std::uint8_t> in_t(g.graph.node_count(), 0);
  for (NodeId v : t) {
    if (v < 0 || v >= g.graph.node_count()) throw InvalidInput("T node out of range");
    if (in_t[v]++) throw InvalidInput("repeated T node " + std::to_string(v));
  }
  std::vector<ShortestPathTree> trees;
  trees.reserve(k);
  DistanceMatrix d(k);
  for (int i = 0; i < k; ++i) {
    trees.push_back(shortest_paths(g, t[i]));
    for (int j = 0; j < k; ++j) {
      const Cost dist = trees[i].dist[t[j]];
      if (dist == kUnreachable) throw InvalidInput("disconnected graph");
      d(i, j) = dist;
    }
  }
  // Dijkstra distances are symmetric on undirected graphs; enforce it exactly.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) d(j, i) = d(i, j);
  }
  const PerfectMatching pm = min_weight_perfect_matching(d, engine);
  std::vector<int> uses(g.graph.edge_count(), 0);
  for (const auto& [i, j] : pm.pairs) {
    for (EdgeId e : trees[i].path_to(g.graph, t[j])) uses[e] ^= 1;
  }
  TJoin out;
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    if (uses[e]) {
      out.edges.push_back(e);
      out.cost += g.weight[e];
    }
  }
  return out;
}

}  // namespace sqtour
