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

#include "sqtour/graphcore.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "sqtour/error.hpp"

namespace sqtour {

MultiGraph::MultiGraph(int node_count) : node_count_(node_count), incidence_(node_count) {
  if (node_count < 0) throw InvalidInput("negative node count");
}

EdgeId MultiGraph::add_edge(NodeId u, NodeId v) {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) {
    throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  }
  const EdgeId id = edge_count();
  edges_.push_back({u, v});
  incidence_[u].push_back({id, 0});
  incidence_[v].push_back({id, 1});
  return id;
}

WeightedGraph::WeightedGraph(MultiGraph g, std::vector<Cost> w) : graph(std::move(g)), weight(std::move(w)) {
  if (static_cast<int>(weight.size()) != graph.edge_count()) {
    throw InvalidInput("weight vector does not match edge count");
  }
  for (Cost c : weight) {
    if (c < 0) throw InvalidInput("negative edge weight");
  }
}

DisjointSets::DisjointSets(int n) : parent_(n), size_(n, 1), components_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

bool is_connected(const MultiGraph& g) {
  DisjointSets ds(g.node_count());
  for (const Edge& e : g.edges()) ds.unite(e.u, e.v);
  return g.node_count() <= 1 || ds.components() == 1;
}

bool is_connected(const MultiGraph& g, std::span<const std::uint8_t> keep) {
  DisjointSets ds(g.node_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (keep[e]) ds.unite(g.edge(e).u, g.edge(e).v);
  }
  return g.node_count() <= 1 || ds.components() == 1;
}

MinCut global_min_cut(const WeightedGraph& wg) {
  const MultiGraph& g = wg.graph;
  const int n = g.node_count();
  if (n < 2) throw InvalidInput("min cut needs at least two nodes");
  if (!is_connected(g)) throw InvalidInput("disconnected graph");

  std::vector<Cost> adj(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> Cost& { return adj[static_cast<std::size_t>(i) * n + j]; };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) continue;
    at(ed.u, ed.v) += wg.weight[e];
    at(ed.v, ed.u) += wg.weight[e];
  }

  // members[v] lists the original nodes merged into super-node v.
  std::vector<std::vector<NodeId>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v};
  std::vector<int> alive(n);
  for (int v = 0; v < n; ++v) alive[v] = v;

  MinCut best;
  best.value = kUnreachable;
  std::vector<Cost> key(n);
  std::vector<std::uint8_t> added(n);
  while (alive.size() > 1) {
    std::fill(added.begin(), added.end(), 0);
    for (int v : alive) key[v] = 0;
    int prev = -1;
    int last = -1;
    for (std::size_t step = 0; step < alive.size(); ++step) {
      int pick = -1;
      for (int v : alive) {
        if (!added[v] && (pick < 0 || key[v] > key[pick])) pick = v;
      }
      if (pick < 0) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int v : alive) {
        if (!added[v]) key[v] += at(pick, v);
      }
    }
    if (key[last] < best.value) {
      best.value = key[last];
      best.side = members[last];
    }
    // Merge last into prev.
    for (int v : alive) {
      at(prev, v) += at(last, v);
      at(v, prev) = at(prev, v);
    }
    at(prev, prev) = 0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }

  std::sort(best.side.begin(), best.side.end());
  if (best.side.front() != 0) {
    std::vector<std::uint8_t> in(n, 0);
    for (NodeId v : best.side) in[v] = 1;
    best.side.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (!in[v]) best.side.push_back(v);
    }
  }
  return best;
}

Cost cut_weight(const WeightedGraph& g, std::span<const std::uint8_t> in_side) {
  Cost total = 0;
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const Edge& ed = g.graph.edge(e);
    if (in_side[ed.u] != in_side[ed.v]) total += g.weight[e];
  }
  return total;
}

Cost DistanceMatrix::max_entry() const {
  Cost m = 0;
  for (Cost c : d_) m = std::max(m, c);
  return m;
}

std::vector<EdgeId> ShortestPathTree::path_to(const MultiGraph& g, NodeId target) const {
  std::vector<EdgeId> path;
  NodeId v = target;
  while (v != source) {
    const EdgeId e = pred_edge[v];
    if (e < 0) throw InvalidInput("target unreachable");
    path.push_back(e);
    const Edge& ed = g.edge(e);
    v = ed.u == v ? ed.v : ed.u;
  }
  return path;
}

ShortestPathTree shortest_paths(const WeightedGraph& wg, NodeId source) {
  const MultiGraph& g = wg.graph;
  ShortestPathTree t;
  t.source = source;
  t.dist.assign(g.node_count(), kUnreachable);
  t.pred_edge.assign(g.node_count(), -1);
  using Item = std::pair<Cost, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  t.dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != t.dist[v]) continue;
    for (Dart dart : g.darts_at(v)) {
      const NodeId w = g.opposite(dart);
      const Cost nd = d + wg.weight[dart.edge];
      if (nd < t.dist[w]) {
        t.dist[w] = nd;
        t.pred_edge[w] = dart.edge;
        heap.push({nd, w});
      }
    }
  }
  return t;
}

DistanceMatrix metric_closure(const WeightedGraph& g) {
  const int n = g.graph.node_count();
  DistanceMatrix d(n);
  for (NodeId s = 0; s < n; ++s) {
    const ShortestPathTree t = shortest_paths(g, s);
    for (NodeId v = 0; v < n; ++v) {
      if (t.dist[v] == kUnreachable) throw InvalidInput("disconnected graph");
      d(s, v) = t.dist[v];
    }
  }
  return d;
}

EulerCircuit eulerian_circuit(const MultiGraph& g, NodeId start) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) % 2 != 0) throw InvalidInput("odd degree node " + std::to_string(v));
  }
  std::vector<std::uint8_t> used(g.edge_count(), 0);
  std::vector<std::size_t> next(g.node_count(), 0);
  struct Frame {
    NodeId node;
    EdgeId via;
  };
  std::vector<Frame> stack{{start, -1}};
  EulerCircuit out;
  while (!stack.empty()) {
    const NodeId v = stack.back().node;
    const auto darts = g.darts_at(v);
    while (next[v] < darts.size() && used[darts[next[v]].edge]) ++next[v];
    if (next[v] < darts.size()) {
      const Dart d = darts[next[v]];
      used[d.edge] = 1;
      stack.push_back({g.opposite(d), d.edge});
    } else {
      out.nodes.push_back(v);
      if (stack.back().via >= 0) out.edges.push_back(stack.back().via);
      stack.pop_back();
    }
  }
  if (static_cast<int>(out.edges.size()) != g.edge_count()) {
    throw InvalidInput("edges not connected to the start node");
  }
  std::reverse(out.nodes.begin(), out.nodes.end());
  std::reverse(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace sqtour
