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

#include "sqtour/halfpoint.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sqtour/error.hpp"

namespace sqtour {
namespace {

struct Adjacency {
  std::vector<std::vector<int>> half;  // support edge indices with x2 == 1
  std::vector<std::vector<int>> one;   // support edge indices with x2 == 2
};

Adjacency adjacency(const HalfIntegerPoint& x) {
  Adjacency adj{std::vector<std::vector<int>>(x.n()), std::vector<std::vector<int>>(x.n())};
  for (int i = 0; i < x.edge_count(); ++i) {
    const SupportEdge& e = x.edges()[i];
    auto& list = e.x2 == 1 ? adj.half : adj.one;
    list[e.u].push_back(i);
    list[e.v].push_back(i);
  }
  return adj;
}

NodeId other(const SupportEdge& e, NodeId v) { return e.u == v ? e.v : e.u; }

// Squares of the half-edge graph, or nullopt if the half-edges are not a
// node-disjoint union of 4-cycles.
std::optional<std::vector<PointSquare>> find_squares(const HalfIntegerPoint& x, const Adjacency& adj) {
  for (NodeId v = 0; v < x.n(); ++v) {
    if (!adj.half[v].empty() && adj.half[v].size() != 2) return std::nullopt;
  }
  std::vector<PointSquare> squares;
  std::vector<std::uint8_t> seen(x.n(), 0);
  for (NodeId start = 0; start < x.n(); ++start) {
    if (seen[start] || adj.half[start].empty()) continue;
    // Walk the half-edge cycle through start, toward the smaller neighbour.
    const SupportEdge& e0 = x.edges()[adj.half[start][0]];
    const SupportEdge& e1 = x.edges()[adj.half[start][1]];
    int via = other(e0, start) < other(e1, start) ? adj.half[start][0] : adj.half[start][1];
    std::vector<NodeId> nodes{start};
    std::vector<int> edges;
    NodeId cur = start;
    while (true) {
      edges.push_back(via);
      cur = other(x.edges()[via], cur);
      if (cur == start) break;
      if (nodes.size() >= 4) return std::nullopt;
      nodes.push_back(cur);
      via = adj.half[cur][0] == via ? adj.half[cur][1] : adj.half[cur][0];
    }
    if (nodes.size() != 4) return std::nullopt;
    PointSquare sq;
    for (int i = 0; i < 4; ++i) {
      sq.corners[i] = nodes[i];
      sq.edges[i] = edges[i];
      seen[nodes[i]] = 1;
    }
    squares.push_back(sq);
  }
  return squares;
}

bool half_edges_form_hamiltonian_cycle(const HalfIntegerPoint& x, const Adjacency& adj) {
  DisjointSets ds(x.n());
  for (NodeId v = 0; v < x.n(); ++v) {
    if (adj.half[v].size() != 2) return false;
  }
  for (const SupportEdge& e : x.edges()) {
    if (e.x2 == 1) ds.unite(e.u, e.v);
  }
  return ds.components() == 1;
}

}  // namespace

HalfIntegerPoint::HalfIntegerPoint(int n, std::vector<SupportEdge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidInput("point needs at least one node");
  for (SupportEdge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InvalidInput("node id out of range");
    if (e.u == e.v) throw InvalidInput("loop in support");
    if (e.x2 != 1 && e.x2 != 2) throw InvalidInput("x2 must be 1 or 2");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const SupportEdge& a, const SupportEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw InvalidInput("repeated support edge " + std::to_string(edges_[i].u) + " " + std::to_string(edges_[i].v));
    }
  }
}

std::optional<int> HalfIntegerPoint::find(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(u, v),
                             [](const SupportEdge& e, const std::pair<NodeId, NodeId>& key) {
                               return std::pair(e.u, e.v) < key;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

MultiGraph HalfIntegerPoint::support_graph() const {
  MultiGraph g(n_);
  for (const SupportEdge& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

WeightedGraph HalfIntegerPoint::doubled_weights() const {
  std::vector<Cost> w;
  w.reserve(edges_.size());
  for (const SupportEdge& e : edges_) w.push_back(e.x2);
  return WeightedGraph(support_graph(), std::move(w));
}

WeightedGraph HalfIntegerPoint::weighted_support(std::span<const Cost> cost) const {
  if (static_cast<int>(cost.size()) != edge_count()) throw InvalidInput("cost vector does not match support");
  return WeightedGraph(support_graph(), std::vector<Cost>(cost.begin(), cost.end()));
}

Cost HalfIntegerPoint::cost_x2(std::span<const Cost> cost) const {
  Cost total = 0;
  for (int i = 0; i < edge_count(); ++i) total += cost[i] * edges_[i].x2;
  return total;
}

Instance make_instance(int n, std::vector<InstanceEdge> edges) {
  for (InstanceEdge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.cost < 0) throw InvalidInput("negative cost");
  }
  std::sort(edges.begin(), edges.end(),
            [](const InstanceEdge& a, const InstanceEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  std::vector<SupportEdge> support;
  std::vector<Cost> cost;
  for (const InstanceEdge& e : edges) {
    support.push_back({e.u, e.v, e.x2});
    cost.push_back(e.cost);
  }
  return Instance{HalfIntegerPoint(n, std::move(support)), std::move(cost)};
}

std::string SubtourReport::describe() const {
  std::ostringstream os;
  switch (violation) {
    case Violation::kNone:
      os << "ok";
      break;
    case Violation::kDegree:
      os << "degree violated at node " << node << ": x(delta(v)) = " << degree_x2 << "/2";
      break;
    case Violation::kDisconnected:
    case Violation::kCut:
      os << (violation == Violation::kDisconnected ? "disconnected support" : "cut violated")
         << ": x(delta(S)) = " << cut_x2 << "/2 for S = {";
      for (std::size_t i = 0; i < side.size(); ++i) os << (i ? " " : "") << side[i];
      os << "}";
      break;
  }
  return os.str();
}

SubtourReport validate_subtour(const HalfIntegerPoint& x) {
  SubtourReport r;
  std::vector<Cost> degree(x.n(), 0);
  for (const SupportEdge& e : x.edges()) {
    degree[e.u] += e.x2;
    degree[e.v] += e.x2;
  }
  for (NodeId v = 0; v < x.n(); ++v) {
    if (degree[v] != 4) {
      r.ok = false;
      r.violation = Violation::kDegree;
      r.node = v;
      r.degree_x2 = degree[v];
      return r;
    }
  }
  const WeightedGraph w = x.doubled_weights();
  if (!is_connected(w.graph)) {
    DisjointSets ds(x.n());
    for (const Edge& e : w.graph.edges()) ds.unite(e.u, e.v);
    r.ok = false;
    r.violation = Violation::kDisconnected;
    for (NodeId v = 0; v < x.n(); ++v) {
      if (ds.find(v) == ds.find(0)) r.side.push_back(v);
    }
    r.cut_x2 = 0;
    return r;
  }
  const MinCut cut = global_min_cut(w);
  if (cut.value < 4) {
    r.ok = false;
    r.violation = Violation::kCut;
    r.side = cut.side;
    r.cut_x2 = cut.value;
  }
  return r;
}

const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::kSquare:
      return "SQUARE";
    case PointClass::kBoydCarr:
      return "BOYD-CARR";
    case PointClass::kCarrVempala:
      return "CARR-VEMPALA";
    case PointClass::kOtherHalfInteger:
      return "HALF-INTEGER";
  }
  return "?";
}

PointClass classify(const HalfIntegerPoint& x) {
  if (!validate_subtour(x).ok) throw InvalidInput("not in S^n");
  const Adjacency adj = adjacency(x);
  if (auto squares = find_squares(x, adj)) {
    const bool all_on_squares = static_cast<int>(squares->size()) * 4 == x.n();
    return all_on_squares ? PointClass::kBoydCarr : PointClass::kSquare;
  }
  if (half_edges_form_hamiltonian_cycle(x, adj)) return PointClass::kCarrVempala;
  return PointClass::kOtherHalfInteger;
}

SupportDecomposition decompose(const HalfIntegerPoint& x) {
  if (!is_square_class(classify(x))) throw InvalidInput("not a square point");
  const Adjacency adj = adjacency(x);
  SupportDecomposition d;
  d.squares = *find_squares(x, adj);
  for (int s = 0; s < static_cast<int>(d.squares.size()); ++s) {
    const auto& e = d.squares[s].edges;
    d.pair_partition.push_back({e[0], e[2]});
    d.pair_partition.push_back({e[1], e[3]});
  }

  std::vector<std::uint8_t> used(x.edge_count(), 0);
  auto walk = [&](NodeId start, int first_edge) {
    OnePath p;
    p.nodes.push_back(start);
    NodeId cur = start;
    int via = first_edge;
    while (true) {
      used[via] = 1;
      p.edges.push_back(via);
      cur = other(x.edges()[via], cur);
      p.nodes.push_back(cur);
      if (cur == start) {
        p.closed = true;
        break;
      }
      if (adj.one[cur].size() != 2) break;
      via = adj.one[cur][0] == via ? adj.one[cur][1] : adj.one[cur][0];
    }
    return p;
  };
  std::vector<NodeId> corners;
  for (const PointSquare& sq : d.squares) corners.insert(corners.end(), sq.corners.begin(), sq.corners.end());
  std::sort(corners.begin(), corners.end());
  for (NodeId v : corners) {
    if (adj.one[v].size() != 1) throw InvariantViolation("square corner without exactly one 1-edge");
    if (!used[adj.one[v][0]]) d.one_paths.push_back(walk(v, adj.one[v][0]));
  }
  if (d.squares.empty() && !adj.one[0].empty()) {
    d.one_paths.push_back(walk(0, std::min(adj.one[0][0], adj.one[0][1])));
  }
  for (int i = 0; i < x.edge_count(); ++i) {
    if (x.edges()[i].x2 == 2 && !used[i]) throw InvariantViolation("1-edge outside every 1-path");
  }
  return d;
}

std::vector<int> ContractedPoint::expand(EdgeId e) const {
  if (e < static_cast<EdgeId>(decomposition.one_paths.size())) return decomposition.one_paths[e].edges;
  return {support_edge[e]};
}

ContractedPoint contract_one_paths(const HalfIntegerPoint& x, std::span<const Cost> cost) {
  if (static_cast<int>(cost.size()) != x.edge_count()) throw InvalidInput("cost vector does not match support");
  SupportDecomposition d = decompose(x);
  if (d.squares.empty()) throw InvalidInput("integral point; tour is the 1-edge cycle");

  const int t = static_cast<int>(d.squares.size());
  std::vector<NodeId> contracted_of(x.n(), -1);
  std::vector<NodeId> original(4 * t);
  for (int s = 0; s < t; ++s) {
    for (int i = 0; i < 4; ++i) {
      contracted_of[d.squares[s].corners[i]] = 4 * s + i;
      original[4 * s + i] = d.squares[s].corners[i];
    }
  }
  MultiGraph g(4 * t);
  std::vector<Cost> c;
  std::vector<int> support_edge;
  std::vector<EdgeId> matching;
  for (const OnePath& p : d.one_paths) {
    Cost sum = 0;
    for (int e : p.edges) sum += cost[e];
    matching.push_back(g.add_edge(contracted_of[p.nodes.front()], contracted_of[p.nodes.back()]));
    c.push_back(sum);
    support_edge.push_back(-1);
  }
  std::vector<SquareCycle> squares(t);
  for (int s = 0; s < t; ++s) {
    for (int i = 0; i < 4; ++i) {
      squares[s].corners[i] = 4 * s + i;
      squares[s].edges[i] = g.add_edge(4 * s + i, 4 * s + (i + 1) % 4);
      c.push_back(cost[d.squares[s].edges[i]]);
      support_edge.push_back(d.squares[s].edges[i]);
    }
  }
  return ContractedPoint{SquareGraph(std::move(g), std::move(matching), std::move(squares)), std::move(c),
                         std::move(original), std::move(support_edge), std::move(d)};
}

}  // namespace sqtour
