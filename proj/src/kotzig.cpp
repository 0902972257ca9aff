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

#include "sqtour/kotzig.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sqtour/error.hpp"

namespace sqtour {
namespace {

using DartPair = std::pair<Dart, Dart>;

DartPair ordered(Dart a, Dart b) { return a < b ? DartPair{a, b} : DartPair{b, a}; }

std::array<DartPair, 2> normalize(DartPair p, DartPair q) {
  std::array<DartPair, 2> out{ordered(p.first, p.second), ordered(q.first, q.second)};
  if (out[1] < out[0]) std::swap(out[0], out[1]);
  return out;
}

bool is_permutation_of_darts(const MultiGraph& g, NodeId v, std::array<Dart, 4> darts) {
  const auto at = g.darts_at(v);
  if (at.size() != 4) return false;
  std::sort(darts.begin(), darts.end());
  return std::equal(darts.begin(), darts.end(), at.begin());
}

}  // namespace

void check_system(const BitransitionSystem& sys) {
  const MultiGraph& g = sys.graph;
  if (g.node_count() == 0) throw InvalidInput("empty bitransition system");
  if (static_cast<int>(sys.forbidden.size()) != g.node_count()) {
    throw InvalidInput("one forbidden bitransition per node required");
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) != 4) throw InvalidInput("node " + std::to_string(v) + " is not of degree 4");
    if (!is_permutation_of_darts(g, v, sys.forbidden[v].darts)) {
      throw InvalidInput("forbidden bitransition at node " + std::to_string(v) + " does not pair its darts");
    }
  }
  if (!is_connected(g)) throw InvalidInput("bitransition system is disconnected");
}

BlownUp blow_up(const MultiGraph& g, std::span<const std::array<Dart, 4>> corner_darts) {
  const int n = g.node_count();
  if (static_cast<int>(corner_darts.size()) != n) throw InvalidInput("one corner assignment per node required");
  std::vector<std::array<NodeId, 2>> corner_of(g.edge_count(), {-1, -1});
  std::vector<NodeId> corner_node(4 * n);
  std::vector<Dart> corner_dart(4 * n);
  for (NodeId v = 0; v < n; ++v) {
    if (!is_permutation_of_darts(g, v, corner_darts[v])) {
      throw InvalidInput("corner assignment at node " + std::to_string(v) + " is not a permutation of its darts");
    }
    for (int i = 0; i < 4; ++i) {
      const Dart d = corner_darts[v][i];
      corner_of[d.edge][d.end] = 4 * v + i;
      corner_node[4 * v + i] = v;
      corner_dart[4 * v + i] = d;
    }
  }
  MultiGraph big(4 * n);
  std::vector<EdgeId> matching;
  for (EdgeId e = 0; e < g.edge_count(); ++e) matching.push_back(big.add_edge(corner_of[e][0], corner_of[e][1]));
  std::vector<SquareCycle> squares(n);
  for (NodeId v = 0; v < n; ++v) {
    for (int i = 0; i < 4; ++i) {
      squares[v].corners[i] = 4 * v + i;
      squares[v].edges[i] = big.add_edge(4 * v + i, 4 * v + (i + 1) % 4);
    }
  }
  return BlownUp{SquareGraph(std::move(big), std::move(matching), std::move(squares)), std::move(corner_node),
                 std::move(corner_dart)};
}

BlownUp blow_up(const BitransitionSystem& sys) {
  std::vector<std::array<Dart, 4>> corners(sys.graph.node_count());
  for (NodeId v = 0; v < sys.graph.node_count(); ++v) {
    const auto& f = sys.forbidden[v].darts;
    corners[v] = {f[0], f[2], f[1], f[3]};
  }
  return blow_up(sys.graph, corners);
}

Trail trail_from_cycle(const BitransitionSystem& sys, const BlownUp& b, const HamiltonianCycle& h) {
  const SquareGraph& sg = b.square_graph;
  const MultiGraph& big = sg.graph();
  // The single non-M cycle edge at each corner.
  std::vector<EdgeId> transition(big.node_count(), -1);
  for (EdgeId e : h.edges) {
    if (sg.in_matching(e)) continue;
    transition[big.edge(e).u] = e;
    transition[big.edge(e).v] = e;
  }
  Trail t;
  const int m = sys.graph.edge_count();
  Dart leave{0, 0};
  for (int step = 0; step < m; ++step) {
    t.darts.push_back(leave);
    t.darts.push_back(leave.mate());
    const EdgeId matching_edge = leave.edge;
    const NodeId arrive = leave.mate().end == 0 ? big.edge(matching_edge).u : big.edge(matching_edge).v;
    const EdgeId via = transition[arrive];
    if (via < 0) throw InvariantViolation("corner without a transition edge");
    const NodeId next_corner = big.edge(via).u == arrive ? big.edge(via).v : big.edge(via).u;
    leave = b.corner_dart[next_corner];
  }
  if (leave != Dart{0, 0}) throw InvariantViolation("cycle did not close into a single trail");
  return t;
}

Trail find_trail(const BitransitionSystem& sys) {
  check_system(sys);
  const BlownUp b = blow_up(sys);
  const std::vector<Cost> unit(b.square_graph.graph().edge_count(), 1);
  const HamiltonianCycle h = ham_min_cost(b.square_graph, unit);
  return trail_from_cycle(sys, b, h);
}

bool verify_trail(const BitransitionSystem& sys, const Trail& t) {
  const MultiGraph& g = sys.graph;
  const int m = g.edge_count();
  if (static_cast<int>(t.darts.size()) != 2 * m || m == 0) return false;
  if (static_cast<int>(sys.forbidden.size()) != g.node_count()) return false;
  std::vector<std::uint8_t> seen(m, 0);
  for (int i = 0; i < m; ++i) {
    const Dart a = t.darts[2 * i];
    const Dart b = t.darts[2 * i + 1];
    if (a.edge < 0 || a.edge >= m || (a.end != 0 && a.end != 1)) return false;
    if (b != a.mate() || seen[a.edge]) return false;
    seen[a.edge] = 1;
  }
  std::vector<std::vector<DartPair>> used(g.node_count());
  for (int i = 0; i < m; ++i) {
    const Dart in = t.darts[2 * i + 1];
    const Dart out = t.darts[(2 * i + 2) % (2 * m)];
    const NodeId v = g.node_of(in);
    if (g.node_of(out) != v) return false;
    used[v].push_back({in, out});
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (used[v].size() != 2) return false;
    const auto& f = sys.forbidden[v].darts;
    if (normalize(used[v][0], used[v][1]) == normalize({f[0], f[1]}, {f[2], f[3]})) return false;
  }
  return true;
}

}  // namespace sqtour
