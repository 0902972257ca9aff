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

#include "sqtour/deltamatroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "sqtour/error.hpp"

namespace sqtour {
namespace {

[[noreturn]] void not_square_graph(const std::string& why) {
  throw InvalidInput("not a square graph: " + why);
}

bool joins(const Edge& e, NodeId a, NodeId b) {
  return (e.u == a && e.v == b) || (e.u == b && e.v == a);
}

}  // namespace

SquareGraph::SquareGraph(MultiGraph g, std::vector<EdgeId> matching, std::vector<SquareCycle> squares)
    : graph_(std::move(g)), matching_(std::move(matching)), squares_(std::move(squares)) {
  const int n = graph_.node_count();
  const int m = graph_.edge_count();
  for (NodeId v = 0; v < n; ++v) {
    if (graph_.degree(v) != 3) not_square_graph("node " + std::to_string(v) + " is not cubic");
  }
  square_of_.assign(m, -2);
  std::vector<int> covered(n, 0);
  for (EdgeId e : matching_) {
    if (e < 0 || e >= m || square_of_[e] != -2) not_square_graph("bad matching edge");
    const Edge& ed = graph_.edge(e);
    if (ed.u == ed.v) not_square_graph("loop in matching");
    square_of_[e] = -1;
    ++covered[ed.u];
    ++covered[ed.v];
  }
  for (NodeId v = 0; v < n; ++v) {
    if (covered[v] != 1) not_square_graph("matching is not perfect at node " + std::to_string(v));
  }
  for (int s = 0; s < square_count(); ++s) {
    const SquareCycle& sq = squares_[s];
    std::array<NodeId, 4> sorted = sq.corners;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      not_square_graph("square " + std::to_string(s) + " repeats a corner");
    }
    for (int i = 0; i < 4; ++i) {
      const EdgeId e = sq.edges[i];
      if (e < 0 || e >= m || square_of_[e] != -2) not_square_graph("bad square edge");
      if (!joins(graph_.edge(e), sq.corners[i], sq.corners[(i + 1) % 4])) {
        not_square_graph("square " + std::to_string(s) + " edge does not follow its corners");
      }
      square_of_[e] = s;
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (square_of_[e] == -2) not_square_graph("edge " + std::to_string(e) + " in no square");
  }
  if (!is_connected(graph_)) not_square_graph("disconnected");
  reference_.resize(squares_.size());
  for (int s = 0; s < square_count(); ++s) {
    reference_[s] = *std::min_element(squares_[s].edges.begin(), squares_[s].edges.end());
  }
}

int SquareGraph::reference_matching(int square) const {
  const auto& edges = squares_[square].edges;
  const EdgeId r = reference_[square];
  return (edges[0] == r || edges[2] == r) ? 0 : 1;
}

bool connected_under(const SquareGraph& sg, std::span<const int> state) {
  const MultiGraph& g = sg.graph();
  DisjointSets ds(g.node_count());
  for (EdgeId e : sg.matching()) ds.unite(g.edge(e).u, g.edge(e).v);
  for (int s = 0; s < sg.square_count(); ++s) {
    const SquareCycle& sq = sg.squares()[s];
    for (int i = 0; i < 4; ++i) {
      if (state[s] < 0 || i % 2 == state[s]) {
        const Edge& ed = g.edge(sq.edges[i]);
        ds.unite(ed.u, ed.v);
      }
    }
  }
  return ds.components() <= 1;
}

std::vector<NodeId> cycle_order(const MultiGraph& g, std::span<const EdgeId> edges) {
  const int n = g.node_count();
  std::vector<std::vector<EdgeId>> at(n);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) throw InvalidInput("edge id out of range");
    at[g.edge(e).u].push_back(e);
    at[g.edge(e).v].push_back(e);
  }
  for (NodeId v = 0; v < n; ++v) {
    if (at[v].size() != 2) throw InvalidInput("node " + std::to_string(v) + " does not have degree 2");
    std::sort(at[v].begin(), at[v].end());
    if (at[v][0] == at[v][1] && n > 1) throw InvalidInput("loop in cycle");
  }
  if (n == 0) return {};
  std::vector<NodeId> order{0};
  EdgeId via = at[0][0];
  NodeId cur = 0;
  for (int step = 1; step < n; ++step) {
    const Edge& ed = g.edge(via);
    cur = ed.u == cur ? ed.v : ed.u;
    if (cur == 0) throw InvalidInput("edge set is not a single cycle");
    order.push_back(cur);
    via = at[cur][0] == via ? at[cur][1] : at[cur][0];
  }
  const Edge& last = g.edge(via);
  if ((last.u == cur ? last.v : last.u) != 0) throw InvalidInput("edge set is not a single cycle");
  return order;
}

HamiltonianCycle assemble_cycle(const SquareGraph& sg, std::span<const int> choice, std::span<const Cost> cost) {
  HamiltonianCycle h;
  h.choice.assign(choice.begin(), choice.end());
  h.edges.assign(sg.matching().begin(), sg.matching().end());
  for (int s = 0; s < sg.square_count(); ++s) {
    if (choice[s] != 0 && choice[s] != 1) throw InvariantViolation("incomplete square choice");
    for (EdgeId e : sg.perfect_matching(s, choice[s])) h.edges.push_back(e);
  }
  std::sort(h.edges.begin(), h.edges.end());
  for (EdgeId e : h.edges) h.cost += cost[e];
  try {
    h.order = cycle_order(sg.graph(), h.edges);
  } catch (const InvalidInput& err) {
    throw InvariantViolation(std::string("settled squares do not form a Hamiltonian cycle: ") + err.what());
  }
  return h;
}

std::optional<SquareChoice> SquareDeltaMatroid::extend(std::span<const int> forced_in,
                                                       std::span<const int> forced_out) const {
  SquareChoice state(sg_.square_count(), -1);
  for (int r : forced_in) state[r] = sg_.reference_matching(r);
  for (int r : forced_out) {
    const int avoid = 1 - sg_.reference_matching(r);
    if (state[r] >= 0 && state[r] != avoid) return std::nullopt;
    state[r] = avoid;
  }
  if (!connected_under(sg_, state)) return std::nullopt;
  for (int s = 0; s < sg_.square_count(); ++s) {
    if (state[s] >= 0) continue;
    state[s] = 0;
    if (connected_under(sg_, state)) continue;
    state[s] = 1;
    if (!connected_under(sg_, state)) {
      throw InvariantViolation("square " + std::to_string(s) + " disconnects under both matchings");
    }
  }
  return state;
}

bool SquareDeltaMatroid::extendable(std::span<const int> forced_in, std::span<const int> forced_out) const {
  return extend(forced_in, forced_out).has_value();
}

std::vector<int> SquareDeltaMatroid::member_of(std::span<const int> choice) const {
  std::vector<int> member;
  for (int s = 0; s < sg_.square_count(); ++s) {
    if (choice[s] == sg_.reference_matching(s)) member.push_back(s);
  }
  return member;
}

SquareChoice SquareDeltaMatroid::choice_of(std::span<const int> member) const {
  SquareChoice choice(sg_.square_count());
  for (int s = 0; s < sg_.square_count(); ++s) choice[s] = 1 - sg_.reference_matching(s);
  for (int s : member) choice[s] = sg_.reference_matching(s);
  return choice;
}

ExplicitDeltaMatroid::ExplicitDeltaMatroid(int ground_size, std::vector<std::uint64_t> family)
    : ground_size_(ground_size), family_(std::move(family)) {
  if (ground_size < 0 || ground_size > 64) throw InvalidInput("explicit family supports at most 64 elements");
  std::sort(family_.begin(), family_.end());
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
}

bool ExplicitDeltaMatroid::extendable(std::span<const int> forced_in, std::span<const int> forced_out) const {
  std::uint64_t in = 0;
  std::uint64_t out = 0;
  for (int i : forced_in) in |= std::uint64_t{1} << i;
  for (int i : forced_out) out |= std::uint64_t{1} << i;
  return std::any_of(family_.begin(), family_.end(),
                     [&](std::uint64_t d) { return (d & in) == in && (d & out) == 0; });
}

bool satisfies_symmetric_exchange(std::span<const std::uint64_t> family) {
  std::vector<std::uint64_t> sorted(family.begin(), family.end());
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](std::uint64_t d) { return std::binary_search(sorted.begin(), sorted.end(), d); };
  for (std::uint64_t d1 : sorted) {
    for (std::uint64_t d2 : sorted) {
      const std::uint64_t diff = d1 ^ d2;
      for (std::uint64_t js = diff; js != 0; js &= js - 1) {
        const std::uint64_t j = js & (~js + 1);
        bool found = false;
        for (std::uint64_t ks = diff; ks != 0 && !found; ks &= ks - 1) {
          const std::uint64_t k = ks & (~ks + 1);
          found = member(d1 ^ (j | k));
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<int> greedy(const DeltaMatroidOracle& oracle, std::span<const Cost> cost) {
  const int size = oracle.ground_size();
  if (static_cast<int>(cost.size()) != size) throw InvalidInput("cost vector does not match ground set");
  if (!oracle.extendable({}, {})) throw InvalidInput("empty delta-matroid");
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::abs(cost[a]) > std::abs(cost[b]); });
  std::vector<int> in;
  std::vector<int> out;
  for (int i : order) {
    if (cost[i] <= 0) {
      in.push_back(i);
      if (!oracle.extendable(in, out)) {
        in.pop_back();
        out.push_back(i);
      }
    } else {
      out.push_back(i);
      if (!oracle.extendable(in, out)) {
        out.pop_back();
        in.push_back(i);
      }
    }
  }
  std::sort(in.begin(), in.end());
  return in;
}

std::vector<Cost> reference_costs(const SquareGraph& sg, std::span<const Cost> edge_cost) {
  std::vector<Cost> out(sg.square_count());
  for (int s = 0; s < sg.square_count(); ++s) {
    const int ref = sg.reference_matching(s);
    const auto with = sg.perfect_matching(s, ref);
    const auto without = sg.perfect_matching(s, 1 - ref);
    out[s] = edge_cost[with[0]] + edge_cost[with[1]] - edge_cost[without[0]] - edge_cost[without[1]];
  }
  return out;
}

HamiltonianCycle ham_min_cost(const SquareGraph& sg, std::span<const Cost> cost) {
  if (static_cast<int>(cost.size()) != sg.graph().edge_count()) {
    throw InvalidInput("cost vector does not match edge count");
  }
  const int t = sg.square_count();
  std::vector<Cost> matching_cost(2 * t);
  for (int s = 0; s < t; ++s) {
    for (int which = 0; which < 2; ++which) {
      const auto pm = sg.perfect_matching(s, which);
      matching_cost[2 * s + which] = cost[pm[0]] + cost[pm[1]];
    }
  }
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(matching_cost[2 * a] - matching_cost[2 * a + 1]) >
           std::abs(matching_cost[2 * b] - matching_cost[2 * b + 1]);
  });

  SquareChoice state(t, -1);
  for (int s : order) {
    const int cheap = matching_cost[2 * s + 1] < matching_cost[2 * s] ? 1 : 0;
    state[s] = cheap;
    if (connected_under(sg, state)) continue;
    state[s] = 1 - cheap;
    if (!connected_under(sg, state)) {
      throw InvariantViolation("square " + std::to_string(s) + " disconnects under both matchings");
    }
  }
  return assemble_cycle(sg, state, cost);
}

bool verify_ham(const SquareGraph& sg, std::span<const EdgeId> edges) {
  const MultiGraph& g = sg.graph();
  std::vector<int> count(g.edge_count(), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count() || count[e]++ > 0) return false;
  }
  for (EdgeId e : sg.matching()) {
    if (!count[e]) return false;
  }
  for (int s = 0; s < sg.square_count(); ++s) {
    const auto& sq = sg.squares()[s].edges;
    const bool m0 = count[sq[0]] && count[sq[2]] && !count[sq[1]] && !count[sq[3]];
    const bool m1 = count[sq[1]] && count[sq[3]] && !count[sq[0]] && !count[sq[2]];
    if (!m0 && !m1) return false;
  }
  try {
    cycle_order(g, edges);
  } catch (const InvalidInput&) {
    return false;
  }
  return true;
}

}  // namespace sqtour
