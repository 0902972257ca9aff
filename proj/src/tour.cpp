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

#include "sqtour/tour.hpp"

#include <algorithm>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/error.hpp"

namespace sqtour {

SupportCycle hamiltonian_with_ones(const HalfIntegerPoint& x, std::span<const Cost> cost) {
  const SupportDecomposition d = decompose(x);
  SupportCycle out;
  if (d.squares.empty()) {
    out.edges = d.one_paths.at(0).edges;
  } else {
    const ContractedPoint cp = contract_one_paths(x, cost);
    const HamiltonianCycle h = ham_min_cost(cp.square_graph, cp.cost);
    for (EdgeId e : h.edges) {
      for (int s : cp.expand(e)) out.edges.push_back(s);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  for (int e : out.edges) out.cost += cost[e];
  out.order = cycle_order(x.support_graph(), out.edges);
  return out;
}

std::vector<int> compute_y(const HalfIntegerPoint& x, std::span<const NodeId> cycle_order) {
  const int n = x.n();
  if (static_cast<int>(cycle_order.size()) != n) throw InvalidInput("cycle must visit every node once");
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<int> in_h(x.edge_count(), 0);
  for (int i = 0; i < n; ++i) {
    const NodeId a = cycle_order[i];
    const NodeId b = cycle_order[(i + 1) % n];
    if (a < 0 || a >= n || seen[a]++) throw InvalidInput("cycle must visit every node once");
    const auto e = x.find(a, b);
    if (!e) throw InvalidInput("cycle leaves the support");
    in_h[*e] = 1;
  }
  std::vector<int> y6(x.edge_count());
  for (int e = 0; e < x.edge_count(); ++e) y6[e] = 2 * x.edges()[e].x2 - in_h[e];
  return y6;
}

std::vector<NodeId> shortcut(const EulerCircuit& circuit) {
  std::vector<NodeId> order;
  NodeId max_node = 0;
  for (NodeId v : circuit.nodes) max_node = std::max(max_node, v);
  std::vector<std::uint8_t> seen(max_node + 1, 0);
  for (NodeId v : circuit.nodes) {
    if (!seen[v]++) order.push_back(v);
  }
  return order;
}

Cost cycle_cost(const DistanceMatrix& d, std::span<const NodeId> order) {
  Cost total = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n && n > 1; ++i) total += d(order[i], order[(i + 1) % n]);
  return total;
}

TourReport run_tour(const HalfIntegerPoint& x, std::span<const Cost> cost, const TourOptions& options) {
  if (static_cast<int>(cost.size()) != x.edge_count()) throw InvalidInput("cost vector does not match support");
  for (Cost c : cost) {
    if (c < 0) throw InvalidInput("negative cost");
  }
  if (!is_square_class(classify(x))) throw InvalidInput("not a square point");

  TourReport r;
  r.c_x2 = x.cost_x2(cost);
  r.h = hamiltonian_with_ones(x, cost);
  r.c_h = r.h.cost;

  r.f_star = rainbow_one_tree(x, cost);
  const WeightedGraph support = x.weighted_support(cost);
  const std::vector<NodeId> odd = odd_nodes(support.graph, r.f_star.edges);
  r.t_join = min_t_join(support, odd, options.engine);

  r.j_star.assign(x.edge_count(), 0);
  for (int e : r.f_star.edges) ++r.j_star[e];
  for (int e : r.t_join.edges) ++r.j_star[e];
  r.c_j = r.f_star.cost + r.t_join.cost;

  const std::vector<int> y6 = compute_y(x, r.h.order);
  for (int e = 0; e < x.edge_count(); ++e) r.c_y6 += cost[e] * y6[e];
  r.y_bound_holds = 6 * r.t_join.cost <= r.c_y6;
  r.bound_holds = 14 * std::min(r.c_h, r.c_j) <= 10 * r.c_x2;
  if (options.throw_on_violation && (!r.bound_holds || !r.y_bound_holds)) {
    throw InvariantViolation("theorem violated");
  }

  r.chosen = r.c_h <= r.c_j ? ChosenTour::kHamiltonian : ChosenTour::kJoin;
  MultiGraph tour(x.n());
  if (r.chosen == ChosenTour::kHamiltonian) {
    for (int e : r.h.edges) tour.add_edge(x.edges()[e].u, x.edges()[e].v);
  } else {
    for (int e = 0; e < x.edge_count(); ++e) {
      for (int copy = 0; copy < r.j_star[e]; ++copy) tour.add_edge(x.edges()[e].u, x.edges()[e].v);
    }
  }
  r.final_cycle = shortcut(eulerian_circuit(tour, 0));
  if (static_cast<int>(r.final_cycle.size()) != x.n()) throw InvariantViolation("chosen tour is not spanning");
  r.final_cost = cycle_cost(metric_closure(support), r.final_cycle);
  return r;
}

}  // namespace sqtour
