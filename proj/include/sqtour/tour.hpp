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

#ifndef SQTOUR_TOUR_HPP_
#define SQTOUR_TOUR_HPP_

#include <span>
#include <vector>

#include "sqtour/graphcore.hpp"
#include "sqtour/halfpoint.hpp"
#include "sqtour/tjoin.hpp"
#include "sqtour/treesel.hpp"

namespace sqtour {

// Hamiltonian cycle of the support graph.
struct SupportCycle {
  std::vector<int> edges;     // support edge indices, sorted
  std::vector<NodeId> order;  // cyclic node order starting at node 0
  Cost cost = 0;
};

// Cheapest Hamiltonian cycle of the support containing every 1-edge: the
// 1-paths are contracted, HAM runs on the square graph, and M-edges expand
// back into their paths. An integral point yields its own cycle.
SupportCycle hamiltonian_with_ones(const HalfIntegerPoint& x, std::span<const Cost> cost);

// 6 * (2/3 x - 1/6 chi^H) on each support edge, i.e. 2 * x2 - [e in H].
// Throws InvalidInput if the cycle uses an edge outside the support or is not
// a Hamiltonian cycle.
std::vector<int> compute_y(const HalfIntegerPoint& x, std::span<const NodeId> cycle_order);

enum class ChosenTour { kHamiltonian, kJoin };

struct TourReport {
  SupportCycle h;
  RainbowOneTree f_star;
  TJoin t_join;                   // minimum T-join for the odd nodes of f_star
  std::vector<int> j_star;        // multiplicity (0..2) per support edge
  Cost c_h = 0;
  Cost c_j = 0;
  Cost c_x2 = 0;                  // 2 * c·x
  Cost c_y6 = 0;                  // 6 * c·y
  bool bound_holds = false;       // 14 * min(c_h, c_j) <= 10 * c_x2
  bool y_bound_holds = false;     // 6 * c(t_join) <= c_y6
  ChosenTour chosen = ChosenTour::kHamiltonian;
  std::vector<NodeId> final_cycle;  // Hamiltonian cycle of K_n after shortcutting
  Cost final_cost = 0;              // priced by the metric closure of the support

  Cost chosen_cost() const { return chosen == ChosenTour::kHamiltonian ? c_h : c_j; }
};

struct TourOptions {
  MatchingEngine engine = MatchingEngine::kAuto;
  bool throw_on_violation = true;  // throw InvariantViolation("theorem violated")
};

// H from hamiltonian_with_ones, F* = rainbow 1-tree, J* = F* plus a minimum
// T-join of F*'s odd nodes; the cheaper of H and J* (H on ties) is shortcut
// along its canonical Eulerian circuit from node 0.
TourReport run_tour(const HalfIntegerPoint& x, std::span<const Cost> cost, const TourOptions& options = {});

// Visit order of first occurrences along the circuit.
std::vector<NodeId> shortcut(const EulerCircuit& circuit);

Cost cycle_cost(const DistanceMatrix& d, std::span<const NodeId> order);

}  // namespace sqtour

#endif  // SQTOUR_TOUR_HPP_
