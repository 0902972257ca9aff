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

#ifndef SQTOUR_KOTZIG_HPP_
#define SQTOUR_KOTZIG_HPP_

#include <array>
#include <span>
#include <vector>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/graphcore.hpp"

namespace sqtour {

// Forbidden pairing {(darts[0], darts[1]), (darts[2], darts[3])} at a node.
struct Bitransition {
  std::array<Dart, 4> darts{};
};

// Connected 4-regular multigraph with one forbidden bitransition per node.
struct BitransitionSystem {
  MultiGraph graph;
  std::vector<Bitransition> forbidden;  // indexed by node
};

// Throws InvalidInput unless every node has four darts, the forbidden pairing
// at each node is a permutation of them, and the graph is connected.
void check_system(const BitransitionSystem& sys);

// Closed trail as darts: for the i-th traversed edge, darts[2i] is where it is
// left from and darts[2i + 1] where it arrives; darts[2i + 1] and
// darts[2i + 2] (cyclically) sit at the same node.
struct Trail {
  std::vector<Dart> darts;
};

// Square graph obtained by replacing each node v with a 4-cycle whose corners
// hold v's darts, forbidden pairs on the diagonals: corner 0 <- darts[0],
// corner 1 <- darts[2], corner 2 <- darts[1], corner 3 <- darts[3]. The
// original edges become M with the same ids.
struct BlownUp {
  SquareGraph square_graph;
  std::vector<NodeId> corner_node;  // square-graph node -> original node
  std::vector<Dart> corner_dart;    // square-graph node -> original dart
};

// Corner assignment per node, given as the darts held by corners 0..3.
BlownUp blow_up(const MultiGraph& g, std::span<const std::array<Dart, 4>> corner_darts);
BlownUp blow_up(const BitransitionSystem& sys);

// Reads a Hamiltonian cycle of the blown-up graph back as a trail, starting
// with edge 0 traversed from its end 0.
Trail trail_from_cycle(const BitransitionSystem& sys, const BlownUp& b, const HamiltonianCycle& h);

// Eulerian trail avoiding every forbidden bitransition; always exists for a
// valid system. Throws InvalidInput for invalid systems.
Trail find_trail(const BitransitionSystem& sys);

bool verify_trail(const BitransitionSystem& sys, const Trail& t);

}  // namespace sqtour

#endif  // SQTOUR_KOTZIG_HPP_
