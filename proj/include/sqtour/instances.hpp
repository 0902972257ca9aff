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

#ifndef SQTOUR_INSTANCES_HPP_
#define SQTOUR_INSTANCES_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/graphcore.hpp"
#include "sqtour/halfpoint.hpp"
#include "sqtour/kotzig.hpp"

namespace sqtour {

// Where a donut node sits. Corners are numbered 0 = inner side towards the
// previous square, 1 = outer towards previous, 2 = inner towards next,
// 3 = outer towards next. Path nodes lie on the inner (0) or outer (1) path
// leaving square `square` towards square + 1, at distance `position` >= 1.
struct DonutNode {
  int square = 0;
  int corner = -1;  // -1 for path nodes
  int path = -1;    // -1 for corners
  int position = 0;
};

struct DonutInstance {
  int k = 0;
  Instance instance;
  std::vector<DonutNode> layout;  // indexed by node

  const HalfIntegerPoint& point() const { return instance.point; }
  const std::vector<Cost>& cost() const { return instance.cost; }
};

// Throws InvalidInput for k < 2.
DonutInstance make_donut(int k);

// Connected 4-regular multigraph on n nodes from a uniform pairing of 4n darts;
// disconnected samples are redrawn. Throws InvalidInput("generation failed")
// after 10^4 attempts.
MultiGraph random_four_regular(int n, std::uint64_t seed);

// Square graph from a random 4-regular multigraph with random corner
// assignment. Loops of the multigraph become chords or parallel edges of a
// square.
SquareGraph random_square_graph(int num_squares, std::uint64_t seed);

// Square point: random 4-regular multigraph, squares at the nodes, M-edges
// subdivided into 1-paths of length uniform in [1, max_path_len]. Samples that
// fail subtour validation are redrawn.
HalfIntegerPoint random_square_point(int num_squares, int max_path_len, std::uint64_t seed);

// Uniform integer costs in [0, max_cost].
std::vector<Cost> random_costs(int count, Cost max_cost, std::uint64_t seed);

BitransitionSystem random_bitransition_system(int n, std::uint64_t seed);

// The point with 1/2 on the Hamiltonian cycle h and 1 on the remaining
// perfect matching. Throws InvalidInput unless g is simple, cubic and
// 3-edge-connected and h is a Hamiltonian cycle of g.
HalfIntegerPoint everywhere_instance(const MultiGraph& g, std::span<const EdgeId> h);

struct CubicWithCycle {
  MultiGraph graph;
  std::vector<EdgeId> cycle;
};

CubicWithCycle complete_graph_k4();
CubicWithCycle prism_graph();
CubicWithCycle bipartite_k33();

// c(uv) = f(u) + f(v) on every pair of distinct nodes.
DistanceMatrix node_weight_costs(std::span<const Cost> f);

// Line-oriented text formats; '#' starts a comment.
//   POINT <n> / E <u> <v> <x2> <cost> ... / END
//   BTS <n> / E <id> <u> <v> ... / F <v> <e.end> x4 ... / END
Instance parse_point(std::istream& in);
void write_point(std::ostream& out, const Instance& inst);
BitransitionSystem parse_bts(std::istream& in);
void write_bts(std::ostream& out, const BitransitionSystem& sys);

}  // namespace sqtour

#endif  // SQTOUR_INSTANCES_HPP_
