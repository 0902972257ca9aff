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

#ifndef SQTOUR_DELTAMATROID_HPP_
#define SQTOUR_DELTAMATROID_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sqtour/graphcore.hpp"

namespace sqtour {

// A 4-cycle of non-matching edges. edges[i] joins corners[i] and
// corners[(i + 1) % 4]; the two perfect matchings of the square are
// {edges[0], edges[2]} (matching 0) and {edges[1], edges[3]} (matching 1).
struct SquareCycle {
  std::array<NodeId, 4> corners{};
  std::array<EdgeId, 4> edges{};
};

// Cubic multigraph with a perfect matching M whose complement is a disjoint
// union of 4-cycles. The constructor checks every invariant and throws
// InvalidInput("not a square graph: ...") otherwise. A connected square graph
// is automatically 2-edge-connected: a bridge would be an M-edge leaving a
// side with an odd number of matched nodes.
class SquareGraph {
 public:
  SquareGraph(MultiGraph g, std::vector<EdgeId> matching, std::vector<SquareCycle> squares);

  const MultiGraph& graph() const { return graph_; }
  std::span<const EdgeId> matching() const { return matching_; }
  std::span<const SquareCycle> squares() const { return squares_; }
  int square_count() const { return static_cast<int>(squares_.size()); }

  bool in_matching(EdgeId e) const { return square_of_[e] < 0; }
  // Square containing a non-matching edge, -1 for M-edges.
  int square_of(EdgeId e) const { return square_of_[e]; }

  std::array<EdgeId, 2> perfect_matching(int square, int which) const {
    return {squares_[square].edges[which], squares_[square].edges[which + 2]};
  }

  // The reference set R holds the lowest-id edge of each square.
  EdgeId reference_edge(int square) const { return reference_[square]; }
  // Which perfect matching (0 or 1) of the square contains its reference edge.
  int reference_matching(int square) const;

 private:
  MultiGraph graph_;
  std::vector<EdgeId> matching_;
  std::vector<SquareCycle> squares_;
  std::vector<int> square_of_;
  std::vector<EdgeId> reference_;
};

// Per-square state while squares are settled: -1 keeps both matchings,
// 0 or 1 keeps only that matching.
using SquareChoice = std::vector<int>;

// Connectivity of M plus the edges allowed by `state`.
bool connected_under(const SquareGraph& sg, std::span<const int> state);

struct HamiltonianCycle {
  std::vector<EdgeId> edges;  // sorted edge ids
  std::vector<NodeId> order;  // cyclic node order, starting at node 0
  Cost cost = 0;
  SquareChoice choice;        // kept perfect matching per square
};

// Builds the cycle for a complete choice (no -1 entries). Throws
// InvariantViolation if the result is not a single cycle.
HamiltonianCycle assemble_cycle(const SquareGraph& sg, std::span<const int> choice,
                                std::span<const Cost> cost);

// Cyclic node order of a 2-regular connected edge set, starting at node 0 and
// leaving it through the lowest-id edge. Throws InvalidInput otherwise.
std::vector<NodeId> cycle_order(const MultiGraph& g, std::span<const EdgeId> edges);

class DeltaMatroidOracle {
 public:
  virtual ~DeltaMatroidOracle() = default;
  virtual int ground_size() const = 0;
  // Is there a feasible set containing forced_in and missing forced_out?
  virtual bool extendable(std::span<const int> forced_in, std::span<const int> forced_out) const = 0;
};

// D = { H ∩ R : H a Hamiltonian cycle containing M }. Element i stands for
// the reference edge of square i.
class SquareDeltaMatroid final : public DeltaMatroidOracle {
 public:
  explicit SquareDeltaMatroid(const SquareGraph& sg) : sg_(sg) {}

  int ground_size() const override { return sg_.square_count(); }
  bool extendable(std::span<const int> forced_in, std::span<const int> forced_out) const override;

  // Forces the matching through each reference edge in forced_in and the one
  // avoiding it for forced_out, then settles the other squares in index order
  // keeping the graph connected. Returns the completed choice, or nullopt.
  std::optional<SquareChoice> extend(std::span<const int> forced_in,
                                     std::span<const int> forced_out) const;

  // Delta-matroid member corresponding to a complete choice.
  std::vector<int> member_of(std::span<const int> choice) const;
  SquareChoice choice_of(std::span<const int> member) const;

 private:
  const SquareGraph& sg_;
};

// Family given as bitmasks over at most 64 elements; for tests and small
// experiments.
class ExplicitDeltaMatroid final : public DeltaMatroidOracle {
 public:
  ExplicitDeltaMatroid(int ground_size, std::vector<std::uint64_t> family);

  int ground_size() const override { return ground_size_; }
  bool extendable(std::span<const int> forced_in, std::span<const int> forced_out) const override;
  std::span<const std::uint64_t> family() const { return family_; }

 private:
  int ground_size_;
  std::vector<std::uint64_t> family_;
};

// Symmetric exchange: for D1, D2 in F and j in D1 Δ D2 there is k in D1 Δ D2
// (k == j allowed) with D1 Δ {j, k} in F. Exhaustive.
bool satisfies_symmetric_exchange(std::span<const std::uint64_t> family);

// Minimum-cost member of a delta-matroid given by its extendability oracle.
// Elements are scanned by non-increasing |cost|, ties by ascending id.
// Returns the member sorted ascending; throws InvalidInput on an empty family.
std::vector<int> greedy(const DeltaMatroidOracle& oracle, std::span<const Cost> cost);

// Per-square greedy weights for the square delta-matroid: cost of the
// matching through the reference edge minus cost of the other matching.
std::vector<Cost> reference_costs(const SquareGraph& sg, std::span<const Cost> edge_cost);

// Minimum-cost Hamiltonian cycle containing M. Squares are processed by
// non-increasing |difference of matching costs| (ties: lower square index);
// each keeps the cheaper matching unless that disconnects the graph, in which
// case it keeps the other one. Equal costs keep matching 0.
HamiltonianCycle ham_min_cost(const SquareGraph& sg, std::span<const Cost> cost);

// True iff `edges` contains M, uses exactly one perfect matching per square
// and forms a single cycle through every node.
bool verify_ham(const SquareGraph& sg, std::span<const EdgeId> edges);

}  // namespace sqtour

#endif  // SQTOUR_DELTAMATROID_HPP_
