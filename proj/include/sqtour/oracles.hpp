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

#ifndef SQTOUR_ORACLES_HPP_
#define SQTOUR_ORACLES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/graphcore.hpp"
#include "sqtour/halfpoint.hpp"
#include "sqtour/tjoin.hpp"

namespace sqtour {

// Exhaustive reference solvers. Each throws SizeCapExceeded above its cap.

inline constexpr int kHeldKarpCap = 24;
inline constexpr int kBruteHamCap = 20;
inline constexpr int kBruteTJoinCap = 18;
inline constexpr int kBruteRainbowCap = 6;
inline constexpr int kBruteCutCap = 24;

// Minimum Hamiltonian cycle cost on the complete graph with costs d (the
// 2-node cycle counts both directions). Bitmask dynamic programming with the
// subsets of each size processed in parallel.
Cost held_karp(const DistanceMatrix& d);
// Same recurrence, one thread, subsets in numeric order.
Cost held_karp_serial(const DistanceMatrix& d);

// Minimum cost of a Hamiltonian cycle containing M, over all 2^s matching
// choices.
Cost brute_ham(const SquareGraph& sg, std::span<const Cost> cost);
Cost brute_ham_serial(const SquareGraph& sg, std::span<const Cost> cost);

// The family { H ∩ R } of SquareDeltaMatroid as bitmasks over squares, sorted.
std::vector<std::uint64_t> square_family(const SquareGraph& sg);

// Minimum T-join by enumerating edge subsets; the lowest subset wins ties.
// Throws InvalidInput if no T-join exists.
TJoin brute_t_join(const WeightedGraph& g, std::span<const NodeId> t);

// Minimum rainbow 1-tree by trying one edge from every square matching.
Cost brute_rainbow(const HalfIntegerPoint& x, std::span<const Cost> cost);

// Minimum cut over all node sets containing node 0; ties go to the smallest
// set bitmask.
MinCut brute_min_cut(const WeightedGraph& g);
MinCut brute_min_cut_serial(const WeightedGraph& g);

// brute_min_cut on the support weighted by 2x.
MinCut brute_cuts(const HalfIntegerPoint& x);

}  // namespace sqtour

#endif  // SQTOUR_ORACLES_HPP_
