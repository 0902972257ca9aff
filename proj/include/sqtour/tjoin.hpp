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

#ifndef SQTOUR_TJOIN_HPP_
#define SQTOUR_TJOIN_HPP_

#include <span>
#include <utility>
#include <vector>

#include "sqtour/graphcore.hpp"

namespace sqtour {

enum class MatchingEngine {
  kAuto,      // subset DP up to kSubsetDpCap points, blossom above
  kSubsetDp,  // exact DP over subsets; throws SizeCapExceeded above the cap
  kBlossom,   // Edmonds' weighted blossom algorithm, O(k^3)
};

inline constexpr int kSubsetDpCap = 24;

struct PerfectMatching {
  std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, sorted
  Cost weight = 0;
};

// Exact minimum-weight perfect matching of the points 0..k-1 under the
// symmetric nonnegative matrix d. Throws InvalidInput on odd k.
PerfectMatching min_weight_perfect_matching(const DistanceMatrix& d,
                                            MatchingEngine engine = MatchingEngine::kAuto);

// Maximum-weight matching on a general graph given as (u, v, weight) edges;
// with max_cardinality the matching is maximum among maximum-cardinality
// ones. Returns mate[v] (-1 if unmatched).
struct WeightedEdge {
  int u = 0;
  int v = 0;
  Cost weight = 0;
};
std::vector<int> max_weight_matching(int node_count, std::span<const WeightedEdge> edges, bool max_cardinality);

struct TJoin {
  std::vector<EdgeId> edges;  // sorted, each edge at most once
  Cost cost = 0;
};

// Odd-degree nodes of (V, edges), counting multiplicity.
std::vector<NodeId> odd_nodes(const MultiGraph& g, std::span<const EdgeId> edges);

// Minimum T-join: shortest paths between T-nodes paired by a minimum-weight
// perfect matching, edges used an even number of times dropped. Throws
// InvalidInput on odd |T|, repeated T-nodes, or T-nodes in different
// components.
TJoin min_t_join(const WeightedGraph& g, std::span<const NodeId> t,
                 MatchingEngine engine = MatchingEngine::kAuto);

}  // namespace sqtour

#endif  // SQTOUR_TJOIN_HPP_
