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

#ifndef SQTOUR_SRC_ORACLE_COMMON_HPP_
#define SQTOUR_SRC_ORACLE_COMMON_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/error.hpp"
#include "sqtour/graphcore.hpp"
#include "sqtour/oracles.hpp"

namespace sqtour::detail {

inline void cap_error(const char* what, int size, int cap) {
  throw SizeCapExceeded(std::string(what) + ": size " + std::to_string(size) + " exceeds cap " +
                        std::to_string(cap));
}

inline void check_distance_matrix(const DistanceMatrix& d) {
  const int n = d.size();
  if (n < 1) throw InvalidInput("empty distance matrix");
  if (n > kHeldKarpCap) throw SizeCapExceeded("instance too large for exact oracle");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d(i, j) < 0) throw InvalidInput("negative distance");
    }
  }
}

// Entries fit 32 bits when no path through all nodes can overflow.
inline bool fits_u32(const DistanceMatrix& d) {
  return d.max_entry() < (Cost{1} << 31) / (d.size() + 1);
}

template <typename T>
inline constexpr T kHkInf = std::numeric_limits<T>::max();

// dp[mask * m + j]: cheapest path from node 0 through the others in mask,
// ending at j (other node j is original node j + 1).
template <typename T>
T hk_cell(const std::vector<T>& dp, const DistanceMatrix& d, int m, std::uint32_t mask, int j) {
  const std::uint32_t prev = mask & ~(std::uint32_t{1} << j);
  if (prev == 0) return static_cast<T>(d(0, j + 1));
  T best = kHkInf<T>;
  for (std::uint32_t rest = prev; rest; rest &= rest - 1) {
    const int i = __builtin_ctz(rest);
    const T via = dp[static_cast<std::size_t>(prev) * m + i];
    if (via == kHkInf<T>) continue;
    const T cand = via + static_cast<T>(d(i + 1, j + 1));
    if (cand < best) best = cand;
  }
  return best;
}

template <typename T>
Cost hk_close(const std::vector<T>& dp, const DistanceMatrix& d, int m) {
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  Cost best = std::numeric_limits<Cost>::max();
  for (int j = 0; j < m; ++j) {
    const T v = dp[static_cast<std::size_t>(full) * m + j];
    if (v == kHkInf<T>) continue;
    best = std::min(best, static_cast<Cost>(v) + d(j + 1, 0));
  }
  return best;
}

inline Cost hk_trivial(const DistanceMatrix& d) { return d.size() == 1 ? 0 : d(0, 1) + d(1, 0); }

inline void check_ham_input(const SquareGraph& sg, std::span<const Cost> cost) {
  if (sg.square_count() > kBruteHamCap) cap_error("brute_ham", sg.square_count(), kBruteHamCap);
  if (static_cast<int>(cost.size()) != sg.graph().edge_count()) throw InvalidInput("cost vector does not match graph");
}

// Cost of the cycle for the choice encoded by mask (bit s = matching of
// square s), or nullopt if that choice is disconnected.
inline std::optional<Cost> ham_choice_cost(const SquareGraph& sg, std::span<const Cost> cost, std::uint64_t mask) {
  std::vector<int> state(sg.square_count());
  for (int s = 0; s < sg.square_count(); ++s) state[s] = static_cast<int>((mask >> s) & 1);
  if (!connected_under(sg, state)) return std::nullopt;
  Cost total = 0;
  for (EdgeId e : sg.matching()) total += cost[e];
  for (int s = 0; s < sg.square_count(); ++s) {
    for (EdgeId e : sg.perfect_matching(s, state[s])) total += cost[e];
  }
  return total;
}

inline void check_cut_input(const WeightedGraph& g) {
  const int n = g.graph.node_count();
  if (n < 2) throw InvalidInput("min cut needs at least two nodes");
  if (n > kBruteCutCap) cap_error("brute_min_cut", n, kBruteCutCap);
}

// Weight of delta(S) where S = {0} plus the nodes 1..n-1 selected by mask.
inline Cost cut_of_mask(const WeightedGraph& g, std::uint32_t mask) {
  Cost total = 0;
  const std::uint64_t side = (std::uint64_t{mask} << 1) | 1;
  for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
    const Edge& ed = g.graph.edge(e);
    if (((side >> ed.u) & 1) != ((side >> ed.v) & 1)) total += g.weight[e];
  }
  return total;
}

inline MinCut cut_from_mask(Cost value, std::uint32_t mask, int n) {
  MinCut out{value, {0}};
  for (int v = 1; v < n; ++v) {
    if ((mask >> (v - 1)) & 1) out.side.push_back(v);
  }
  return out;
}

}  // namespace sqtour::detail

#endif  // SQTOUR_SRC_ORACLE_COMMON_HPP_
