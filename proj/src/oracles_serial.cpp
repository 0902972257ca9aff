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

#include <limits>

#include "oracle_common.hpp"
#include "sqtour/oracles.hpp"

namespace sqtour {
namespace {

template <typename T>
Cost held_karp_numeric(const DistanceMatrix& d) {
  const int m = d.size() - 1;
  const std::uint32_t count = std::uint32_t{1} << m;
  std::vector<T> dp(static_cast<std::size_t>(count) * m, detail::kHkInf<T>);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    for (int j = 0; j < m; ++j) {
      if ((mask >> j) & 1) dp[static_cast<std::size_t>(mask) * m + j] = detail::hk_cell(dp, d, m, mask, j);
    }
  }
  return detail::hk_close(dp, d, m);
}

}  // namespace

Cost held_karp_serial(const DistanceMatrix& d) {
  detail::check_distance_matrix(d);
  if (d.size() <= 2) return detail::hk_trivial(d);
  return detail::fits_u32(d) ? held_karp_numeric<std::uint32_t>(d) : held_karp_numeric<Cost>(d);
}

Cost brute_ham_serial(const SquareGraph& sg, std::span<const Cost> cost) {
  detail::check_ham_input(sg, cost);
  Cost best = std::numeric_limits<Cost>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sg.square_count()); ++mask) {
    if (auto c = detail::ham_choice_cost(sg, cost, mask); c && *c < best) best = *c;
  }
  if (best == std::numeric_limits<Cost>::max()) throw InvariantViolation("no Hamiltonian cycle containing M");
  return best;
}

MinCut brute_min_cut_serial(const WeightedGraph& g) {
  detail::check_cut_input(g);
  const int n = g.graph.node_count();
  const std::uint32_t count = (std::uint32_t{1} << (n - 1)) - 1;
  Cost best = std::numeric_limits<Cost>::max();
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const Cost c = detail::cut_of_mask(g, mask);
    if (c < best) {
      best = c;
      best_mask = mask;
    }
  }
  return detail::cut_from_mask(best, best_mask, n);
}

}  // namespace sqtour
