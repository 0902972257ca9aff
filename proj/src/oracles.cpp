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

#include "sqtour/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <utility>

#include "oracle_common.hpp"
#include "sqtour/error.hpp"
#include "sqtour/treesel.hpp"

namespace sqtour {
namespace {

template <typename T>
Cost held_karp_layers(const DistanceMatrix& d) {
  const int m = d.size() - 1;
  const std::uint32_t count = std::uint32_t{1} << m;
  std::vector<T> dp(static_cast<std::size_t>(count) * m, detail::kHkInf<T>);

  // Subsets sorted by size; every subset depends only on smaller ones.
  std::vector<std::size_t> start(m + 2, 0);
  for (std::uint32_t mask = 0; mask < count; ++mask) ++start[std::popcount(mask) + 1];
  for (int i = 1; i <= m + 1; ++i) start[i] += start[i - 1];
  std::vector<std::uint32_t> order(count);
  {
    std::vector<std::size_t> next(start.begin(), start.end() - 1);
    for (std::uint32_t mask = 0; mask < count; ++mask) order[next[std::popcount(mask)]++] = mask;
  }

  for (int layer = 1; layer <= m; ++layer) {
    const auto lo = static_cast<long long>(start[layer]);
    const auto hi = static_cast<long long>(start[layer + 1]);
#pragma omp parallel for schedule(static)
    for (long long idx = lo; idx < hi; ++idx) {
      const std::uint32_t mask = order[idx];
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        dp[static_cast<std::size_t>(mask) * m + j] = detail::hk_cell(dp, d, m, mask, j);
      }
    }
  }
  return detail::hk_close(dp, d, m);
}

}  // namespace

Cost held_karp(const DistanceMatrix& d) {
  detail::check_distance_matrix(d);
  if (d.size() <= 2) return detail::hk_trivial(d);
  return detail::fits_u32(d) ? held_karp_layers<std::uint32_t>(d) : held_karp_layers<Cost>(d);
}

Cost brute_ham(const SquareGraph& sg, std::span<const Cost> cost) {
  detail::check_ham_input(sg, cost);
  const long long count = 1LL << sg.square_count();
  Cost best = std::numeric_limits<Cost>::max();
#pragma omp parallel for reduction(min : best) schedule(dynamic, 64)
  for (long long mask = 0; mask < count; ++mask) {
    if (auto c = detail::ham_choice_cost(sg, cost, static_cast<std::uint64_t>(mask))) best = std::min(best, *c);
  }
  if (best == std::numeric_limits<Cost>::max()) throw InvariantViolation("no Hamiltonian cycle containing M");
  return best;
}

MinCut brute_min_cut(const WeightedGraph& g) {
  detail::check_cut_input(g);
  const int n = g.graph.node_count();
  const long long count = (1LL << (n - 1)) - 1;  // the all-ones mask would be S = V
  std::pair<Cost, long long> best{std::numeric_limits<Cost>::max(), 0};
#pragma omp parallel
  {
    std::pair<Cost, long long> local = best;
#pragma omp for schedule(static) nowait
    for (long long mask = 0; mask < count; ++mask) {
      local = std::min(local, {detail::cut_of_mask(g, static_cast<std::uint32_t>(mask)), mask});
    }
#pragma omp critical
    best = std::min(best, local);
  }
  return detail::cut_from_mask(best.first, static_cast<std::uint32_t>(best.second), n);
}

MinCut brute_cuts(const HalfIntegerPoint& x) {
  const MultiGraph g = x.support_graph();
  std::vector<Cost> w;
  for (const SupportEdge& e : x.edges()) w.push_back(e.x2);
  return brute_min_cut(WeightedGraph(g, std::move(w)));
}

std::vector<std::uint64_t> square_family(const SquareGraph& sg) {
  if (sg.square_count() > kBruteHamCap) detail::cap_error("square_family", sg.square_count(), kBruteHamCap);
  const SquareDeltaMatroid dm(sg);
  std::vector<std::uint64_t> family;
  std::vector<int> state(sg.square_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sg.square_count()); ++mask) {
    for (int s = 0; s < sg.square_count(); ++s) state[s] = static_cast<int>((mask >> s) & 1);
    if (!connected_under(sg, state)) continue;
    std::uint64_t member = 0;
    for (int s : dm.member_of(state)) member |= std::uint64_t{1} << s;
    family.push_back(member);
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

TJoin brute_t_join(const WeightedGraph& g, std::span<const NodeId> t) {
  const int n = g.graph.node_count();
  const int m = g.graph.edge_count();
  if (m > kBruteTJoinCap) detail::cap_error("brute_t_join", m, kBruteTJoinCap);
  if (n > 64) detail::cap_error("brute_t_join nodes", n, 64);
  std::uint64_t target = 0;
  for (NodeId v : t) {
    if (v < 0 || v >= n) throw InvalidInput("T node out of range");
    if ((target >> v) & 1) throw InvalidInput("repeated T node");
    target |= std::uint64_t{1} << v;
  }
  std::vector<std::uint64_t> flip(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.graph.edge(e);
    flip[e] = (std::uint64_t{1} << ed.u) ^ (std::uint64_t{1} << ed.v);
  }
  std::pair<Cost, std::uint32_t> best{std::numeric_limits<Cost>::max(), 0};
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::uint64_t odd = 0;
    Cost c = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int e = std::countr_zero(rest);
      odd ^= flip[e];
      c += g.weight[e];
    }
    if (odd == target) best = std::min(best, {c, mask});
  }
  if (best.first == std::numeric_limits<Cost>::max()) throw InvalidInput("no T-join exists");
  TJoin out{{}, best.first};
  for (EdgeId e = 0; e < m; ++e) {
    if ((best.second >> e) & 1) out.edges.push_back(e);
  }
  return out;
}

Cost brute_rainbow(const HalfIntegerPoint& x, std::span<const Cost> cost) {
  const SupportDecomposition d = decompose(x);
  const int s = static_cast<int>(d.squares.size());
  if (s > kBruteRainbowCap) detail::cap_error("brute_rainbow", s, kBruteRainbowCap);
  const MultiGraph g = x.support_graph();
  std::vector<int> ones;
  for (int e = 0; e < x.edge_count(); ++e) {
    if (x.edges()[e].x2 == 2) ones.push_back(e);
  }
  Cost best = std::numeric_limits<Cost>::max();
  std::vector<int> edges;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (2 * s)); ++mask) {
    edges = ones;
    for (int cls = 0; cls < 2 * s; ++cls) edges.push_back(d.pair_partition[cls][(mask >> cls) & 1]);
    if (!is_one_tree(g, edges, 0)) continue;
    Cost c = 0;
    for (int e : edges) c += cost[e];
    best = std::min(best, c);
  }
  if (best == std::numeric_limits<Cost>::max()) throw InvariantViolation("no rainbow 1-tree");
  return best;
}

}  // namespace sqtour
