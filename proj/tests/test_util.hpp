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

#ifndef SQTOUR_TESTS_TEST_UTIL_HPP_
#define SQTOUR_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/graphcore.hpp"
#include "sqtour/halfpoint.hpp"
#include "sqtour/instances.hpp"

namespace sqtour::testing {

// Square 0-1-2-3 with diagonal 1-paths 0-4-2 and 1-5-3.
inline HalfIntegerPoint single_square_point() {
  return HalfIntegerPoint(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 4, 2}, {4, 2, 2}, {1, 5, 2}, {5, 3, 2}});
}

// Square 0-1-2-3 with 1-paths between adjacent corners: 0-4-1 and 2-5-3.
inline HalfIntegerPoint adjacent_paths_point() {
  return HalfIntegerPoint(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}, {0, 4, 2}, {4, 1, 2}, {2, 5, 2}, {5, 3, 2}});
}

inline HalfIntegerPoint integral_cycle(int n) {
  std::vector<SupportEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 2});
  return HalfIntegerPoint(n, std::move(edges));
}

// Square 0-1-2-3 with both diagonals as M.
inline SquareGraph k4_square_graph() {
  MultiGraph g(4);
  const EdgeId m0 = g.add_edge(0, 2);
  const EdgeId m1 = g.add_edge(1, 3);
  SquareCycle sq;
  for (int i = 0; i < 4; ++i) {
    sq.corners[i] = i;
    sq.edges[i] = g.add_edge(i, (i + 1) % 4);
  }
  return SquareGraph(std::move(g), {m0, m1}, {sq});
}

inline DistanceMatrix floyd_warshall(const WeightedGraph& wg) {
  const int n = wg.graph.node_count();
  DistanceMatrix d(n, kUnreachable);
  for (int v = 0; v < n; ++v) d(v, v) = 0;
  for (EdgeId e = 0; e < wg.graph.edge_count(); ++e) {
    const Edge& ed = wg.graph.edge(e);
    d(ed.u, ed.v) = std::min(d(ed.u, ed.v), wg.weight[e]);
    d(ed.v, ed.u) = std::min(d(ed.v, ed.u), wg.weight[e]);
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    }
  }
  return d;
}

// Minimum over all permutations fixing node 0.
inline Cost brute_tsp(const DistanceMatrix& d) {
  const int n = d.size();
  if (n == 1) return 0;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  Cost best = kUnreachable;
  do {
    Cost c = d(0, perm.front()) + d(perm.back(), 0);
    for (int i = 0; i + 1 < n - 1; ++i) c += d(perm[i], perm[i + 1]);
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Minimum over all perfect matchings by recursion on the lowest point.
inline Cost brute_matching(const DistanceMatrix& d, std::uint32_t left) {
  if (left == 0) return 0;
  const int i = __builtin_ctz(left);
  Cost best = kUnreachable;
  for (std::uint32_t rest = left & (left - 1); rest; rest &= rest - 1) {
    const int j = __builtin_ctz(rest);
    best = std::min(best, d(i, j) + brute_matching(d, left & ~(1u << i) & ~(1u << j)));
  }
  return best;
}

inline DistanceMatrix random_symmetric(int n, Cost max_d, std::mt19937_64& rng) {
  std::uniform_int_distribution<Cost> dist(0, max_d);
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = dist(rng);
  }
  return d;
}

// Connected multigraph: random spanning tree plus extra edges (loops allowed).
inline WeightedGraph random_connected(int n, int extra, Cost max_w, std::mt19937_64& rng) {
  MultiGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> node(0, n - 1);
  for (int i = 0; i < extra; ++i) g.add_edge(node(rng), node(rng));
  std::uniform_int_distribution<Cost> w(0, max_w);
  std::vector<Cost> weight(g.edge_count());
  for (Cost& c : weight) c = w(rng);
  return WeightedGraph(std::move(g), std::move(weight));
}

}  // namespace sqtour::testing

#endif  // SQTOUR_TESTS_TEST_UTIL_HPP_
