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

#include "sqtour/halfpoint.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "sqtour/error.hpp"
#include "sqtour/instances.hpp"
#include "sqtour/oracles.hpp"
#include "test_util.hpp"

namespace sqtour {
namespace {

TEST(HalfIntegerPointTest, RejectsMalformedInput) {
  EXPECT_THROW(HalfIntegerPoint(0, {}), InvalidInput);
  EXPECT_THROW(HalfIntegerPoint(2, {{0, 0, 2}}), InvalidInput);
  EXPECT_THROW(HalfIntegerPoint(2, {{0, 1, 3}}), InvalidInput);
  EXPECT_THROW(HalfIntegerPoint(2, {{0, 1, 1}, {1, 0, 1}}), InvalidInput);
  EXPECT_THROW(HalfIntegerPoint(2, {{0, 2, 1}}), InvalidInput);
}

TEST(HalfIntegerPointTest, NormalizesEdgeOrder) {
  const HalfIntegerPoint x(3, {{2, 1, 2}, {1, 0, 2}, {0, 2, 2}});
  ASSERT_EQ(x.edge_count(), 3);
  EXPECT_EQ(x.edges()[0].u, 0);
  EXPECT_EQ(x.edges()[0].v, 1);
  EXPECT_TRUE(x.find(2, 0).has_value());
  EXPECT_FALSE(HalfIntegerPoint(3, {{0, 1, 2}}).find(1, 2).has_value());
}

TEST(ValidateTest, IntegralCycle) {
  const HalfIntegerPoint x = testing::integral_cycle(5);
  EXPECT_TRUE(validate_subtour(x).ok);
  EXPECT_EQ(classify(x), PointClass::kSquare);
}

TEST(ValidateTest, DonutIsInSubtourPolytope) {
  const DonutInstance d = make_donut(2);
  EXPECT_TRUE(validate_subtour(d.point()).ok);
  EXPECT_EQ(brute_cuts(d.point()).value, 4);
}

TEST(ValidateTest, AdjacentPathsViolateCut) {
  const SubtourReport r = validate_subtour(testing::adjacent_paths_point());
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violation, Violation::kCut);
  EXPECT_EQ(r.cut_x2, 2);
  EXPECT_EQ(r.side, (std::vector<NodeId>{0, 1, 4}));
  EXPECT_THROW(classify(testing::adjacent_paths_point()), InvalidInput);
}

TEST(ValidateTest, DegreeAndConnectivityWitnesses) {
  const SubtourReport deg = validate_subtour(HalfIntegerPoint(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 1}}));
  EXPECT_EQ(deg.violation, Violation::kDegree);
  EXPECT_EQ(deg.node, 0);
  EXPECT_EQ(deg.degree_x2, 3);

  std::vector<SupportEdge> two_triangles;
  for (int base : {0, 3}) {
    for (int i = 0; i < 3; ++i) two_triangles.push_back({base + i, base + (i + 1) % 3, 2});
  }
  const SubtourReport disc = validate_subtour(HalfIntegerPoint(6, two_triangles));
  EXPECT_EQ(disc.violation, Violation::kDisconnected);
  EXPECT_EQ(disc.side, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(disc.cut_x2, 0);
}

// Degree-feasible points from a random pairing of four half-units per node.
std::optional<HalfIntegerPoint> random_degree_feasible(int n, std::mt19937_64& rng) {
  std::vector<int> units(4 * n);
  for (int i = 0; i < 4 * n; ++i) units[i] = i / 4;
  std::shuffle(units.begin(), units.end(), rng);
  std::map<std::pair<int, int>, int> x2;
  for (int i = 0; i < 4 * n; i += 2) {
    const int u = std::min(units[i], units[i + 1]);
    const int v = std::max(units[i], units[i + 1]);
    if (u == v) return std::nullopt;
    if (++x2[{u, v}] > 2) return std::nullopt;
  }
  std::vector<SupportEdge> edges;
  for (auto [key, val] : x2) edges.push_back({key.first, key.second, val});
  return HalfIntegerPoint(n, edges);
}

TEST(ValidateTest, AgreesWithCutEnumeration) {
  std::mt19937_64 rng(2024);
  int valid = 0;
  int invalid = 0;
  for (int trial = 0; trial < 3000 && valid + invalid < 400; ++trial) {
    const int n = 3 + trial % 10;
    const auto x = random_degree_feasible(n, rng);
    if (!x) continue;
    const bool brute_ok = brute_cuts(*x).value >= 4;
    const SubtourReport r = validate_subtour(*x);
    ASSERT_EQ(r.ok, brute_ok);
    if (!r.ok) {
      std::vector<std::uint8_t> side(n, 0);
      for (NodeId v : r.side) side[v] = 1;
      std::vector<Cost> w;
      for (const SupportEdge& e : x->edges()) w.push_back(e.x2);
      EXPECT_EQ(cut_weight(WeightedGraph(x->support_graph(), w), side), r.cut_x2);
      EXPECT_LT(r.cut_x2, 4);
    }
    (r.ok ? valid : invalid)++;
  }
  EXPECT_GT(valid, 20);
  EXPECT_GT(invalid, 20);
}

TEST(ClassifyTest, NamedClasses) {
  EXPECT_EQ(classify(make_donut(2).point()), PointClass::kSquare);
  EXPECT_EQ(classify(testing::single_square_point()), PointClass::kSquare);

  std::vector<SupportEdge> cv;
  for (int i = 0; i < 12; ++i) cv.push_back({i, (i + 1) % 12, 1});
  for (int i = 0; i < 6; ++i) cv.push_back({i, i + 6, 2});
  const HalfIntegerPoint carr_vempala(12, cv);
  ASSERT_TRUE(validate_subtour(carr_vempala).ok);
  EXPECT_EQ(classify(carr_vempala), PointClass::kCarrVempala);

  const HalfIntegerPoint k4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 2, 2}, {1, 3, 2}});
  EXPECT_EQ(classify(k4), PointClass::kBoydCarr);
  EXPECT_TRUE(is_square_class(PointClass::kBoydCarr));
  EXPECT_FALSE(is_square_class(PointClass::kCarrVempala));
  EXPECT_STREQ(point_class_name(PointClass::kOtherHalfInteger), "HALF-INTEGER");
}

TEST(ClassifyTest, OtherHalfInteger) {
  // Two triangles of 1/2-edges joined by 1-edges: a prism with halves on the
  // triangles.
  const HalfIntegerPoint x(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1},
                               {0, 3, 2}, {1, 4, 2}, {2, 5, 2}});
  ASSERT_TRUE(validate_subtour(x).ok);
  EXPECT_EQ(classify(x), PointClass::kOtherHalfInteger);
  EXPECT_THROW(decompose(x), InvalidInput);
}

TEST(DecomposeTest, Donuts) {
  for (int k : {2, 4}) {
    const SupportDecomposition d = decompose(make_donut(k).point());
    EXPECT_EQ(d.squares.size(), static_cast<std::size_t>(k));
    ASSERT_EQ(d.one_paths.size(), static_cast<std::size_t>(2 * k));
    for (const OnePath& p : d.one_paths) {
      EXPECT_EQ(p.edges.size(), static_cast<std::size_t>(k));
      EXPECT_FALSE(p.closed);
    }
    EXPECT_EQ(d.pair_partition.size(), static_cast<std::size_t>(2 * k));
  }
}

TEST(DecomposeTest, IntegralCycle) {
  const SupportDecomposition d = decompose(testing::integral_cycle(7));
  EXPECT_TRUE(d.squares.empty());
  ASSERT_EQ(d.one_paths.size(), 1u);
  EXPECT_TRUE(d.one_paths[0].closed);
  EXPECT_EQ(d.one_paths[0].edges.size(), 7u);
  EXPECT_TRUE(d.pair_partition.empty());
}

TEST(DecomposeTest, StructureOnRandomPoints) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const HalfIntegerPoint x = random_square_point(1 + seed % 5, 3, seed);
    ASSERT_TRUE(validate_subtour(x).ok);
    const SupportDecomposition d = decompose(x);
    std::vector<int> half_count(x.n(), 0);
    std::vector<int> degree(x.n(), 0);
    for (const SupportEdge& e : x.edges()) {
      if (e.x2 == 1) {
        ++half_count[e.u];
        ++half_count[e.v];
      }
      degree[e.u] += e.x2;
      degree[e.v] += e.x2;
    }
    std::vector<int> class_hits(x.edge_count(), 0);
    for (const auto& cls : d.pair_partition) {
      for (int e : cls) ++class_hits[e];
    }
    for (int e = 0; e < x.edge_count(); ++e) EXPECT_EQ(class_hits[e], x.edges()[e].x2 == 1 ? 1 : 0);
    for (const PointSquare& sq : d.squares) {
      for (NodeId v : sq.corners) {
        EXPECT_EQ(half_count[v], 2);
        EXPECT_EQ(degree[v], 4);
      }
    }
    std::vector<int> path_hits(x.edge_count(), 0);
    for (const OnePath& p : d.one_paths) {
      for (int e : p.edges) ++path_hits[e];
    }
    for (int e = 0; e < x.edge_count(); ++e) EXPECT_EQ(path_hits[e], x.edges()[e].x2 == 2 ? 1 : 0);
  }
}

TEST(ContractTest, DonutK2) {
  const DonutInstance d = make_donut(2);
  const ContractedPoint cp = contract_one_paths(d.point(), d.cost());
  const SquareGraph& sg = cp.square_graph;
  EXPECT_EQ(sg.graph().node_count(), 8);
  ASSERT_EQ(sg.matching().size(), 4u);
  for (EdgeId e : sg.matching()) EXPECT_EQ(cp.cost[e], 2);
  EXPECT_EQ(sg.graph().edge_count() - static_cast<int>(sg.matching().size()), 8);
}

TEST(ContractTest, SingleSquareGivesChords) {
  const HalfIntegerPoint x = testing::single_square_point();
  const std::vector<Cost> unit(x.edge_count(), 1);
  const ContractedPoint cp = contract_one_paths(x, unit);
  const SquareGraph& sg = cp.square_graph;
  EXPECT_EQ(sg.graph().node_count(), 4);
  ASSERT_EQ(sg.square_count(), 1);
  for (EdgeId e : sg.matching()) {
    EXPECT_EQ(cp.cost[e], 2);
    const Edge& ed = sg.graph().edge(e);
    EXPECT_EQ((ed.u - ed.v + 4) % 4, 2);
  }
}

TEST(ContractTest, UnitPathsKeepSupport) {
  const HalfIntegerPoint x(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}, {0, 2, 2}, {1, 3, 2}});
  const ContractedPoint cp = contract_one_paths(x, std::vector<Cost>(6, 1));
  EXPECT_EQ(cp.square_graph.graph().node_count(), 4);
  EXPECT_EQ(cp.square_graph.graph().edge_count(), 6);
}

TEST(ContractTest, ExpansionRoundTrip) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const HalfIntegerPoint x = random_square_point(1 + seed % 6, 4, seed);
    const std::vector<Cost> c = random_costs(x.edge_count(), 50, seed);
    const ContractedPoint cp = contract_one_paths(x, c);
    std::vector<int> hits(x.edge_count(), 0);
    for (EdgeId e = 0; e < cp.square_graph.graph().edge_count(); ++e) {
      Cost sum = 0;
      for (int s : cp.expand(e)) {
        ++hits[s];
        sum += c[s];
      }
      EXPECT_EQ(sum, cp.cost[e]);
    }
    for (int e = 0; e < x.edge_count(); ++e) EXPECT_EQ(hits[e], 1);
  }
}

TEST(ContractTest, IntegralPointIsRejected) {
  const HalfIntegerPoint x = testing::integral_cycle(4);
  EXPECT_THROW(contract_one_paths(x, std::vector<Cost>(4, 1)), InvalidInput);
}

}  // namespace
}  // namespace sqtour
