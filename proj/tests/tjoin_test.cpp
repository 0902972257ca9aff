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

#include "sqtour/tjoin.hpp"

#include <gtest/gtest.h>

#include <random>

#include "sqtour/error.hpp"
#include "sqtour/oracles.hpp"
#include "test_util.hpp"

namespace sqtour {
namespace {

constexpr MatchingEngine kEngines[] = {MatchingEngine::kSubsetDp, MatchingEngine::kBlossom};

void check_perfect(const PerfectMatching& pm, const DistanceMatrix& d) {
  std::vector<int> seen(d.size(), 0);
  Cost w = 0;
  for (auto [i, j] : pm.pairs) {
    EXPECT_LT(i, j);
    ++seen[i];
    ++seen[j];
    w += d(i, j);
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  EXPECT_EQ(w, pm.weight);
}

TEST(PerfectMatchingTest, SmallExamples) {
  for (MatchingEngine engine : kEngines) {
    DistanceMatrix two(2);
    two(0, 1) = two(1, 0) = 7;
    EXPECT_EQ(min_weight_perfect_matching(two, engine).weight, 7);
    DistanceMatrix path(4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) path(i, j) = std::abs(i - j);
    }
    const PerfectMatching pm = min_weight_perfect_matching(path, engine);
    EXPECT_EQ(pm.weight, 2);
    check_perfect(pm, path);
    EXPECT_EQ(min_weight_perfect_matching(DistanceMatrix(0), engine).weight, 0);
  }
}

TEST(PerfectMatchingTest, RejectsBadInput) {
  EXPECT_THROW(min_weight_perfect_matching(DistanceMatrix(3)), InvalidInput);
  DistanceMatrix asym(2);
  asym(0, 1) = 1;
  EXPECT_THROW(min_weight_perfect_matching(asym), InvalidInput);
  DistanceMatrix neg(2);
  neg(0, 1) = neg(1, 0) = -1;
  EXPECT_THROW(min_weight_perfect_matching(neg), InvalidInput);
  EXPECT_THROW(min_weight_perfect_matching(DistanceMatrix(26), MatchingEngine::kSubsetDp), SizeCapExceeded);
}

TEST(PerfectMatchingTest, EnginesAgreeWithEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 * (1 + trial % 6);
    const DistanceMatrix d = testing::random_symmetric(n, trial % 3 == 0 ? 3 : 1000, rng);
    const Cost expected = testing::brute_matching(d, (1u << n) - 1);
    for (MatchingEngine engine : kEngines) {
      const PerfectMatching pm = min_weight_perfect_matching(d, engine);
      ASSERT_EQ(pm.weight, expected) << "trial " << trial;
      check_perfect(pm, d);
    }
  }
}

TEST(PerfectMatchingTest, BlossomAgreesWithDpUpTo16) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 14 + 2 * (trial % 2);
    const DistanceMatrix d = testing::random_symmetric(n, trial % 2 ? 5 : 10000, rng);
    EXPECT_EQ(min_weight_perfect_matching(d, MatchingEngine::kBlossom).weight,
              min_weight_perfect_matching(d, MatchingEngine::kSubsetDp).weight);
  }
}

Cost brute_max_matching(int n, std::span<const WeightedEdge> edges, std::uint32_t used, std::size_t from,
                        bool max_card, int* card) {
  Cost best = 0;
  int best_card = 0;
  for (std::size_t i = from; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u == e.v || ((used >> e.u) & 1) || ((used >> e.v) & 1)) continue;
    int sub_card = 0;
    const Cost w = e.weight + brute_max_matching(n, edges, used | (1u << e.u) | (1u << e.v), i + 1, max_card,
                                                 &sub_card);
    ++sub_card;
    const bool better = max_card ? (sub_card > best_card || (sub_card == best_card && w > best)) : w > best;
    if (better) {
      best = w;
      best_card = sub_card;
    }
  }
  *card = best_card;
  return best;
}

TEST(MaxWeightMatchingTest, MatchesEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 9;
    std::vector<WeightedEdge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3) edges.push_back({u, v, static_cast<Cost>(rng() % 20)});
      }
    }
    for (bool max_card : {false, true}) {
      const std::vector<int> mate = max_weight_matching(n, edges, max_card);
      ASSERT_EQ(static_cast<int>(mate.size()), n);
      Cost w = 0;
      int card = 0;
      for (const auto& e : edges) {
        if (mate[e.u] == e.v) {
          EXPECT_EQ(mate[e.v], e.u);
          w += e.weight;
          ++card;
        }
      }
      int expected_card = 0;
      const Cost expected = brute_max_matching(n, edges, 0, 0, max_card, &expected_card);
      ASSERT_EQ(w, expected) << "trial " << trial << " max_card " << max_card;
      if (max_card) EXPECT_EQ(card, expected_card);
    }
  }
}

TEST(TJoinTest, PathEndpoints) {
  MultiGraph path(4);
  for (int i = 0; i < 3; ++i) path.add_edge(i, i + 1);
  const WeightedGraph wg(path, {2, 3, 4});
  for (MatchingEngine engine : kEngines) {
    const TJoin j = min_t_join(wg, std::vector<NodeId>{0, 3}, engine);
    EXPECT_EQ(j.edges, (std::vector<EdgeId>{0, 1, 2}));
    EXPECT_EQ(j.cost, 9);
    const TJoin empty = min_t_join(wg, {}, engine);
    EXPECT_TRUE(empty.edges.empty());
    EXPECT_EQ(empty.cost, 0);
  }
}

TEST(TJoinTest, Errors) {
  MultiGraph path(3);
  path.add_edge(0, 1);
  const WeightedGraph wg(path, {1});
  EXPECT_THROW(min_t_join(wg, std::vector<NodeId>{0}), InvalidInput);
  EXPECT_THROW(min_t_join(wg, {}), InvalidInput);
  EXPECT_THROW(min_t_join(wg, std::vector<NodeId>{0, 2}), InvalidInput);
  path.add_edge(1, 2);
  const WeightedGraph ok(path, {1, 1});
  EXPECT_THROW(min_t_join(ok, std::vector<NodeId>{0, 0}), InvalidInput);
  EXPECT_THROW(min_t_join(ok, std::vector<NodeId>{0, 3}), InvalidInput);
}

TEST(TJoinTest, MatchesEnumeration) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 9;
    const int extra = std::min(18 - (n - 1), static_cast<int>(rng() % 12));
    const WeightedGraph wg = testing::random_connected(n, extra, 15, rng);
    std::vector<NodeId> t;
    for (NodeId v = 0; v < n; ++v) {
      if (rng() % 2) t.push_back(v);
    }
    if (t.size() % 2) t.pop_back();
    const TJoin brute = brute_t_join(wg, t);
    for (MatchingEngine engine : kEngines) {
      const TJoin j = min_t_join(wg, t, engine);
      ASSERT_EQ(j.cost, brute.cost) << "trial " << trial;
      EXPECT_EQ(odd_nodes(wg.graph, j.edges), t);
      Cost c = 0;
      for (EdgeId e : j.edges) c += wg.weight[e];
      EXPECT_EQ(c, j.cost);
    }
  }
}

TEST(TJoinTest, OddNodesCountMultiplicity) {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(odd_nodes(g, std::vector<EdgeId>{0, 1}), (std::vector<NodeId>{0, 2}));
  EXPECT_TRUE(odd_nodes(g, std::vector<EdgeId>{0, 0}).empty());
}

}  // namespace
}  // namespace sqtour
