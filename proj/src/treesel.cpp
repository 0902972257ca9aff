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

#include "sqtour/treesel.hpp"

#include <algorithm>
#include <utility>

#include "sqtour/error.hpp"

namespace sqtour {

int Matroid::rank() const {
  std::vector<int> basis;
  for (int e = 0; e < ground_size(); ++e) {
    basis.push_back(e);
    if (!is_independent(basis)) basis.pop_back();
  }
  return static_cast<int>(basis.size());
}

bool GraphicMatroid::is_independent(std::span<const int> subset) const {
  DisjointSets ds(g_.node_count());
  for (int e : subset) {
    if (!ds.unite(g_.edge(e).u, g_.edge(e).v)) return false;
  }
  return true;
}

bool OneTreeMatroid::is_independent(std::span<const int> subset) const {
  DisjointSets ds(g_.node_count());
  int at_special = 0;
  for (int e : subset) {
    const Edge& ed = g_.edge(e);
    if (ed.u == special_ || ed.v == special_) {
      if (ed.u == ed.v || ++at_special > 2) return false;
    } else if (!ds.unite(ed.u, ed.v)) {
      return false;
    }
  }
  return true;
}

PartitionMatroid::PartitionMatroid(std::vector<int> class_of, int class_count)
    : class_of_(std::move(class_of)), class_count_(class_count) {
  for (int c : class_of_) {
    if (c < 0 || c >= class_count_) throw InvalidInput("partition class out of range");
  }
}

bool PartitionMatroid::is_independent(std::span<const int> subset) const {
  std::vector<std::uint8_t> hit(class_count_, 0);
  for (int e : subset) {
    if (hit[class_of_[e]]++) return false;
  }
  return true;
}

std::optional<std::vector<int>> weighted_matroid_intersection(const Matroid& m1, const Matroid& m2,
                                                               std::span<const Cost> cost) {
  const int size = m1.ground_size();
  if (m2.ground_size() != size || static_cast<int>(cost.size()) != size) {
    throw InvalidInput("matroids and costs must share a ground set");
  }
  const int rank = m1.rank();
  if (m2.rank() != rank) return std::nullopt;

  std::vector<std::uint8_t> in(size, 0);
  std::vector<int> current;
  std::vector<int> scratch;
  auto with = [&](int add) {
    scratch = current;
    scratch.push_back(add);
    return std::span<const int>(scratch);
  };
  auto swapped = [&](int drop, int add) {
    scratch.clear();
    for (int e : current) {
      if (e != drop) scratch.push_back(e);
    }
    scratch.push_back(add);
    return std::span<const int>(scratch);
  };

  struct Label {
    Cost length;
    int hops;
    bool operator<(const Label& o) const { return length != o.length ? length < o.length : hops < o.hops; }
  };
  constexpr Label kNone{kUnreachable, 0};

  while (static_cast<int>(current.size()) < rank) {
    std::vector<std::uint8_t> source(size, 0);
    std::vector<std::uint8_t> sink(size, 0);
    std::vector<std::uint8_t> free1(size, 0);
    std::vector<std::uint8_t> free2(size, 0);
    for (int x = 0; x < size; ++x) {
      if (in[x]) continue;
      free1[x] = source[x] = m1.is_independent(with(x));
      free2[x] = sink[x] = m2.is_independent(with(x));
    }
    // Arcs y -> x when current - y + x is independent in m1, x -> y for m2.
    std::vector<std::pair<int, int>> arcs;
    for (int y : current) {
      for (int x = 0; x < size; ++x) {
        if (in[x]) continue;
        if (free1[x] || m1.is_independent(swapped(y, x))) arcs.push_back({y, x});
        if (free2[x] || m2.is_independent(swapped(y, x))) arcs.push_back({x, y});
      }
    }
    auto length_of = [&](int e) { return in[e] ? -cost[e] : cost[e]; };
    std::vector<Label> label(size, kNone);
    std::vector<int> pred(size, -1);
    for (int x = 0; x < size; ++x) {
      if (source[x]) label[x] = {cost[x], 1};
    }
    bool changed = true;
    for (int round = 0; changed; ++round) {
      if (round > size + 1) throw InvariantViolation("negative cycle in exchange graph");
      changed = false;
      for (const auto& [from, to] : arcs) {
        if (label[from].length == kUnreachable) continue;
        const Label candidate{label[from].length + length_of(to), label[from].hops + 1};
        if (candidate < label[to]) {
          label[to] = candidate;
          pred[to] = from;
          changed = true;
        }
      }
    }
    int best = -1;
    for (int x = 0; x < size; ++x) {
      if (sink[x] && label[x].length != kUnreachable && (best < 0 || label[x] < label[best])) best = x;
    }
    if (best < 0) break;
    for (int v = best; v >= 0; v = pred[v]) in[v] ^= 1;
    current.clear();
    for (int e = 0; e < size; ++e) {
      if (in[e]) current.push_back(e);
    }
  }
  if (static_cast<int>(current.size()) != rank) return std::nullopt;
  return current;
}

bool is_one_tree(const MultiGraph& g, std::span<const int> edges, NodeId special) {
  if (static_cast<int>(edges.size()) != g.node_count()) return false;
  DisjointSets ds(g.node_count());
  int at_special = 0;
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    const Edge& ed = g.edge(e);
    if (ed.u == special || ed.v == special) {
      if (ed.u == ed.v) return false;
      ++at_special;
    } else if (!ds.unite(ed.u, ed.v)) {
      return false;
    }
  }
  // n - 2 forest edges on n - 1 nodes form a spanning tree.
  return at_special == 2;
}

PartitionMatroid rainbow_partition(const HalfIntegerPoint& x, const SupportDecomposition& d) {
  std::vector<int> class_of(x.edge_count(), -1);
  int classes = 0;
  for (const auto& pair : d.pair_partition) {
    for (int e : pair) class_of[e] = classes;
    ++classes;
  }
  for (int e = 0; e < x.edge_count(); ++e) {
    if (x.edges()[e].x2 == 2) class_of[e] = classes++;
  }
  return PartitionMatroid(std::move(class_of), classes);
}

RainbowOneTree rainbow_one_tree(const HalfIntegerPoint& x, std::span<const Cost> cost) {
  if (static_cast<int>(cost.size()) != x.edge_count()) throw InvalidInput("cost vector does not match support");
  const SupportDecomposition d = decompose(x);
  const OneTreeMatroid trees(x.support_graph(), 0);
  const PartitionMatroid colours = rainbow_partition(x, d);
  auto basis = weighted_matroid_intersection(trees, colours, cost);
  if (!basis || static_cast<int>(basis->size()) != x.n()) {
    throw InvariantViolation("invariant violation: no rainbow 1-tree");
  }
  RainbowOneTree out{std::move(*basis), 0};
  for (int e : out.edges) out.cost += cost[e];
  return out;
}

}  // namespace sqtour
