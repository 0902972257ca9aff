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

#ifndef SQTOUR_TREESEL_HPP_
#define SQTOUR_TREESEL_HPP_

#include <optional>
#include <span>
#include <vector>

#include "sqtour/graphcore.hpp"
#include "sqtour/halfpoint.hpp"

namespace sqtour {

// Independence oracle over elements 0..ground_size()-1.
class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual int ground_size() const = 0;
  virtual bool is_independent(std::span<const int> subset) const = 0;

  // Size of a greedy basis.
  int rank() const;
};

// Forests of a multigraph; elements are edge ids.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(MultiGraph g) : g_(std::move(g)) {}
  int ground_size() const override { return g_.edge_count(); }
  bool is_independent(std::span<const int> subset) const override;

 private:
  MultiGraph g_;
};

// Sets with at most two edges at `special` whose other edges form a forest on
// the remaining nodes. Bases of a connected graph are its 1-trees.
class OneTreeMatroid final : public Matroid {
 public:
  explicit OneTreeMatroid(MultiGraph g, NodeId special = 0) : g_(std::move(g)), special_(special) {}
  int ground_size() const override { return g_.edge_count(); }
  bool is_independent(std::span<const int> subset) const override;

 private:
  MultiGraph g_;
  NodeId special_;
};

// At most one element per class. class_of[e] in [0, class_count).
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<int> class_of, int class_count);
  int ground_size() const override { return static_cast<int>(class_of_.size()); }
  bool is_independent(std::span<const int> subset) const override;
  int class_count() const { return class_count_; }
  int class_of(int e) const { return class_of_[e]; }

 private:
  std::vector<int> class_of_;
  int class_count_;
};

// Minimum-cost common basis by successive shortest augmenting paths in the
// exchange graph (lengths c on elements entering, -c on elements leaving;
// ties broken by fewer arcs). nullopt when the ranks differ or no common basis
// exists. The result is sorted.
std::optional<std::vector<int>> weighted_matroid_intersection(const Matroid& m1, const Matroid& m2,
                                                               std::span<const Cost> cost);

bool is_one_tree(const MultiGraph& g, std::span<const int> edges, NodeId special = 0);

struct RainbowOneTree {
  std::vector<int> edges;  // support edge indices, sorted
  Cost cost = 0;
};

// Partition of the support: one class per square matching, one singleton per
// 1-edge.
PartitionMatroid rainbow_partition(const HalfIntegerPoint& x, const SupportDecomposition& d);

// Cheapest 1-tree of the support (special node 0) holding every 1-edge and
// one edge of each square matching. Throws InvariantViolation if none exists.
RainbowOneTree rainbow_one_tree(const HalfIntegerPoint& x, std::span<const Cost> cost);

}  // namespace sqtour

#endif  // SQTOUR_TREESEL_HPP_
