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

#ifndef SQTOUR_HALFPOINT_HPP_
#define SQTOUR_HALFPOINT_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/graphcore.hpp"

namespace sqtour {

// One support edge of a half-integer point; x2 is twice the value (1 or 2).
struct SupportEdge {
  NodeId u = 0;
  NodeId v = 0;
  int x2 = 0;
};

// A point of the subtour polytope on K_n with entries in {0, 1/2, 1}, stored
// as its support. Edges are kept sorted by (u, v) with u < v; an edge's index
// in that order is its id in support_graph().
class HalfIntegerPoint {
 public:
  // Normalizes endpoint order and sorts. Throws InvalidInput on n < 1,
  // out-of-range or repeated pairs, loops, or x2 outside {1, 2}.
  HalfIntegerPoint(int n, std::vector<SupportEdge> edges);

  int n() const { return n_; }
  std::span<const SupportEdge> edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::optional<int> find(NodeId u, NodeId v) const;

  MultiGraph support_graph() const;
  WeightedGraph doubled_weights() const;
  WeightedGraph weighted_support(std::span<const Cost> cost) const;

  // 2 * c·x, exact.
  Cost cost_x2(std::span<const Cost> cost) const;

 private:
  int n_;
  std::vector<SupportEdge> edges_;
};

// A point together with nonnegative costs on its support edges (aligned with
// HalfIntegerPoint::edges()).
struct Instance {
  HalfIntegerPoint point;
  std::vector<Cost> cost;
};

struct InstanceEdge {
  NodeId u = 0;
  NodeId v = 0;
  int x2 = 0;
  Cost cost = 0;
};

Instance make_instance(int n, std::vector<InstanceEdge> edges);

enum class Violation { kNone, kDegree, kDisconnected, kCut };

struct SubtourReport {
  bool ok = true;
  Violation violation = Violation::kNone;
  NodeId node = -1;                 // kDegree: offending node
  Cost degree_x2 = 0;               // kDegree: its doubled degree
  std::vector<NodeId> side;         // kDisconnected / kCut: witness, contains node 0
  Cost cut_x2 = 0;                  // doubled x(δ(side))

  std::string describe() const;
};

// Degree constraints at every node, then a global minimum cut of the doubled
// support. Entry values are guaranteed by HalfIntegerPoint itself.
SubtourReport validate_subtour(const HalfIntegerPoint& x);

enum class PointClass { kSquare, kBoydCarr, kCarrVempala, kOtherHalfInteger };

const char* point_class_name(PointClass c);

// Most specific class. Boyd-Carr points are square points with every node on
// a square; the Square test wins over Carr-Vempala when both hold.
// Throws InvalidInput("not in S^n") if validate_subtour fails.
PointClass classify(const HalfIntegerPoint& x);

inline bool is_square_class(PointClass c) {
  return c == PointClass::kSquare || c == PointClass::kBoydCarr;
}

// Half-edge square in the support. edges[i] (support indices) joins
// corners[i] and corners[(i + 1) % 4]; corners[0] is the smallest node and
// corners[1] its smaller square neighbour.
struct PointSquare {
  std::array<NodeId, 4> corners{};
  std::array<int, 4> edges{};
};

// Maximal path of 1-edges between two square corners, or the closed 1-cycle of
// an integral point. nodes.size() == edges.size() + 1; for a closed path the
// first node is repeated at the end.
struct OnePath {
  std::vector<NodeId> nodes;
  std::vector<int> edges;
  bool closed = false;
};

struct SupportDecomposition {
  std::vector<PointSquare> squares;
  std::vector<OnePath> one_paths;
  // Class 2*s + m is perfect matching m of square s: {edges[m], edges[m + 2]}.
  std::vector<std::array<int, 2>> pair_partition;
};

// Throws InvalidInput for points outside S^n or not of square class.
SupportDecomposition decompose(const HalfIntegerPoint& x);

// Square graph obtained by replacing each 1-path with a single M-edge.
// Square-graph node 4*s + i is corner i of square s. Edges 0..(#paths - 1) are
// the M-edges in one_paths order; then square s owns edges
// #paths + 4*s + i, parallel to its support edges[i].
struct ContractedPoint {
  SquareGraph square_graph;
  std::vector<Cost> cost;              // per square-graph edge
  std::vector<NodeId> original_node;   // square-graph node -> point node
  std::vector<int> support_edge;       // square edges -> support index, -1 on M
  SupportDecomposition decomposition;  // one_paths[i] expands M-edge i

  // Support edge indices represented by a square-graph edge.
  std::vector<int> expand(EdgeId e) const;
};

// Throws InvalidInput("integral point; tour is the 1-edge cycle") when there
// are no squares.
ContractedPoint contract_one_paths(const HalfIntegerPoint& x, std::span<const Cost> cost);

}  // namespace sqtour

#endif  // SQTOUR_HALFPOINT_HPP_
