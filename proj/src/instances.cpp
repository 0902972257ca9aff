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

#include "sqtour/instances.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <utility>

#include "sqtour/error.hpp"

namespace sqtour {
namespace {

constexpr int kMaxAttempts = 10000;

// Darts 4v..4v+3 belong to node v; returns the pairs of a uniform pairing.
std::vector<std::pair<int, int>> random_pairing(int n, std::mt19937_64& rng) {
  std::vector<int> darts(4 * n);
  std::iota(darts.begin(), darts.end(), 0);
  std::shuffle(darts.begin(), darts.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(2 * n);
  for (int i = 0; i < 4 * n; i += 2) pairs.emplace_back(darts[i], darts[i + 1]);
  return pairs;
}

bool pairing_connected(int n, const std::vector<std::pair<int, int>>& pairs) {
  DisjointSets ds(n);
  for (auto [a, b] : pairs) ds.unite(a / 4, b / 4);
  return ds.components() == 1;
}

std::vector<std::pair<int, int>> connected_pairing(int n, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto pairs = random_pairing(n, rng);
    if (pairing_connected(n, pairs)) return pairs;
  }
  throw InvalidInput("generation failed");
}

std::vector<std::array<int, 4>> random_corners(int n, std::mt19937_64& rng) {
  std::vector<std::array<int, 4>> perm(n);
  for (auto& p : perm) {
    p = {0, 1, 2, 3};
    std::shuffle(p.begin(), p.end(), rng);
  }
  return perm;
}

bool adjacent_corners(int a, int b) { return (a - b + 4) % 4 == 1 || (b - a + 4) % 4 == 1; }

// ---- text format helpers ----

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void parse_error(const Line& line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line.number) + ": " + what);
}

long long to_int(const Line& line, const std::string& tok) {
  long long value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) parse_error(line, "expected integer, got '" + tok + "'");
  return value;
}

int to_node(const Line& line, const std::string& tok, int n) {
  const long long v = to_int(line, tok);
  if (v < 0 || v >= n) parse_error(line, "node out of range: " + tok);
  return static_cast<int>(v);
}

Dart to_dart(const Line& line, const std::string& tok, int m) {
  const auto dot = tok.find('.');
  if (dot == std::string::npos) parse_error(line, "expected dart <edge>.<end>, got '" + tok + "'");
  const long long e = to_int(line, tok.substr(0, dot));
  const long long end = to_int(line, tok.substr(dot + 1));
  if (e < 0 || e >= m || (end != 0 && end != 1)) parse_error(line, "dart out of range: " + tok);
  return {static_cast<EdgeId>(e), static_cast<int>(end)};
}

int parse_header(const std::vector<Line>& lines, const char* keyword) {
  if (lines.empty()) throw InvalidInput(std::string("empty input; expected ") + keyword + " header");
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != keyword) parse_error(h, std::string("expected '") + keyword + " <n>'");
  const long long n = to_int(h, h.tokens[1]);
  if (n < 1 || n > (1 << 24)) parse_error(h, "node count out of range");
  return static_cast<int>(n);
}

// Index of the END line; it must be the last line.
std::size_t find_end(const std::vector<Line>& lines) {
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens[0] == "END") {
      if (lines[i].tokens.size() != 1) parse_error(lines[i], "END takes no arguments");
      if (i + 1 != lines.size()) parse_error(lines[i + 1], "content after END");
      return i;
    }
  }
  throw InvalidInput("missing END");
}

}  // namespace

DonutInstance make_donut(int k) {
  if (k < 2) throw InvalidInput("donut needs k >= 2");
  const int n = 2 * k * k + 2 * k;
  std::vector<DonutNode> layout(n);
  for (int s = 0; s < k; ++s) {
    for (int c = 0; c < 4; ++c) layout[4 * s + c] = {s, c, -1, 0};
  }
  std::vector<InstanceEdge> edges;
  auto corner = [](int s, int c) { return 4 * s + c; };
  for (int s = 0; s < k; ++s) {
    edges.push_back({corner(s, 0), corner(s, 2), 1, k});  // inner
    edges.push_back({corner(s, 1), corner(s, 3), 1, k});  // outer
    edges.push_back({corner(s, 0), corner(s, 1), 1, 1});
    edges.push_back({corner(s, 2), corner(s, 3), 1, 1});
  }
  NodeId next_node = 4 * k;
  for (int s = 0; s < k; ++s) {
    const int t = (s + 1) % k;
    for (int path = 0; path < 2; ++path) {
      NodeId prev = corner(s, 2 + path);
      for (int pos = 1; pos < k; ++pos) {
        layout[next_node] = {s, -1, path, pos};
        edges.push_back({prev, next_node, 2, 1});
        prev = next_node++;
      }
      edges.push_back({prev, corner(t, path), 2, 1});
    }
  }
  DonutInstance out{k, make_instance(n, std::move(edges)), std::move(layout)};
  if (out.instance.point.cost_x2(out.instance.cost) != 2 * (3 * static_cast<Cost>(k) * k + k)) {
    throw InvariantViolation("donut cost mismatch");
  }
  return out;
}

MultiGraph random_four_regular(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("need at least one node");
  std::mt19937_64 rng(seed);
  MultiGraph g(n);
  for (auto [a, b] : connected_pairing(n, rng)) g.add_edge(a / 4, b / 4);
  return g;
}

SquareGraph random_square_graph(int num_squares, std::uint64_t seed) {
  if (num_squares < 1) throw InvalidInput("need at least one square");
  std::mt19937_64 rng(seed);
  const auto pairs = connected_pairing(num_squares, rng);
  const auto perm = random_corners(num_squares, rng);
  auto corner = [&](int dart) { return 4 * (dart / 4) + perm[dart / 4][dart % 4]; };
  MultiGraph g(4 * num_squares);
  std::vector<EdgeId> matching;
  for (auto [a, b] : pairs) matching.push_back(g.add_edge(corner(a), corner(b)));
  std::vector<SquareCycle> squares(num_squares);
  for (int s = 0; s < num_squares; ++s) {
    for (int i = 0; i < 4; ++i) {
      squares[s].corners[i] = 4 * s + i;
      squares[s].edges[i] = g.add_edge(4 * s + i, 4 * s + (i + 1) % 4);
    }
  }
  return SquareGraph(std::move(g), std::move(matching), std::move(squares));
}

HalfIntegerPoint random_square_point(int num_squares, int max_path_len, std::uint64_t seed) {
  if (num_squares < 1) throw InvalidInput("need at least one square");
  if (max_path_len < 1) throw InvalidInput("path length bound must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, max_path_len);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::pair<int, int>> pairs = random_pairing(num_squares, rng);
    if (!pairing_connected(num_squares, pairs)) continue;
    const auto perm = random_corners(num_squares, rng);
    auto corner = [&](int dart) { return 4 * (dart / 4) + perm[dart / 4][dart % 4]; };
    std::vector<SupportEdge> edges;
    bool rejected = false;
    NodeId next_node = 4 * num_squares;
    for (auto [a, b] : pairs) {
      const int len = length(rng);
      if (a / 4 == b / 4 && adjacent_corners(corner(a) % 4, corner(b) % 4)) rejected = true;
      NodeId prev = corner(a);
      for (int i = 1; i < len; ++i) {
        edges.push_back({prev, next_node, 2});
        prev = next_node++;
      }
      edges.push_back({prev, corner(b), 2});
    }
    if (rejected) continue;
    for (int s = 0; s < num_squares; ++s) {
      for (int i = 0; i < 4; ++i) edges.push_back({4 * s + i, 4 * s + (i + 1) % 4, 1});
    }
    HalfIntegerPoint x(next_node, std::move(edges));
    if (validate_subtour(x).ok) return x;
  }
  throw InvalidInput("generation failed");
}

std::vector<Cost> random_costs(int count, Cost max_cost, std::uint64_t seed) {
  if (max_cost < 0) throw InvalidInput("negative cost bound");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Cost> dist(0, max_cost);
  std::vector<Cost> c(count);
  for (Cost& v : c) v = dist(rng);
  return c;
}

BitransitionSystem random_bitransition_system(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("need at least one node");
  std::mt19937_64 rng(seed);
  BitransitionSystem sys{MultiGraph(n), std::vector<Bitransition>(n)};
  for (auto [a, b] : connected_pairing(n, rng)) sys.graph.add_edge(a / 4, b / 4);
  for (NodeId v = 0; v < n; ++v) {
    const auto darts = sys.graph.darts_at(v);
    std::copy(darts.begin(), darts.end(), sys.forbidden[v].darts.begin());
    std::shuffle(sys.forbidden[v].darts.begin(), sys.forbidden[v].darts.end(), rng);
  }
  return sys;
}

HalfIntegerPoint everywhere_instance(const MultiGraph& g, std::span<const EdgeId> h) {
  const int n = g.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) != 3) throw InvalidInput("graph is not cubic");
  }
  std::vector<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) throw InvalidInput("graph has a loop");
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InvalidInput("graph has parallel edges");
  if (!is_connected(g)) throw InvalidInput("graph is not 3-edge-connected");
  if (global_min_cut(WeightedGraph(g, std::vector<Cost>(g.edge_count(), 1))).value < 3) {
    throw InvalidInput("graph is not 3-edge-connected");
  }
  if (static_cast<int>(cycle_order(g, h).size()) != n) throw InvalidInput("cycle is not Hamiltonian");
  std::vector<int> x2(g.edge_count(), 2);
  for (EdgeId e : h) x2[e] = 1;
  std::vector<SupportEdge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back({g.edge(e).u, g.edge(e).v, x2[e]});
  return HalfIntegerPoint(n, std::move(edges));
}

namespace {

CubicWithCycle from_lists(int n, std::initializer_list<std::pair<int, int>> cycle,
                          std::initializer_list<std::pair<int, int>> rest) {
  CubicWithCycle out{MultiGraph(n), {}};
  for (auto [u, v] : cycle) out.cycle.push_back(out.graph.add_edge(u, v));
  for (auto [u, v] : rest) out.graph.add_edge(u, v);
  return out;
}

}  // namespace

CubicWithCycle complete_graph_k4() { return from_lists(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {{0, 2}, {1, 3}}); }

CubicWithCycle prism_graph() {
  return from_lists(6, {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 0}}, {{0, 2}, {1, 4}, {3, 5}});
}

CubicWithCycle bipartite_k33() {
  return from_lists(6, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}}, {{0, 4}, {1, 5}, {2, 3}});
}

DistanceMatrix node_weight_costs(std::span<const Cost> f) {
  const int n = static_cast<int>(f.size());
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i) {
    if (f[i] < 0) throw InvalidInput("negative node weight");
    for (int j = 0; j < n; ++j) d(i, j) = i == j ? 0 : f[i] + f[j];
  }
  return d;
}

Instance parse_point(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  const int n = parse_header(lines, "POINT");
  const std::size_t end = find_end(lines);
  std::vector<InstanceEdge> edges;
  for (std::size_t i = 1; i < end; ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "E" || line.tokens.size() != 5) parse_error(line, "expected 'E <u> <v> <x2> <cost>'");
    const long long x2 = to_int(line, line.tokens[3]);
    const long long cost = to_int(line, line.tokens[4]);
    if (x2 != 1 && x2 != 2) parse_error(line, "x2 must be 1 or 2");
    if (cost < 0) parse_error(line, "negative cost");
    edges.push_back({to_node(line, line.tokens[1], n), to_node(line, line.tokens[2], n), static_cast<int>(x2), cost});
  }
  return make_instance(n, std::move(edges));
}

void write_point(std::ostream& out, const Instance& inst) {
  out << "POINT " << inst.point.n() << '\n';
  const auto edges = inst.point.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out << "E " << edges[e].u << ' ' << edges[e].v << ' ' << edges[e].x2 << ' ' << inst.cost[e] << '\n';
  }
  out << "END\n";
}

BitransitionSystem parse_bts(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  const int n = parse_header(lines, "BTS");
  const std::size_t end = find_end(lines);
  std::vector<std::pair<long long, std::pair<NodeId, NodeId>>> edge_lines;
  for (std::size_t i = 1; i < end; ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "E") {
      if (line.tokens.size() != 4) parse_error(line, "expected 'E <id> <u> <v>'");
      edge_lines.push_back({to_int(line, line.tokens[1]),
                            {to_node(line, line.tokens[2], n), to_node(line, line.tokens[3], n)}});
    } else if (line.tokens[0] != "F") {
      parse_error(line, "unknown record '" + line.tokens[0] + "'");
    }
  }
  std::sort(edge_lines.begin(), edge_lines.end());
  BitransitionSystem sys{MultiGraph(n), std::vector<Bitransition>(n)};
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    if (edge_lines[i].first != static_cast<long long>(i)) throw InvalidInput("edge ids must be 0..m-1, each once");
    sys.graph.add_edge(edge_lines[i].second.first, edge_lines[i].second.second);
  }
  const int m = sys.graph.edge_count();
  std::vector<std::uint8_t> has_f(n, 0);
  for (std::size_t i = 1; i < end; ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "F") continue;
    if (line.tokens.size() != 6) parse_error(line, "expected 'F <v> <d1> <d2> <d3> <d4>'");
    const NodeId v = to_node(line, line.tokens[1], n);
    if (has_f[v]++) parse_error(line, "second forbidden pairing for node " + line.tokens[1]);
    for (int j = 0; j < 4; ++j) sys.forbidden[v].darts[j] = to_dart(line, line.tokens[2 + j], m);
  }
  for (NodeId v = 0; v < n; ++v) {
    if (!has_f[v]) throw InvalidInput("no forbidden pairing for node " + std::to_string(v));
  }
  return sys;
}

void write_bts(std::ostream& out, const BitransitionSystem& sys) {
  out << "BTS " << sys.graph.node_count() << '\n';
  for (EdgeId e = 0; e < sys.graph.edge_count(); ++e) {
    out << "E " << e << ' ' << sys.graph.edge(e).u << ' ' << sys.graph.edge(e).v << '\n';
  }
  for (NodeId v = 0; v < sys.graph.node_count(); ++v) {
    out << "F " << v;
    for (const Dart& d : sys.forbidden[v].darts) out << ' ' << d.edge << '.' << d.end;
    out << '\n';
  }
  out << "END\n";
}

}  // namespace sqtour
