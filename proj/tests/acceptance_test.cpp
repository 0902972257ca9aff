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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <ratio>
#include <sstream>
#include <string>
#include <vector>

#include "sqtour/deltamatroid.hpp"
#include "sqtour/error.hpp"
#include "sqtour/graphcore.hpp"
#include "sqtour/halfpoint.hpp"
#include "sqtour/instances.hpp"
#include "sqtour/kotzig.hpp"
#include "sqtour/oracles.hpp"
#include "sqtour/tjoin.hpp"
#include "sqtour/tour.hpp"
#include "sqtour/treesel.hpp"

namespace {

using namespace sqtour;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && condition;
  }
  Outcome result(const std::string& summary) const {
    return {ok_, ok_ ? summary : summary + "; first failure: " + first_failure_};
  }

 private:
  bool ok_ = true;
  std::string first_failure_;
};

Outcome donut_arithmetic() {
  Check c;
  for (int k = 2; k <= 12; ++k) {
    const DonutInstance d = make_donut(k);
    c.expect(validate_subtour(d.point()).ok, "k=" + std::to_string(k) + " invalid");
    c.expect(classify(d.point()) == PointClass::kSquare, "k=" + std::to_string(k) + " not square");
    c.expect(d.point().cost_x2(d.cost()) == 2 * (3 * k * k + k), "k=" + std::to_string(k) + " c.x mismatch");
  }
  return c.result("k=2..12 valid, c.x = 3k^2+k");
}

Outcome donut_opt() {
  Check c;
  std::ostringstream summary;
  summary << std::fixed << std::setprecision(2);
  for (int k : {2, 3}) {
    const DonutInstance d = make_donut(k);
    const auto start = std::chrono::steady_clock::now();
    const Cost opt = held_karp(metric_closure(d.point().weighted_support(d.cost())));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Cost expected = 4 * k * k - 2 * k + 2;
    c.expect(opt == expected, "k=" + std::to_string(k) + " OPT=" + std::to_string(opt));
    if (k == 2) c.expect(secs < 5.0, "k=2 took too long");
    const Cost lp2 = d.point().cost_x2(d.cost());
    summary << "k=" << k << " OPT=" << opt << " (c.x=" << lp2 / 2 << ", " << secs << " s)";
    if (k == 2) summary << ", ";
  }
  return c.result(summary.str());
}

struct TourTrials {
  int trials = 0;
  int bound_ok = 0;
  int shortcut_ok = 0;
  int y_ok = 0;
  double worst_ratio = 0;  // min(cH, cJ) / c.x
};

TourTrials run_tour_trials() {
  TourTrials t;
  auto record = [&](const HalfIntegerPoint& x, std::span<const Cost> cost) {
    TourOptions options;
    options.throw_on_violation = false;
    const TourReport r = run_tour(x, cost, options);
    ++t.trials;
    const Cost best = std::min(r.c_h, r.c_j);
    t.bound_ok += 14 * best <= 10 * r.c_x2;
    t.shortcut_ok += r.final_cost <= best;
    t.y_ok += 6 * r.t_join.cost <= r.c_y6;
    if (r.c_x2 > 0) t.worst_ratio = std::max(t.worst_ratio, 2.0 * static_cast<double>(best) / r.c_x2);
  };
  for (int k = 2; k <= 8; ++k) {
    const DonutInstance d = make_donut(k);
    record(d.point(), d.cost());
  }
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const HalfIntegerPoint x = random_square_point(1 + static_cast<int>(seed % 12), 1 + static_cast<int>(seed % 4),
                                                   1000 + seed);
    const std::vector<Cost> cost = random_costs(x.edge_count(), 100, 5000 + seed);
    record(x, cost);
  }
  return t;
}

Outcome ten_sevenths(const TourTrials& t) {
  Check c;
  c.expect(t.bound_ok == t.trials, std::to_string(t.trials - t.bound_ok) + " bound violations");
  c.expect(t.shortcut_ok == t.trials, std::to_string(t.trials - t.shortcut_ok) + " shortcut increases");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d trials within 10/7, shortcut monotone %d/%d, worst min/c.x = %.4f",
                t.bound_ok, t.trials, t.shortcut_ok, t.trials, t.worst_ratio);
  return c.result(buf);
}

Outcome ham_optimality() {
  Check c;
  int chorded = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SquareGraph sg = random_square_graph(1 + static_cast<int>(seed % 6), 20000 + seed);
    const std::vector<Cost> cost = random_costs(sg.graph().edge_count(), 100, 30000 + seed);
    bool has_chord = false;
    for (EdgeId e : sg.matching()) {
      const Edge& ed = sg.graph().edge(e);
      has_chord = has_chord || ed.u / 4 == ed.v / 4;
    }
    chorded += has_chord;
    const HamiltonianCycle h = ham_min_cost(sg, cost);
    c.expect(verify_ham(sg, h.edges), "seed " + std::to_string(seed) + " invalid cycle");
    c.expect(h.cost == brute_ham(sg, cost), "seed " + std::to_string(seed) + " not optimal");
  }
  c.expect(chorded > 0, "no chorded instances generated");
  return c.result("200/200 equal to enumeration (" + std::to_string(chorded) + " with chorded squares)");
}

Outcome kotzig_trails() {
  Check c;
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const BitransitionSystem sys = random_bitransition_system(1 + static_cast<int>(seed % 50), 40000 + seed);
    const bool valid = verify_trail(sys, find_trail(sys));
    c.expect(valid, "seed " + std::to_string(seed));
    ok += valid;
  }
  return c.result(std::to_string(ok) + "/200 trails verified");
}

Outcome rainbow_trees() {
  Check c;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const HalfIntegerPoint x = random_square_point(1 + static_cast<int>(seed % 6), 1 + static_cast<int>(seed % 3),
                                                   50000 + seed);
    const std::vector<Cost> cost = random_costs(x.edge_count(), 100, 60000 + seed);
    const RainbowOneTree f = rainbow_one_tree(x, cost);
    const std::string tag = "seed " + std::to_string(seed);
    c.expect(f.cost == brute_rainbow(x, cost), tag + " not optimal");
    c.expect(static_cast<int>(f.edges.size()) == x.n() && is_one_tree(x.support_graph(), f.edges, 0),
             tag + " not a 1-tree");
    std::vector<int> in(x.edge_count(), 0);
    for (int e : f.edges) in[e] = 1;
    for (int e = 0; e < x.edge_count(); ++e) {
      if (x.edges()[e].x2 == 2) c.expect(in[e] == 1, tag + " misses a 1-edge");
    }
    for (const auto& cls : decompose(x).pair_partition) c.expect(in[cls[0]] + in[cls[1]] == 1, tag + " not rainbow");
    c.expect(2 * f.cost <= x.cost_x2(cost), tag + " exceeds c.x");
  }
  return c.result("500/500 optimal, rainbow, 1-tree, c(F*) <= c.x");
}

Outcome t_joins() {
  Check c;
  std::mt19937_64 rng(70000);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 11;
    MultiGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v);
    const int extra = static_cast<int>(rng() % (18 - (n - 1) + 1));
    for (int i = 0; i < extra; ++i) g.add_edge(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    std::vector<Cost> w(g.edge_count());
    for (Cost& v : w) v = static_cast<Cost>(rng() % 50);
    const WeightedGraph wg(std::move(g), std::move(w));
    std::vector<NodeId> t;
    for (NodeId v = 0; v < n; ++v) {
      if (rng() % 2) t.push_back(v);
    }
    if (t.size() % 2) t.pop_back();
    const TJoin j = min_t_join(wg, t);
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(j.cost == brute_t_join(wg, t).cost, tag + " not optimal");
    c.expect(odd_nodes(wg.graph, j.edges) == t, tag + " parity");
  }
  return c.result("300/300 equal to enumeration, parity exact");
}

Outcome y_feasibility(const TourTrials& t) {
  Check c;
  c.expect(t.y_ok == t.trials, std::to_string(t.trials - t.y_ok) + " trials with c(T-join) > c.y");
  return c.result(std::to_string(t.y_ok) + "/" + std::to_string(t.trials) + " trials with min T-join <= c.y");
}

Outcome everywhere() {
  using H = std::ratio_add<std::ratio<3, 7>,
                           std::ratio_multiply<std::ratio<4, 7>, std::ratio_multiply<std::ratio<3, 2>, std::ratio<1, 2>>>>;
  using M = std::ratio_multiply<std::ratio<4, 7>, std::ratio<3, 2>>;
  static_assert(std::ratio_equal_v<H, std::ratio<6, 7>>);
  static_assert(std::ratio_equal_v<M, std::ratio<6, 7>>);
  Check c;
  c.expect(H::num * 7 == 6 * H::den && M::num * 7 == 6 * M::den, "6/7 arithmetic");
  std::mt19937_64 rng(80000);
  int cases = 0;
  const std::vector<std::pair<std::string, CubicWithCycle>> graphs = {
      {"K4", complete_graph_k4()}, {"prism", prism_graph()}, {"K3,3", bipartite_k33()}};
  for (const auto& [name, g] : graphs) {
    c.expect(validate_subtour(everywhere_instance(g.graph, g.cycle)).ok, name + " point invalid");
    for (int trial = 0; trial < 21; ++trial) {
      std::vector<Cost> f(g.graph.node_count(), 1);
      if (trial > 0) {
        for (Cost& v : f) v = static_cast<Cost>(rng() % 100);
      }
      Cost sum = 0;
      for (Cost v : f) sum += v;
      const Cost opt = held_karp(node_weight_costs(f));
      c.expect(7 * opt <= 9 * 2 * sum, name + " OPT above 9/7 LP");
      ++cases;
    }
  }
  return c.result("6/7 arithmetic exact; OPT <= (9/7) 2 sum f on " + std::to_string(cases) + " node weightings");
}

Outcome delta_matroid_axiom() {
  Check c;
  int graphs = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const SquareGraph sg = random_square_graph(1 + static_cast<int>(seed % 4), 90000 + seed);
    c.expect(satisfies_symmetric_exchange(square_family(sg)), "seed " + std::to_string(seed));
    ++graphs;
  }
  return c.result("symmetric exchange holds on " + std::to_string(graphs) + " square graphs");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  TourTrials tour_trials;
  double tour_secs = 0;
  const std::vector<Criterion> criteria = {
      {1, "donut arithmetic", 1.0, donut_arithmetic},
      {2, "donut OPT", 600.0, donut_opt},
      {3, "10/7 bound", 60.0,
       [&] {
         const auto start = std::chrono::steady_clock::now();
         tour_trials = run_tour_trials();
         tour_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         return ten_sevenths(tour_trials);
       }},
      {4, "HAM optimality", 10.0, ham_optimality},
      {5, "Kotzig trails", 10.0, kotzig_trails},
      {6, "rainbow 1-tree", 10.0, rainbow_trees},
      {7, "T-join exactness", 10.0, t_joins},
      {8, "y-vector feasibility", 60.0, [&] { return y_feasibility(tour_trials); }},
      {9, "everywhere vector", 60.0, everywhere},
      {10, "delta-matroid axiom", 5.0, delta_matroid_axiom},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.id == 8) secs += tour_secs;  // shares the trials of criterion 3
    if (secs > cr.limit_s) {
      out.ok = false;
      out.detail += "; exceeded time limit";
    }
    failed += !out.ok;
    std::printf("[%s] %2d %-22s %s (%.2f s, limit %.0f s)\n", out.ok ? "PASS" : "FAIL", cr.id, cr.name,
                out.detail.c_str(), secs, cr.limit_s);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
