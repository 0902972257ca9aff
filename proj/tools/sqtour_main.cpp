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

// Command-line driver for the square-point tour pipeline.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "sqtour/error.hpp"
#include "sqtour/halfpoint.hpp"
#include "sqtour/instances.hpp"
#include "sqtour/kotzig.hpp"
#include "sqtour/oracles.hpp"
#include "sqtour/tour.hpp"

namespace {

using namespace sqtour;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitSizeCap = 3;

template <typename Parser>
auto read_input(const std::string& path, Parser parse) {
  if (path == "-") return parse(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return parse(in);
}

Instance read_point(const std::string& path) { return read_input(path, parse_point); }

// Writes to the file, or stdout when the path is empty.
void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  write(out);
}

std::string join_nodes(const std::vector<NodeId>& order) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < order.size(); ++i) ss << (i ? " " : "") << order[i];
  return ss.str();
}

// Prints the witness and returns false when x is not in the subtour polytope.
bool check_point(const HalfIntegerPoint& x) {
  const SubtourReport report = validate_subtour(x);
  if (report.ok) return true;
  std::cout << "INVALID " << report.describe() << '\n';
  return false;
}

int cmd_validate(const std::string& path) {
  const Instance inst = read_point(path);
  if (!check_point(inst.point)) return kExitInvalid;
  std::cout << point_class_name(classify(inst.point)) << '\n';
  return kExitOk;
}

int cmd_ham(const std::string& path) {
  const Instance inst = read_point(path);
  if (!check_point(inst.point)) return kExitInvalid;
  const SupportCycle h = hamiltonian_with_ones(inst.point, inst.cost);
  std::cout << "cost=" << h.cost << '\n' << "order=" << join_nodes(h.order) << '\n';
  return kExitOk;
}

int cmd_tour(const std::string& path) {
  const Instance inst = read_point(path);
  if (!check_point(inst.point)) return kExitInvalid;
  TourOptions options;
  options.throw_on_violation = false;
  const TourReport r = run_tour(inst.point, inst.cost, options);
  const bool ok = r.bound_holds && r.y_bound_holds;
  std::cout << "cx=" << r.c_x2 << "/2 cH=" << r.c_h << " cJ=" << r.c_j << " tour=" << r.final_cost
            << " bound=" << (ok ? "OK" : "FAIL") << '\n';
  return ok ? kExitOk : kExitInvariant;
}

int cmd_kotzig(const std::string& path) {
  const BitransitionSystem sys = read_input(path, parse_bts);
  const Trail t = find_trail(sys);
  if (!verify_trail(sys, t)) throw InvariantViolation("trail failed verification");
  for (std::size_t i = 0; i < t.darts.size(); ++i) {
    std::cout << (i ? " " : "") << t.darts[i].edge << '.' << t.darts[i].end;
  }
  std::cout << '\n';
  return kExitOk;
}

int cmd_oracle_opt(const std::string& path) {
  const Instance inst = read_point(path);
  if (inst.point.n() > kHeldKarpCap) throw SizeCapExceeded("instance too large for exact oracle");
  const DistanceMatrix d = metric_closure(inst.point.weighted_support(inst.cost));
  std::cout << "OPT=" << held_karp(d) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tours for square points of the subtour polytope"};
  app.require_subcommand(1);

  std::string file;
  std::string out;
  int k = 0;
  int squares = 0;
  int max_path = 0;
  int nodes = 0;
  std::uint64_t seed = 0;
  Cost max_cost = 100;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check subtour constraints and classify a point");
  validate->add_option("file", file, "Point file, or - for stdin")->required();
  validate->callback([&] { action = [&] { return cmd_validate(file); }; });

  auto* ham = app.add_subcommand("ham", "Cheapest Hamiltonian cycle containing all 1-edges");
  ham->add_option("file", file, "Point file, or - for stdin")->required();
  ham->callback([&] { action = [&] { return cmd_ham(file); }; });

  auto* tour = app.add_subcommand("tour", "Run the tour algorithm and check its bound");
  tour->add_option("file", file, "Point file, or - for stdin")->required();
  tour->callback([&] { action = [&] { return cmd_tour(file); }; });

  auto* kotzig = app.add_subcommand("kotzig", "Eulerian trail avoiding forbidden bitransitions");
  kotzig->add_option("file", file, "Bitransition system file, or - for stdin")->required();
  kotzig->callback([&] { action = [&] { return cmd_kotzig(file); }; });

  auto* donut = app.add_subcommand("donut", "Write a k-donut instance");
  donut->add_option("--k", k, "Number of squares (>= 2)")->required();
  donut->add_option("--out", out, "Output file (default stdout)");
  donut->callback([&] {
    action = [&] {
      const DonutInstance d = make_donut(k);
      emit(out, [&](std::ostream& os) { write_point(os, d.instance); });
      return kExitOk;
    };
  });

  auto* random_square = app.add_subcommand("random-square", "Write a random square point with random costs");
  random_square->add_option("--squares", squares, "Number of squares")->required();
  random_square->add_option("--max-path", max_path, "Maximum 1-path length")->required();
  random_square->add_option("--seed", seed, "Random seed")->required();
  random_square->add_option("--max-cost", max_cost, "Costs are drawn from [0, max-cost]");
  random_square->add_option("--out", out, "Output file (default stdout)");
  random_square->callback([&] {
    action = [&] {
      HalfIntegerPoint x = random_square_point(squares, max_path, seed);
      std::vector<Cost> c = random_costs(x.edge_count(), max_cost, seed ^ 0x9e3779b97f4a7c15ULL);
      const Instance inst{std::move(x), std::move(c)};
      emit(out, [&](std::ostream& os) { write_point(os, inst); });
      return kExitOk;
    };
  });

  auto* random_bts = app.add_subcommand("random-bts", "Write a random 4-regular bitransition system");
  random_bts->add_option("--nodes", nodes, "Number of nodes")->required();
  random_bts->add_option("--seed", seed, "Random seed")->required();
  random_bts->add_option("--out", out, "Output file (default stdout)");
  random_bts->callback([&] {
    action = [&] {
      const BitransitionSystem sys = random_bitransition_system(nodes, seed);
      emit(out, [&](std::ostream& os) { write_bts(os, sys); });
      return kExitOk;
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Exact reference computations");
  oracle->require_subcommand(1);
  auto* opt = oracle->add_subcommand("opt", "Exact TSP optimum on the metric closure of the support");
  opt->add_option("file", file, "Point file, or - for stdin")->required();
  opt->callback([&] { action = [&] { return cmd_oracle_opt(file); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    return action();
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
}
