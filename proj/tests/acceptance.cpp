// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rctw/certificates.hpp"
#include "rctw/cli.hpp"
#include "rctw/generator.hpp"
#include "rctw/hybrid.hpp"
#include "rctw/io.hpp"
#include "rctw/modulator.hpp"
#include "rctw/oracles.hpp"
#include "rctw/torso.hpp"
#include "rctw/validate.hpp"
#include "rctw/width.hpp"
#include "support.hpp"

using namespace rctw;
using namespace rctw::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kCrosscheckSeconds = 600;
constexpr double kModulatorSeconds = 600;
constexpr double kSolveSeconds = 60;
constexpr int kCrosscheckTrials = 100;  // per value of c
constexpr int kCrosscheckNMax = 9;
constexpr int kModulatorTrials = 200;
constexpr int kGeneratorInstances = 50;
constexpr int kLargeGraphs = 40;  // extra graphs on 10..12 vertices

int failed = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ' ' << name << ": " << detail << std::endl;
  if (!ok) ++failed;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  bool operator==(const Run& o) const { return code == o.code && out == o.out && err == o.err; }
};

Run run(const std::vector<std::string>& args) {
  Run r;
  std::ostringstream out, err;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / "rctw-acceptance") {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_graph(const std::string& name, const Graph& g) const {
    std::ofstream f(path(name));
    write_dimacs(f, g);
    return path(name);
  }

  std::string read(const std::string& name) const {
    std::ifstream f(path(name), std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }

 private:
  fs::path dir_;
};

// A decomposition together with the graph it decomposes.
struct Decomposed {
  Graph graph;
  NiceHTreeDecomposition d;
};

std::vector<Decomposed> produced;  // every decomposition built by criteria 1 and 2

void criterion_hybrid() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int c : {1, 2}) {
    const std::string seed = std::to_string(100 + c);
    const auto r = run({"crosscheck", "--n-max", std::to_string(kCrosscheckNMax), "--trials",
                        std::to_string(kCrosscheckTrials), "--c", std::to_string(c), "--seed", seed});
    const auto summary = r.out.substr(r.out.rfind("passed"));
    ok = ok && r.code == kExitOk && summary == "passed " + std::to_string(kCrosscheckTrials) + "/" +
                                                 std::to_string(kCrosscheckTrials) + "\n";
    detail += "c=" + std::to_string(c) + " " + summary.substr(0, summary.size() - 1) + ", ";
    for (const auto& cg : crosscheck_graphs(kCrosscheckNMax, kCrosscheckTrials, 100 + c))
      produced.push_back({cg.graph, nicify(cg.graph, *find_rc_torso(cg.graph, c))});
  }
  const double secs = seconds_since(start);
  ok = ok && secs < kCrosscheckSeconds;
  report(1, "hybrid solvers match the oracles", ok,
         detail + fixed(secs) + " s (limit " + fixed(kCrosscheckSeconds) + " s)");
}

void criterion_modulator() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  int agree = 0;
  for (int trial = 0; trial < kModulatorTrials; ++trial) {
    const auto inst = random_modulator_instance(rng);
    const auto pre = precoloring_extension(inst.g, inst.x, inst.precolor, inst.rd, inst.c);
    const auto cover = disjoint_paths_cover(inst.g, inst.x, inst.pairs, inst.rd, inst.c);
    const auto cut = maxcut_extension(inst.g, inst.x, inst.s, inst.rd, inst.c);
    bool ok = pre.colors == oracle::precoloring_extension(inst.g, inst.x, inst.precolor) &&
              check_coloring(inst.g, pre.coloring) == pre.colors;
    ok = ok && cover.feasible == oracle::disjoint_paths_cover(inst.g, inst.x, inst.pairs) &&
         (!cover.feasible || check_path_cover(inst.g, inst.x, inst.pairs, cover.paths));
    ok = ok && cut.value == oracle::maxcut_extension(inst.g, inst.x, inst.s) &&
         cut_size(inst.g, cut.side) == cut.value && (cut.side & inst.x) == inst.s;
    if (ok) ++agree;
    // G - X has rank-width <= c, so V \ X is an R_c-modulator with torso on X.
    produced.push_back({inst.g, nicify(inst.g, make_torso_result(inst.g, inst.g.vertex_set() - inst.x, inst.c))});
  }
  const double secs = seconds_since(start);
  report(2, "modulator solvers match the oracles", agree == kModulatorTrials && secs < kModulatorSeconds,
         std::to_string(agree) + "/" + std::to_string(kModulatorTrials) + " instances, " + fixed(secs) +
             " s (limit " + fixed(kModulatorSeconds) + " s)");
}

GeneratorParams generator_params(int i) {
  GeneratorParams p;
  p.skeleton_tw = 1 + i % 3;
  p.skeleton_size = p.skeleton_tw + 3 + i % 5;
  p.component_rw = 1 + i % 2;
  p.components = 1 + i % 4;
  p.component_size_min = 2;
  p.component_size = 3 + i % 4;
  p.seed = 1000 + i;
  return p;
}

void criterion_assembly() {
  int checked = 0;
  int bad = 0;
  auto check = [&](const Graph& g, const NiceHTreeDecomposition& d) {
    ++checked;
    const auto rd = assemble_rank_decomposition(g, d);
    const auto v = validate_rank_decomposition(g, rd);
    if (!v.violations.empty() || v.width > d.c + d.width + 1) ++bad;
  };
  for (const auto& p : produced) check(p.graph, p.d);
  for (int i = 0; i < kGeneratorInstances; ++i) {
    const auto params = generator_params(i);
    const auto inst = generate_instance(params);
    const auto d = planted_decomposition(inst, params.component_rw);
    if (!validate_nice_h_decomposition(inst.graph, d, true).empty()) ++bad;
    check(inst.graph, d);
  }
  report(3, "assembled rank decompositions within c + width + 1", bad == 0 && checked > 0,
         std::to_string(checked) + " decompositions, " + std::to_string(bad) + " violations");
}

void criterion_ordering() {
  int checked = 0;
  int bad = 0;
  auto check = [&](const Graph& g, int c) {
    ++checked;
    const auto tr = find_rc_torso(g, c);
    if (tr->achieved_width > exact_treewidth(g).width) ++bad;
    if (exact_rankwidth(g).width > c + tr->achieved_width + 1) ++bad;
  };
  for (int c : {1, 2})
    for (const auto& cg : crosscheck_graphs(kCrosscheckNMax, kCrosscheckTrials, 100 + c)) check(cg.graph, c);
  std::mt19937_64 rng(77);
  for (int i = 0; i < kLargeGraphs; ++i) {
    const int n = uniform(rng, 10, 12);
    const double p = std::vector<double>{0.2, 0.5, 0.8}[uniform(rng, 0, 2)];
    check(random_graph(rng, n, p), 1 + i % 2);
  }
  report(4, "torso width <= treewidth and rank-width <= c + torso width + 1", bad == 0,
         std::to_string(checked) + " graphs, " + std::to_string(bad) + " violations");
}

// The width-2 decomposition of C5 on a..e = 0..4 with {d,e} and {c,b} below a
// central node.
RankDecomposition c5_by_hand() {
  RankDecomposition rd;
  rd.nodes.resize(9);
  rd.nodes[0].children = {1, 2};
  rd.nodes[1].vertex = 0;
  rd.nodes[2].children = {3, 4};
  rd.nodes[3].children = {5, 6};
  rd.nodes[4].children = {7, 8};
  rd.nodes[5].vertex = 3;
  rd.nodes[6].vertex = 4;
  rd.nodes[7].vertex = 2;
  rd.nodes[8].vertex = 1;
  rd.width = 2;
  return rd;
}

void criterion_c5() {
  const auto c5 = cycle(5);
  const auto exact = exact_rankwidth(c5);
  const auto witness = validate_rank_decomposition(c5, exact.rd);
  const auto by_hand = validate_rank_decomposition(c5, c5_by_hand());
  VertexSet de(5);
  de.insert(3);
  de.insert(4);
  const int rho = cut_rank(c5, de);
  const bool ok = exact.width == 2 && witness.violations.empty() && witness.width == 2 &&
                  by_hand.violations.empty() && by_hand.width == 2 && rho == 2;
  report(5, "C5 rank-width and cut-rank", ok,
         "rw=" + std::to_string(exact.width) + ", witness width " + std::to_string(witness.width) +
             ", hand-built width " + std::to_string(by_hand.width) + ", cut-rank({d,e})=" + std::to_string(rho));
}

void criterion_scaling() {
  Scratch s;
  const auto graph = s.path("large.gr");
  const auto doc = s.path("large.json");
  const auto gen = run({"gen", "--skeleton-tw", "3", "--skeleton-size", "6", "--component-rw", "1", "--components",
                        "8", "--component-size-min", "6", "--component-size", "8", "--seed", "7", "--out", graph,
                        "--decomp-out", doc});
  const int n = read_dimacs_file(graph).num_vertices();
  bool ok = gen.code == kExitOk && n >= 50 && n <= 70;
  std::string detail = std::to_string(n) + " vertices, " + gen.out.substr(gen.out.rfind("width"));
  detail.pop_back();

  // Torso search is exhaustive over modulators, so it declines this size.
  const auto dec = run({"decompose", "--graph", graph, "--c", "1", "--out", s.path("unused.json")});
  ok = ok && dec.code == kExitResource;
  detail += "; decompose skipped (exit " + std::to_string(dec.code) + ")";

  for (const std::string problem : {"chromatic", "hamcycle", "maxcut"}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run({"solve", problem, "--graph", graph, "--decomp", doc, "--witness"});
    const double secs = seconds_since(start);
    ok = ok && r.code == kExitOk && secs < kSolveSeconds;
    detail += "; " + problem + " " + r.out.substr(0, r.out.find('\n')) + " in " + fixed(secs) + " s";
    const auto o = run({"oracle", problem, "--graph", graph});
    ok = ok && o.code == kExitResource;
    detail += ", oracle exit " + std::to_string(o.code);
  }
  report(6, "solving a 60-vertex instance from its planted decomposition", ok,
         detail + " (limit " + fixed(kSolveSeconds) + " s each)");
}

int first_of(const NiceHTreeDecomposition& d, NodeKind kind, const std::function<bool(const NiceNode&)>& extra = {}) {
  for (int t = 0; t < d.num_nodes(); ++t)
    if (d.nodes[t].kind == kind && (!extra || extra(d.nodes[t]))) return t;
  return -1;
}

int parent_of(const NiceHTreeDecomposition& d, int t) {
  for (int p = 0; p < d.num_nodes(); ++p)
    for (int ch : d.nodes[p].children)
      if (ch == t) return p;
  return -1;
}

// A generated instance whose decomposition has every node kind, a join with a
// nonempty bag and a component of positive rank-width.
Decomposed mutation_base(std::uint64_t& seed) {
  while (true) {
    GeneratorParams p;
    p.skeleton_tw = 2;
    p.skeleton_size = 7;
    p.components = 2;
    p.component_size_min = 3;
    p.component_size = 4;
    p.seed = seed++;
    const auto inst = generate_instance(p);
    Decomposed base{inst.graph, planted_decomposition(inst, 1)};
    const auto& d = base.d;
    const bool kinds = first_of(d, NodeKind::Join, [](const NiceNode& n) { return !n.bag.empty(); }) >= 0 &&
                       first_of(d, NodeKind::Introduce) >= 0 && first_of(d, NodeKind::Forget) >= 0 &&
                       first_of(d, NodeKind::SimpleLeaf) >= 0 &&
                       first_of(d, NodeKind::BoundaryLeaf, [](const NiceNode& n) { return n.component == 0; }) > 0 &&
                       d.components[0].rd.width >= 1;
    if (kinds && validate_nice_h_decomposition(base.graph, d, true).empty()) return base;
  }
}

struct Mutation {
  std::string name;
  ViolationKind expected;
  std::function<void(const Graph&, NiceHTreeDecomposition&)> apply;
};

std::vector<Mutation> mutations() {
  auto nonempty_join = [](const NiceNode& n) { return !n.bag.empty(); };
  auto component0 = [](const NiceNode& n) { return n.component == 0; };
  return {
      {"join with a third child", ViolationKind::TooManyChildren,
       [=](const Graph&, NiceHTreeDecomposition& d) {
         const int t = first_of(d, NodeKind::Join, nonempty_join);
         NiceNode leaf;
         leaf.bag = {d.nodes[t].bag.front()};
         d.nodes.push_back(leaf);
         d.nodes[t].children.push_back(d.num_nodes() - 1);
       }},
      {"join over a child with a smaller bag", ViolationKind::JoinBagMismatch,
       [=](const Graph&, NiceHTreeDecomposition& d) {
         const int t = first_of(d, NodeKind::Join, nonempty_join);
         const int child = d.nodes[t].children[0];
         NiceNode forget;
         forget.kind = NodeKind::Forget;
         forget.vertex = d.nodes[child].bag.front();
         forget.bag.assign(d.nodes[child].bag.begin() + 1, d.nodes[child].bag.end());
         forget.children = {child};
         d.nodes.push_back(forget);
         d.nodes[t].children[0] = d.num_nodes() - 1;
       }},
      {"introduce that adds nothing", ViolationKind::IntroduceForgetMismatch,
       [](const Graph&, NiceHTreeDecomposition& d) {
         const int t = first_of(d, NodeKind::Introduce);
         d.nodes[t].bag = d.nodes[d.nodes[t].children[0]].bag;
       }},
      {"forget that removes nothing", ViolationKind::IntroduceForgetMismatch,
       [](const Graph&, NiceHTreeDecomposition& d) {
         const int t = first_of(d, NodeKind::Forget);
         d.nodes[t].bag = d.nodes[d.nodes[t].children[0]].bag;
       }},
      {"simple leaf with two vertices", ViolationKind::InvalidLeaf,
       [](const Graph& g, NiceHTreeDecomposition& d) {
         auto& bag = d.nodes[first_of(d, NodeKind::SimpleLeaf)].bag;
         for (Vertex v = 0; v < g.num_vertices(); ++v)
           if (!d.modulator.contains(v) && v != bag.front()) {
             bag.push_back(v);
             break;
           }
         std::sort(bag.begin(), bag.end());
       }},
      {"leaf labelled introduce", ViolationKind::InvalidLeaf,
       [](const Graph&, NiceHTreeDecomposition& d) {
         auto& leaf = d.nodes[first_of(d, NodeKind::SimpleLeaf)];
         leaf.kind = NodeKind::Introduce;
         leaf.vertex = leaf.bag.front();
       }},
      {"leaf labelled join", ViolationKind::InvalidLeaf,
       [](const Graph&, NiceHTreeDecomposition& d) { d.nodes[first_of(d, NodeKind::SimpleLeaf)].kind = NodeKind::Join; }},
      {"boundary leaf missing a neighbor", ViolationKind::BoundaryLeafMismatch,
       [=](const Graph&, NiceHTreeDecomposition& d) {
         auto& bag = d.nodes[first_of(d, NodeKind::BoundaryLeaf, component0)].bag;
         bag.erase(bag.begin());
       }},
      {"boundary leaf naming an unknown component", ViolationKind::BoundaryLeafMismatch,
       [=](const Graph&, NiceHTreeDecomposition& d) {
         d.nodes[first_of(d, NodeKind::BoundaryLeaf, component0)].component = static_cast<int>(d.components.size());
       }},
      {"component with two boundary leaves", ViolationKind::BoundaryLeafMismatch,
       [=](const Graph&, NiceHTreeDecomposition& d) {
         const int leaf = first_of(d, NodeKind::BoundaryLeaf, component0);
         const int parent = parent_of(d, leaf);
         const NiceNode copy = d.nodes[leaf];
         d.nodes.push_back(copy);
         NiceNode join;
         join.kind = NodeKind::Join;
         join.bag = copy.bag;
         join.children = {leaf, d.num_nodes() - 1};
         d.nodes.push_back(join);
         for (int& ch : d.nodes[parent].children)
           if (ch == leaf) ch = d.num_nodes() - 1;
       }},
      {"component without a boundary leaf", ViolationKind::BoundaryLeafMismatch,
       [=](const Graph&, NiceHTreeDecomposition& d) {
         auto& leaf = d.nodes[first_of(d, NodeKind::BoundaryLeaf, component0)];
         leaf.kind = NodeKind::SimpleLeaf;
         leaf.component = -1;
       }},
      {"declared width too large", ViolationKind::DeclaredWidthMismatch,
       [](const Graph&, NiceHTreeDecomposition& d) { d.width += 1; }},
      {"declared width too small", ViolationKind::DeclaredWidthMismatch,
       [](const Graph&, NiceHTreeDecomposition& d) { d.width = d.width > 0 ? d.width - 1 : d.width + 2; }},
      {"budget below the component rank-width", ViolationKind::RankWidthBudgetExceeded,
       [](const Graph&, NiceHTreeDecomposition& d) { d.c = d.components[0].rd.width - 1; }},
      {"component declaring rank-width above the budget", ViolationKind::RankWidthBudgetExceeded,
       [](const Graph&, NiceHTreeDecomposition& d) { d.components[0].rd.width = d.c + 1; }},
  };
}

void criterion_validator() {
  std::uint64_t seed = 1;
  std::vector<Decomposed> bases;
  bases.push_back(mutation_base(seed));
  bases.push_back(mutation_base(seed));
  int total = 0;
  int caught = 0;
  std::string missed;
  for (const auto& base : bases) {
    for (const auto& m : mutations()) {
      ++total;
      auto d = base.d;
      m.apply(base.graph, d);
      if (has_violation(validate_nice_h_decomposition(base.graph, d, true), m.expected))
        ++caught;
      else
        missed += "; missed: " + m.name;
    }
  }
  report(7, "validator rejects mutated decompositions", caught == total && total == 30,
         std::to_string(caught) + "/" + std::to_string(total) + " rejected with the expected violation" + missed);
}

void criterion_determinism() {
  Scratch s;
  const auto petersen_path = s.write_graph("petersen.gr", petersen());
  const auto small = s.write_graph("small.gr", grid(2, 4));
  const std::vector<std::vector<std::string>> commands = {
      {"gen", "--skeleton-tw", "2", "--component-rw", "1", "--components", "3", "--component-size", "5", "--seed", "9"},
      {"gen", "--skeleton-tw", "2", "--component-rw", "2", "--components", "2", "--component-size", "6", "--seed", "4",
       "--out", s.path("gen.gr"), "--decomp-out", s.path("gen.json")},
      {"decompose", "--graph", petersen_path, "--c", "1", "--out", s.path("petersen.json")},
      {"decompose", "--graph", small, "--c", "1", "--k-max", "0", "--out", s.path("small.json")},
      {"solve", "chromatic", "--graph", s.path("gen.gr"), "--decomp", s.path("gen.json"), "--witness"},
      {"solve", "hamcycle", "--graph", petersen_path, "--decomp", s.path("petersen.json"), "--witness"},
      {"solve", "maxcut", "--graph", s.path("gen.gr"), "--decomp", s.path("gen.json"), "--witness"},
      {"oracle", "chromatic", "--graph", petersen_path},
      {"oracle", "hamcycle", "--graph", small},
      {"oracle", "maxcut", "--graph", petersen_path},
      {"crosscheck", "--n-max", "7", "--trials", "15", "--c", "1", "--seed", "3"},
      {"validate", "--graph", s.path("gen.gr"), "--decomp", s.path("gen.json")},
  };
  const std::vector<std::string> files = {"gen.gr", "gen.json", "petersen.json", "small.json"};
  auto snapshot = [&]() {
    std::vector<Run> runs;
    for (const auto& cmd : commands) runs.push_back(run(cmd));
    std::vector<std::string> contents;
    for (const auto& f : files) contents.push_back(s.read(f));
    return std::make_pair(runs, contents);
  };
  const auto first = snapshot();
  for (const auto& f : files) fs::remove(s.path(f));
  const auto second = snapshot();
  int identical = 0;
  bool all_ok = true;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (first.first[i] == second.first[i]) ++identical;
    all_ok = all_ok && (first.first[i].code == kExitOk || commands[i][0] == "decompose");
  }
  const bool files_same = first.second == second.second;
  report(8, "repeated CLI runs are byte-identical",
         identical == static_cast<int>(commands.size()) && files_same && all_ok,
         std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands, output files " +
             (files_same ? "identical" : "differ"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {criterion_hybrid,   criterion_modulator, criterion_assembly,
                                                       criterion_ordering, criterion_c5,        criterion_scaling,
                                                       criterion_validator, criterion_determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i) + 1, "criterion", false, std::string("exception: ") + e.what());
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
