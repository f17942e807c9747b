#include "rctw/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rctw/certificates.hpp"
#include "rctw/errors.hpp"
#include "rctw/generator.hpp"
#include "rctw/hybrid.hpp"
#include "rctw/io.hpp"
#include "rctw/oracles.hpp"
#include "rctw/torso.hpp"
#include "rctw/validate.hpp"

namespace rctw {

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw std::runtime_error("cannot write '" + path + "'");
}

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += " " + std::to_string(v + 1);
  return s;
}

// Loads graph and document and checks that they belong together.
struct Loaded {
  Graph graph;
  NiceHTreeDecomposition decomposition;
};

std::optional<Loaded> load_checked(const std::string& graph_path, const std::string& decomp_path, bool check_rw,
                                   std::ostream& err, int& code) {
  Loaded l;
  l.graph = read_dimacs_file(graph_path);
  auto doc = read_document_file(decomp_path);
  require_fingerprint(l.graph, doc);
  l.decomposition = std::move(doc.decomposition);
  const auto vs = validate_nice_h_decomposition(l.graph, l.decomposition, check_rw);
  if (!vs.empty()) {
    err << "invalid decomposition:\n" << describe(vs);
    code = kExitInvalid;
    return std::nullopt;
  }
  return l;
}

std::string solve_line(const std::string& problem, const Graph& g, const NiceHTreeDecomposition& d, bool witness) {
  std::ostringstream out;
  if (problem == "chromatic") {
    const auto sol = solve_chromatic(g, d);
    if (check_coloring(g, sol.coloring) != sol.colors) throw InternalError("coloring failed its certificate check");
    out << sol.colors << '\n';
    if (witness) {
      out << "coloring";
      for (int col : sol.coloring) out << ' ' << col + 1;
      out << '\n';
    }
  } else if (problem == "hamcycle") {
    const auto sol = solve_hamiltonian(g, d);
    if (sol.exists && !check_hamiltonian_cycle(g, sol.cycle)) throw InternalError("cycle failed its certificate check");
    out << (sol.exists ? "true" : "false") << '\n';
    if (witness && sol.exists) out << "cycle" << join_vertices(sol.cycle) << '\n';
  } else {
    const auto sol = solve_maxcut(g, d);
    if (cut_size(g, sol.side) != sol.value) throw InternalError("partition failed its certificate check");
    out << sol.value << '\n';
    if (witness) out << "side" << join_vertices(sol.side.to_vector()) << '\n';
  }
  return out.str();
}

std::string oracle_line(const std::string& problem, const Graph& g) {
  if (problem == "chromatic") return std::to_string(oracle::chromatic_number(g)) + "\n";
  if (problem == "hamcycle") return oracle::hamiltonian_cycle(g) ? "true\n" : "false\n";
  return std::to_string(oracle::max_cut(g)) + "\n";
}

struct CrosscheckOptions {
  int n_max = 6;
  int trials = 10;
  int c = 1;
  std::uint64_t seed = 1;
  bool inject_fault = false;
};

int crosscheck(const CrosscheckOptions& o, std::ostream& out) {
  if (o.n_max < 1 || o.n_max > 16) throw InputError("--n-max must lie in 1..16");
  if (o.trials < 0) throw InputError("--trials must be nonnegative");
  if (o.c < 0 || o.c > 3) throw InputError("--c must lie in 0..3");
  const auto graphs = crosscheck_graphs(o.n_max, o.trials, o.seed);
  int failures = 0;
  out << "trial n m p width chromatic hamcycle maxcut result\n";
  for (int t = 0; t < o.trials; ++t) {
    const Graph& g = graphs[t].graph;
    const int n = g.num_vertices();
    const auto d = nicify(g, *find_rc_torso(g, o.c));
    bool ok = validate_nice_h_decomposition(g, d, true).empty();
    const int chi = solve_chromatic(g, d).colors + (o.inject_fault ? 1 : 0);
    const bool ham = solve_hamiltonian(g, d).exists;
    const int cut = solve_maxcut(g, d).value;
    const int chi_ref = oracle::chromatic_number(g);
    const bool ham_ref = oracle::hamiltonian_cycle(g);
    const int cut_ref = oracle::max_cut(g);
    ok = ok && chi == chi_ref && ham == ham_ref && cut == cut_ref;
    out << t << ' ' << n << ' ' << g.num_edges() << ' ' << graphs[t].p << ' ' << d.width << ' ' << chi << '/'
        << chi_ref << ' ' << (ham ? "true" : "false") << '/' << (ham_ref ? "true" : "false") << ' ' << cut << '/' << cut_ref << ' '
        << (ok ? "pass" : "FAIL") << '\n';
    if (!ok) {
      ++failures;
      out << "c failing instance of trial " << t << '\n';
      write_dimacs(out, g);
    }
  }
  out << "passed " << o.trials - failures << '/' << o.trials << '\n';
  return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

std::vector<CrosscheckGraph> crosscheck_graphs(int n_max, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double densities[] = {0.2, 0.5, 0.8};
  std::vector<CrosscheckGraph> out;
  for (int t = 0; t < trials; ++t) {
    const int n = std::uniform_int_distribution<int>(std::min(4, n_max), n_max)(rng);
    const double p = densities[std::uniform_int_distribution<int>(0, 2)(rng)];
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (edge(rng)) g.add_edge(a, b);
    out.push_back({std::move(g), p});
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid treewidth / rank-width decompositions and solvers", "rctw"};
  app.require_subcommand(1);

  std::string graph_path, decomp_path, out_path, decomp_out;
  int c = 1;
  std::optional<int> k_max;
  std::string problem;
  bool witness = false;
  bool skip_rw = false;
  GeneratorParams gen;
  CrosscheckOptions cross;

  auto* decompose = app.add_subcommand("decompose", "Search for a minimum-width R_c-torso and write it");
  decompose->add_option("--graph", graph_path, "DIMACS graph file")->required();
  decompose->add_option("--c", c, "Rank-width budget of the modulator components")->required();
  decompose->add_option("--k-max", k_max, "Stop at the first torso of at most this width");
  decompose->add_option("--out", out_path, "Decomposition output file")->required();

  const std::vector<std::string> problems{"chromatic", "hamcycle", "maxcut"};
  auto* solve = app.add_subcommand("solve", "Solve a problem over a decomposition");
  solve->add_option("problem", problem, "chromatic, hamcycle or maxcut")->required()->check(CLI::IsMember(problems));
  solve->add_option("--graph", graph_path, "DIMACS graph file")->required();
  solve->add_option("--decomp", decomp_path, "Decomposition file")->required();
  solve->add_flag("--witness", witness, "Also print a checked certificate");

  auto* oracle_cmd = app.add_subcommand("oracle", "Solve a problem by brute force");
  oracle_cmd->add_option("problem", problem, "chromatic, hamcycle or maxcut")->required()->check(CLI::IsMember(problems));
  oracle_cmd->add_option("--graph", graph_path, "DIMACS graph file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a skeleton-plus-components instance");
  gen_cmd->add_option("--skeleton-tw", gen.skeleton_tw, "Treewidth of the partial k-tree skeleton")->required();
  gen_cmd->add_option("--skeleton-size", gen.skeleton_size, "Skeleton vertex count")->capture_default_str();
  gen_cmd->add_option("--component-rw", gen.component_rw, "Rank-width bound of each component")->required();
  gen_cmd->add_option("--components", gen.components, "Number of components")->required();
  gen_cmd->add_option("--component-size", gen.component_size, "Largest component size")->required();
  gen_cmd->add_option("--component-size-min", gen.component_size_min, "Smallest component size");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--out", out_path, "DIMACS output file (default: standard output)");
  gen_cmd->add_option("--decomp-out", decomp_out, "Also write the planted decomposition here");

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare solvers against the oracles on random graphs");
  cross_cmd->add_option("--n-max", cross.n_max, "Largest vertex count")->required();
  cross_cmd->add_option("--trials", cross.trials, "Number of random graphs")->required();
  cross_cmd->add_option("--c", cross.c, "Rank-width budget")->required();
  cross_cmd->add_option("--seed", cross.seed, "Random seed")->required();
  cross_cmd->add_flag("--inject-fault", cross.inject_fault)->group("");

  auto* validate_cmd = app.add_subcommand("validate", "Check a decomposition against a graph");
  validate_cmd->add_option("--graph", graph_path, "DIMACS graph file")->required();
  validate_cmd->add_option("--decomp", decomp_path, "Decomposition file")->required();
  validate_cmd->add_flag("--skip-rank-check", skip_rw, "Do not recompute component rank-widths");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (decompose->parsed()) {
      const Graph g = read_dimacs_file(graph_path);
      const auto tr = find_rc_torso(g, c, k_max);
      if (!tr) {
        err << "no R_" << c << "-torso of width at most " << *k_max << '\n';
        return kExitInfeasible;
      }
      const auto d = nicify(g, *tr);
      const auto vs = validate_nice_h_decomposition(g, d, true);
      if (!vs.empty()) throw InternalError("nicify produced an invalid decomposition:\n" + describe(vs));
      write_text(out_path, write_document(g, d));
      out << "width " << d.width << '\n'
          << "modulator " << d.modulator.size() << '\n'
          << "components " << d.components.size() << '\n';
      return kExitOk;
    }
    if (solve->parsed()) {
      int code = kExitOk;
      const auto loaded = load_checked(graph_path, decomp_path, true, err, code);
      if (!loaded) return code;
      out << solve_line(problem, loaded->graph, loaded->decomposition, witness);
      return kExitOk;
    }
    if (oracle_cmd->parsed()) {
      out << oracle_line(problem, read_dimacs_file(graph_path));
      return kExitOk;
    }
    if (gen_cmd->parsed()) {
      const auto inst = generate_instance(gen);
      std::ostringstream text;
      write_dimacs(text, inst.graph);
      if (out_path.empty()) {
        out << text.str();
      } else {
        write_text(out_path, text.str());
        out << "vertices " << inst.graph.num_vertices() << '\n' << "edges " << inst.graph.num_edges() << '\n';
      }
      if (!decomp_out.empty()) {
        const auto d = planted_decomposition(inst, gen.component_rw);
        write_text(decomp_out, write_document(inst.graph, d));
        if (!out_path.empty()) out << "width " << d.width << '\n';
      }
      return kExitOk;
    }
    if (cross_cmd->parsed()) return crosscheck(cross, out);
    if (validate_cmd->parsed()) {
      int code = kExitOk;
      const auto loaded = load_checked(graph_path, decomp_path, !skip_rw, err, code);
      if (!loaded) return code;
      out << "ok\n";
      return kExitOk;
    }
  } catch (const FingerprintMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitFingerprint;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "; supply a decomposition instead\n";
    return kExitResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rctw
