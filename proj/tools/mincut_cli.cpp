// Command-line front end: run min-cut algorithms on graph files, generate
// test-graph families, and emit benchmark CSVs.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mincut/detail/format.hpp"
#include "mincut/mincut.hpp"

namespace {

struct FamilySpec {
  std::string family = "random";
  int n = 16;
  double p = 0.3;
  double wlo = 1.0, whi = 1.0;
  int bridges = 3;
};

mincut::Graph build_family(const FamilySpec& spec, std::uint64_t seed,
                           std::vector<std::string>* comments) {
  using namespace mincut;
  if (spec.family == "random") {
    return gen_random_connected(spec.n, spec.p, spec.wlo, spec.whi, Rng(seed));
  }
  if (spec.family == "two-cliques") {
    if (comments) comments->push_back("planted " + std::to_string(spec.bridges));
    return gen_two_cliques(spec.n, spec.bridges);
  }
  if (spec.family == "cycle") {
    return gen_cycle(spec.n, spec.wlo, spec.whi, Rng(seed));
  }
  if (spec.family == "grid") {
    return gen_grid(spec.n, spec.wlo, spec.whi, Rng(seed));
  }
  mincut::fail(mincut::errc::bad_argument, "unknown family: " + spec.family);
}

bool parse_weight_range(const std::string& text, double& lo, double& hi) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    lo = std::stod(text.substr(0, colon));
    hi = std::stod(text.substr(colon + 1));
  } catch (...) {
    return false;
  }
  return lo > 0.0 && hi >= lo;
}

struct RunResult {
  mincut::CutResult cut;
  std::uint64_t agg_ops = 0;
};

RunResult run_algorithm(const std::string& algorithm, const mincut::Graph& g, std::uint64_t seed,
                        int d, int trees, int trials, bool parallel) {
  using namespace mincut;
  RunResult r;
  if (algorithm == "respect") {
    SamplerOptions opt;
    opt.d = d;
    opt.seed = seed;
    opt.tree_count_override = trees;
    SamplerConfig cfg(g.vertex_count(), opt);
    MinCutStats stats;
    r.cut = min_cut(g, cfg, parallel ? static_cast<int>(std::thread::hardware_concurrency()) : 1,
                    &stats);
    r.agg_ops = stats.agg_ops;
  } else if (algorithm == "stoer-wagner") {
    r.cut = stoer_wagner(g);
  } else if (algorithm == "contraction") {
    r.cut = contraction_min_cut(g, trials, Rng(seed));
  } else if (algorithm == "brute") {
    r.cut = brute_force_min_cut(g);
  } else {
    fail(errc::bad_argument, "unknown algorithm: " + algorithm);
  }
  return r;
}

std::string format_millis(double ms) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, ms, std::chars_format::fixed, 3);
  (void)ec;
  return std::string(buf, p);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) mincut::fail(mincut::errc::bad_argument, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global minimum cut via tree packing and the 2-respect scan"};
  app.require_subcommand(1);

  // --- mincut ---
  std::string file;
  std::string algorithm = "respect";
  std::uint64_t seed = 0;
  int d = 2;
  int trees = 0;
  int trials = 100;
  bool emit_partition = false;
  bool parallel = false;
  CLI::App* cmd_mincut = app.add_subcommand("mincut", "Compute the minimum cut of a graph file");
  cmd_mincut->add_option("file", file, "graph file ('-' for stdin)")->required();
  cmd_mincut->add_option("--algorithm", algorithm, "respect|stoer-wagner|contraction|brute");
  cmd_mincut->add_option("--seed", seed, "random seed");
  cmd_mincut->add_option("--d", d, "success exponent (failure probability <= 1/n^d)");
  cmd_mincut->add_option("--trees", trees,
                         "override sampled tree count (forfeits the probability guarantee)");
  cmd_mincut->add_option("--trials", trials, "contraction trials");
  cmd_mincut->add_flag("--emit-partition", emit_partition, "print one side and crossing edges");
  cmd_mincut->add_flag("--parallel", parallel, "scan sampled trees on all cores");

  // --- bench ---
  FamilySpec spec;
  int n_max = 0;
  int seeds = 1;
  std::string algorithms = "respect,stoer-wagner";
  std::string weights_text;
  CLI::App* cmd_bench = app.add_subcommand("bench", "Benchmark CSV over generated graphs");
  cmd_bench->add_option("--family", spec.family, "random|two-cliques|cycle|grid");
  cmd_bench->add_option("--n", spec.n, "smallest size (doubles up to --n-max)");
  cmd_bench->add_option("--n-max", n_max, "largest size (default: --n)");
  cmd_bench->add_option("--p", spec.p, "edge probability for the random family");
  cmd_bench->add_option("--weights", weights_text, "weight range lo:hi");
  cmd_bench->add_option("--bridges", spec.bridges, "bridge count for two-cliques");
  cmd_bench->add_option("--seeds", seeds, "number of seeds per size");
  cmd_bench->add_option("--seed", seed, "first seed");
  cmd_bench->add_option("--algorithms", algorithms, "comma-separated algorithm list");
  cmd_bench->add_option("--d", d, "success exponent");
  cmd_bench->add_option("--trees", trees, "override sampled tree count");
  cmd_bench->add_option("--trials", trials, "contraction trials");
  cmd_bench->add_flag("--parallel", parallel, "scan sampled trees on all cores");

  // --- generate ---
  CLI::App* cmd_generate = app.add_subcommand("generate", "Write a graph file to stdout");
  cmd_generate->add_option("--family", spec.family, "random|two-cliques|cycle|grid");
  cmd_generate->add_option("--n", spec.n, "size (vertices; clique size; grid side)");
  cmd_generate->add_option("--p", spec.p, "edge probability for the random family");
  cmd_generate->add_option("--weights", weights_text, "weight range lo:hi");
  cmd_generate->add_option("--bridges", spec.bridges, "bridge count for two-cliques");
  cmd_generate->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!weights_text.empty() && !parse_weight_range(weights_text, spec.wlo, spec.whi))
      mincut::fail(mincut::errc::bad_argument, "invalid weight range: " + weights_text);

    if (cmd_mincut->parsed()) {
      mincut::Graph g = mincut::parse_graph(read_input(file));
      RunResult r = run_algorithm(algorithm, g, seed, d, trees, trials, parallel);
      std::cout << "value " << mincut::detail::format_number(r.cut.value) << "\n";
      if (emit_partition) {
        std::cout << "side";
        for (int v = 0; v < g.vertex_count(); ++v)
          if (r.cut.side[static_cast<std::size_t>(v)]) std::cout << ' ' << v + 1;
        std::cout << "\n";
        for (int id : r.cut.crossing) {
          const mincut::Edge& e = g.edge(id);
          std::cout << "crossing " << e.u + 1 << ' ' << e.v + 1 << ' '
                    << mincut::detail::format_number(e.w) << "\n";
        }
      }
      return 0;
    }

    if (cmd_generate->parsed()) {
      std::vector<std::string> comments;
      mincut::Graph g = build_family(spec, seed, &comments);
      std::cout << mincut::render_graph_file(g, comments);
      return 0;
    }

    // bench
    if (n_max <= 0) n_max = spec.n;
    std::vector<std::string> algo_list;
    {
      std::stringstream ss(algorithms);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) algo_list.push_back(item);
    }
    std::cout << "n,m,algorithm,seed,value,millis,agg_ops\n";
    for (int size = spec.n; size <= n_max; size *= 2) {
      FamilySpec sized = spec;
      sized.n = size;
      for (int s = 0; s < seeds; ++s) {
        std::uint64_t graph_seed = seed + static_cast<std::uint64_t>(s);
        mincut::Graph g = build_family(sized, graph_seed, nullptr);
        for (const std::string& algo : algo_list) {
          auto start = std::chrono::steady_clock::now();
          RunResult r = run_algorithm(algo, g, graph_seed, d, trees, trials, parallel);
          auto stop = std::chrono::steady_clock::now();
          double ms = std::chrono::duration<double, std::milli>(stop - start).count();
          std::cout << g.vertex_count() << ',' << g.edge_count() << ',' << algo << ','
                    << graph_seed << ',' << mincut::detail::format_number(r.cut.value) << ','
                    << format_millis(ms) << ',' << r.agg_ops << "\n";
        }
      }
    }
    return 0;
  } catch (const mincut::MincutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
