#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hkcut/io.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/rng.hpp"
#include "hkcut/solver.hpp"
#include "hkcut/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

nlohmann::json solution_json(const hkcut::Hypergraph& g, int k, hkcut::Algorithm algo,
                             const hkcut::Solution& solution) {
  nlohmann::json parts = nlohmann::json::array();
  for (const hkcut::VertexSet& part : solution.partition.parts()) {
    nlohmann::json ids = nlohmann::json::array();
    for (int v : part) ids.push_back(v + 1);
    parts.push_back(ids);
  }
  return {
      {"n", g.num_vertices()},
      {"m", g.num_edges()},
      {"k", k},
      {"algorithm", hkcut::algorithm_name(algo)},
      {"cut_value", solution.value},
      {"parts", parts},
      {"stats",
       {{"terminal_cut_calls", solution.stats.terminal_cut_calls},
        {"recursion_nodes", solution.stats.recursion_nodes},
        {"candidates_considered", solution.stats.candidates_considered},
        {"wall_ms", solution.stats.wall_ms}}},
      {"format_version", 1},
  };
}

int cmd_solve(const std::string& input, int k, const std::string& algo_name, bool as_json) {
  const hkcut::Algorithm algo = hkcut::parse_algorithm(algo_name);
  const hkcut::Hypergraph g = hkcut::parse_instance(read_file(input));
  const hkcut::Solution solution = hkcut::solve(g, k, algo);
  if (as_json) {
    std::cout << solution_json(g, k, algo, solution).dump(2) << "\n";
  } else {
    std::cout << "cut_value " << solution.value << "\n";
    for (const hkcut::VertexSet& part : solution.partition.parts()) {
      std::cout << "part";
      for (int v : part) std::cout << ' ' << v + 1;
      std::cout << "\n";
    }
    std::cerr << "stats terminal_cut_calls=" << solution.stats.terminal_cut_calls
              << " recursion_nodes=" << solution.stats.recursion_nodes
              << " candidates_considered=" << solution.stats.candidates_considered
              << " wall_ms=" << solution.stats.wall_ms << "\n";
  }
  return kExitOk;
}

int cmd_gen(const hkcut::GenParams& params, const std::string& output) {
  const hkcut::Hypergraph g = hkcut::gen_random(params);
  const std::string text = hkcut::write_instance(g);
  if (output == "-") {
    std::cout << text;
  } else {
    write_file(output, text);
  }
  return kExitOk;
}

int cmd_verify(const hkcut::VerifyParams& params) {
  const hkcut::VerifyOutcome outcome = hkcut::run_verify(params);
  std::cout << hkcut::verify_report_json(params, outcome);
  return outcome.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(std::uint64_t seed, int n_min, int n_max, int k_min, int k_max, int per) {
  hkcut::SplitMix64 master(seed);
  std::cout << "n  k  algo            cut  terminal_cuts  recursion  candidates  wall_ms\n";
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = k_min; k <= std::min(k_max, n - 1); ++k) {
      for (int i = 0; i < per; ++i) {
        hkcut::GenParams params;
        params.n = n;
        params.m = master.int_in(4, 12);
        params.rank_max = master.int_in(2, std::min(5, n));
        params.weight_max = 1;
        params.seed = master.next();
        const hkcut::Hypergraph g = hkcut::gen_random(params);
        for (const auto algo :
             {hkcut::Algorithm::kRecursive, hkcut::Algorithm::kDivideConquer}) {
          const hkcut::Solution solution = hkcut::solve(g, k, algo);
          std::printf("%-2d %-2d %-15s %-4lld %-14llu %-10llu %-11llu %.3f\n", n, k,
                      hkcut::algorithm_name(algo).c_str(),
                      static_cast<long long>(solution.value),
                      static_cast<unsigned long long>(solution.stats.terminal_cut_calls),
                      static_cast<unsigned long long>(solution.stats.recursion_nodes),
                      static_cast<unsigned long long>(solution.stats.candidates_considered),
                      solution.stats.wall_ms);
        }
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimum k-cut solver for hypergraphs"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  std::string input;
  int solve_k = 2;
  std::string algo = "recursive";
  bool as_json = false;
  solve_cmd->add_option("--input", input, "Instance file (hMETIS-style)")->required();
  solve_cmd->add_option("--k", solve_k, "Number of parts")->required();
  solve_cmd->add_option("--algo", algo, "recursive | dc | brute");
  solve_cmd->add_flag("--json", as_json, "Emit the JSON result document");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  hkcut::GenParams gen_params;
  long long weight_max = 1;
  std::string output = "-";
  gen_cmd->add_option("--n", gen_params.n, "Vertex count")->required();
  gen_cmd->add_option("--m", gen_params.m, "Hyperedge count")->required();
  gen_cmd->add_option("--rank-max", gen_params.rank_max, "Largest hyperedge size");
  gen_cmd->add_option("--weight-max", weight_max, "Largest hyperedge cost");
  gen_cmd->add_option("--seed", gen_params.seed, "Generator seed")->required();
  gen_cmd->add_option("--output", output, "Output path, '-' for stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Run the solver and structure suites");
  hkcut::VerifyParams verify_params;
  verify_cmd->add_option("--k", verify_params.k, "Number of parts")->required();
  verify_cmd->add_option("--trials", verify_params.trials, "Instances per suite");
  verify_cmd->add_option("--seed", verify_params.seed, "Instance stream seed");
  verify_cmd->add_option("--max-n", verify_params.max_n, "Largest vertex count drawn");

  auto* bench_cmd = app.add_subcommand("bench", "Print solver statistics tables");
  std::uint64_t bench_seed = 1;
  int n_min = 5, n_max = 8, k_min = 2, k_max = 3, per = 2;
  bench_cmd->add_option("--seed", bench_seed, "Instance stream seed");
  bench_cmd->add_option("--n-min", n_min, "Smallest vertex count");
  bench_cmd->add_option("--n-max", n_max, "Largest vertex count");
  bench_cmd->add_option("--k-min", k_min, "Smallest k");
  bench_cmd->add_option("--k-max", k_max, "Largest k");
  bench_cmd->add_option("--per", per, "Instances per (n, k) cell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(input, solve_k, algo, as_json);
    if (*gen_cmd) {
      gen_params.weight_max = weight_max;
      return cmd_gen(gen_params, output);
    }
    if (*verify_cmd) return cmd_verify(verify_params);
    if (*bench_cmd) return cmd_bench(bench_seed, n_min, n_max, k_min, k_max, per);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
