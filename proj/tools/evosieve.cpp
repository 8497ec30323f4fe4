// Command-line harness: instance generation, sieve runs with CSV statistics,
// the enumeration oracle, and the asymptotic estimator.
//
// Exit codes: 0 success, 1 usage error, 2 data error (parse failures,
// dependent rows), 3 runtime error (sampler starvation, dimension limit, io).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evosieve/basis_io.hpp"
#include "evosieve/errors.hpp"
#include "evosieve/lll.hpp"
#include "evosieve/oracle.hpp"
#include "evosieve/sieve.hpp"
#include "evosieve/stats_io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitRuntime = 3;

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw evosieve::IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void print_vector(const char* label, const std::vector<evosieve::BigInt>& v) {
  std::cout << label << ": [";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << v[i];
  }
  std::cout << "]\n";
}

struct GenArgs {
  int dim = 0;
  int bits = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct RunArgs {
  std::string basis_path;
  std::string variant = "local";
  int pop_size = 0;
  double mutation_rate = 0.1;
  std::uint64_t seed = 0;
  int max_generations = 1000;
  int stale = 3;
  std::string stats_out;
};

struct OracleArgs {
  std::string basis_path;
  bool force = false;
};

int do_gen(const GenArgs& args) {
  const evosieve::BasisMatrix basis =
      evosieve::generate_random_basis(args.dim, args.bits, args.seed);
  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw evosieve::IoError("cannot open '" + args.out + "'");
  file << evosieve::format_basis(basis);
  if (!file) throw evosieve::IoError("write to '" + args.out + "' failed");
  return 0;
}

int do_run(const RunArgs& args) {
  const auto variant = evosieve::variant_from_name(args.variant);
  if (!variant) {
    std::cerr << "unknown variant '" << args.variant << "'\n";
    return kExitUsage;
  }
  const evosieve::BasisMatrix basis =
      evosieve::parse_basis(read_file(args.basis_path));

  evosieve::SieveConfig config;
  config.variant = *variant;
  config.pop_size = args.pop_size;
  config.mutation_rate = args.mutation_rate;
  config.seed = args.seed;
  config.max_generations = args.max_generations;
  config.stale_generations = args.stale;

  const auto t0 = std::chrono::steady_clock::now();
  const evosieve::SieveResult result = evosieve::run_sieve(basis, config);
  const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

  if (!args.stats_out.empty()) evosieve::write_stats_csv(result, args.stats_out);

  std::cout << "dim: " << basis.dim() << "\n";
  std::cout << "variant: " << evosieve::variant_name(config.variant) << "\n";
  std::cout << "seed: " << config.seed << "\n";
  std::cout << "pop_size: " << result.final_population.size() << "\n";
  std::cout << "generations: " << result.trail.size() << "\n";
  std::cout << "terminated_by: "
            << evosieve::termination_name(result.terminated_by) << "\n";
  std::cout << "replacements_total: "
            << (result.trail.empty() ? 0
                                     : result.trail.back().cumulative_replacements)
            << "\n";
  std::cout << "best_norm_sq: " << result.best.norm_sq << "\n";
  char line[64];
  std::snprintf(line, sizeof(line), "%.6f",
                std::sqrt(evosieve::to_double(result.best.norm_sq)));
  std::cout << "best_norm: " << line << "\n";
  print_vector("best_coeffs", result.best.coeffs);  // w.r.t. the reduced basis
  print_vector("best_coords", result.best.coords);
  std::cout << "wall_ms: " << wall << "\n";
  return 0;
}

int do_oracle(const OracleArgs& args) {
  const evosieve::BasisMatrix basis =
      evosieve::parse_basis(read_file(args.basis_path));
  const evosieve::BasisMatrix reduced = evosieve::lll_reduce(basis);
  const evosieve::GramSchmidtData gso = evosieve::gram_schmidt(reduced);
  const evosieve::LatticePoint shortest =
      evosieve::enumerate_svp(reduced, gso, args.force);
  std::cout << "dim: " << reduced.dim() << "\n";
  std::cout << "shortest_norm_sq: " << shortest.norm_sq << "\n";
  char line[64];
  std::snprintf(line, sizeof(line), "%.6f",
                std::sqrt(evosieve::to_double(shortest.norm_sq)));
  std::cout << "shortest_norm: " << line << "\n";
  print_vector("coeffs", shortest.coeffs);  // w.r.t. the reduced basis
  print_vector("coords", shortest.coords);
  return 0;
}

int do_estimate(int dim) {
  const evosieve::ComplexityEstimate est = evosieve::estimate_complexity(dim);
  char line[64];
  std::cout << "dim: " << est.dim << "\n";
  std::snprintf(line, sizeof(line), "%.6f", est.pop_size_estimate);
  std::cout << "pop_size_estimate: " << line << "\n";
  std::snprintf(line, sizeof(line), "%.6f", est.log2_pop);
  std::cout << "log2_pop: " << line << "\n";
  std::snprintf(line, sizeof(line), "%.6f", est.log2_time);
  std::cout << "log2_time: " << line << "\n";
  std::snprintf(line, sizeof(line), "%.9f", est.reduction_probability);
  std::cout << "reduction_probability: " << line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolutionary lattice sieve laboratory"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "emit a random knapsack-style basis");
  gen->add_option("--dim", gen_args.dim, "lattice dimension")
      ->required()
      ->check(CLI::Range(2, 1024));
  gen->add_option("--bits", gen_args.bits, "bit length of the determinant")
      ->required()
      ->check(CLI::Range(2, 4096));
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out, "output file")->required();

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "LLL, sieve, and report statistics");
  run->add_option("--basis", run_args.basis_path, "basis file")->required();
  run->add_option("--variant", run_args.variant,
                  "local|global|local-mut|global-mut");
  run->add_option("--pop-size", run_args.pop_size,
                  "population cap (0 = dimension default)");
  run->add_option("--mutation-rate", run_args.mutation_rate,
                  "mutation probability for *-mut variants")
      ->check(CLI::Range(0.0, 1.0));
  run->add_option("--seed", run_args.seed, "run seed");
  run->add_option("--max-generations", run_args.max_generations,
                  "generation cap")
      ->check(CLI::Range(1, 1000000));
  run->add_option("--stale", run_args.stale,
                  "stagnant generations before termination")
      ->check(CLI::Range(1, 1000000));
  run->add_option("--stats-out", run_args.stats_out,
                  "per-generation CSV output path");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "exact shortest vector");
  oracle->add_option("--basis", oracle_args.basis_path, "basis file")
      ->required();
  oracle->add_flag("--force", oracle_args.force,
                   "enumerate even beyond the practical dimension limit");

  int estimate_dim = 0;
  auto* estimate =
      app.add_subcommand("estimate", "asymptotic population/time estimates");
  estimate->add_option("--dim", estimate_dim, "lattice dimension")
      ->required()
      ->check(CLI::Range(0, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return do_gen(gen_args);
    if (run->parsed()) {
      if (run_args.pop_size != 0 && run_args.pop_size < 2) {
        std::cerr << "--pop-size must be >= 2 (or 0 for the default)\n";
        return kExitUsage;
      }
      return do_run(run_args);
    }
    if (oracle->parsed()) return do_oracle(oracle_args);
    if (estimate->parsed()) return do_estimate(estimate_dim);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const evosieve::ParseError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const evosieve::NotSquareError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const evosieve::DimensionTooSmallError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const evosieve::DependentRowsError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const evosieve::Error& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
