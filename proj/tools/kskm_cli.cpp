// Copyright 2026 The Authors.
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

// Command-line front end: instance generation, solving, oracle and extension
// verification, bound and lemma suites, and the query benchmark.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kskm/harness.hpp"

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw kskm::Error(kskm::ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
}

kskm::Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kskm::Error(kskm::ErrorCode::kIoError, "cannot read " + path);
  try {
    return kskm::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw kskm::Error(kskm::ErrorCode::kSchemaError, path + ": " + e.what());
  }
}

struct CommonFlags {
  std::uint64_t seed = 1;
  std::string out;
  unsigned threads = kskm::default_threads();
  std::string epsilon = "0.1";
  std::size_t q = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Base seed");
  cmd->add_option("--out", flags.out, "Output directory");
  cmd->add_option("--threads", flags.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", flags.epsilon, "Threshold decay (decimal or p/q)");
  cmd->add_option("--q", flags.q, "Guess size for q-guess-greedy");
}

kskm::ExperimentConfig load_config(const std::string& path, const CommonFlags& flags,
                                   CLI::App* cmd) {
  kskm::ExperimentConfig config;
  config.threads = flags.threads;
  config.solve.threads = 1;
  config.solve.epsilon = kskm::parse_rational(flags.epsilon);
  config.solve.q = flags.q;
  if (cmd->count("--seed") > 0) config.seed = flags.seed;
  if (!path.empty()) {
    config = kskm::experiment_config_from_json(read_json(path), config);
    if (cmd->count("--seed") > 0) config.seed = flags.seed;
    if (cmd->count("--epsilon") > 0) config.solve.epsilon = kskm::parse_rational(flags.epsilon);
    if (cmd->count("--q") > 0) config.solve.q = flags.q;
  }
  return config;
}

void print_ratios(const std::map<std::string, kskm::Rational>& min_ratio) {
  for (const auto& [name, ratio] : min_ratio) {
    std::cout << "  min ratio " << name << ": " << ratio.get_str() << " ("
              << kskm::format_decimal(ratio) << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-submodular knapsack maximization toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string instance_path;
  std::string algorithm_name = "one-guess-greedy";
  std::string config_path;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate seeded instance files");
  add_common(gen, flags);
  std::string family = "coverage";
  std::size_t gen_n = 6;
  int gen_k = 2;
  std::size_t gen_count = 1;
  int budget_percent = 50;
  kskm::Value cost_min = 1, cost_max = 5;
  gen->add_option("--family", family, "coverage | disjoint_cut | tabular");
  gen->add_option("--n", gen_n, "Number of elements");
  gen->add_option("--k", gen_k, "Number of dimensions");
  gen->add_option("--count", gen_count, "Number of instances");
  gen->add_option("--budget-percent", budget_percent, "Budget as percent of total cost");
  gen->add_option("--cost-min", cost_min);
  gen->add_option("--cost-max", cost_max);

  // solve
  auto* solve = app.add_subcommand("solve", "Run one algorithm on an instance");
  add_common(solve, flags);
  solve->add_option("--instance", instance_path, "Instance JSON")->required();
  solve->add_option("--algorithm", algorithm_name,
                    "greedy | one-guess-greedy | q-guess-greedy | greedy-plus-singleton | "
                    "greedy-plus | threshold-greedy | brute-force");
  bool no_guess = false;
  solve->add_flag("--no-guess", no_guess, "threshold-greedy without singleton starts");

  // verify-oracle
  auto* verify_oracle = app.add_subcommand("verify-oracle", "Exhaustive k-submodularity check");
  verify_oracle->add_option("--instance", instance_path, "Instance JSON")->required();

  // verify-extension
  auto* verify_extension =
      app.add_subcommand("verify-extension", "Multilinear extension property checks");
  add_common(verify_extension, flags);
  std::size_t trials = 50;
  verify_extension->add_option("--instance", instance_path, "Instance JSON")->required();
  verify_extension->add_option("--trials", trials, "Random points");

  // verify-bounds / verify-lemmas
  auto* verify_bounds = app.add_subcommand("verify-bounds", "Approximation-bound suite");
  add_common(verify_bounds, flags);
  verify_bounds->add_option("--config", config_path, "Experiment config JSON");
  auto* verify_lemmas = app.add_subcommand("verify-lemmas", "First-rejection lemma suite");
  add_common(verify_lemmas, flags);
  verify_lemmas->add_option("--config", config_path, "Experiment config JSON");

  // bench
  auto* bench = app.add_subcommand("bench", "Query-count benchmark");
  add_common(bench, flags);
  bench->add_option("--config", config_path, "Benchmark config JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      kskm::GeneratorParams params;
      params.family = kskm::parse_family(family);
      params.n = gen_n;
      params.k = gen_k;
      params.budget_percent = budget_percent;
      params.cost_min = cost_min;
      params.cost_max = cost_max;
      const fs::path dir = flags.out.empty() ? fs::path(".") : fs::path(flags.out);
      for (std::size_t i = 0; i < gen_count; ++i) {
        const std::uint64_t seed = kskm::splitmix64(flags.seed * 1000003ULL + i);
        const auto generated = kskm::generate_instance(params, seed);
        const fs::path path =
            dir / (kskm::family_name(params.family) + "-" + std::to_string(i) + ".json");
        write_file(path, kskm::instance_to_string(generated.instance));
        std::cout << path.string() << "\n";
      }
      return 0;
    }

    if (*solve) {
      const kskm::Instance inst = kskm::load_instance(instance_path);
      kskm::SolveOptions options;
      options.q = flags.q;
      options.epsilon = kskm::parse_rational(flags.epsilon);
      options.with_guess = !no_guess;
      options.threads = flags.threads;
      const auto algorithm = kskm::parse_algorithm(algorithm_name);
      const auto result = kskm::run_algorithm(inst, algorithm, options);
      kskm::Json out;
      out["algorithm"] = algorithm_name;
      out["solution"] = kskm::solution_to_json(result.solution);
      out["value"] = result.value;
      out["cost"] = kskm::cost(result.solution, inst);
      out["queries"] = result.queries;
      if (result.guess_used) out["guess"] = kskm::solution_to_json(*result.guess_used);
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*verify_oracle) {
      const kskm::Instance inst = kskm::load_instance(instance_path);
      const auto report = kskm::check_k_submodularity(inst.oracle());
      const bool monotone = kskm::is_monotone(inst.oracle());
      std::cout << (report.ok() ? "ok" : "violation: " + report.describe()) << "\n";
      std::cout << "monotone: " << (monotone ? "true" : "false") << "\n";
      return report.ok() && monotone == inst.monotone() ? 0 : 1;
    }

    if (*verify_extension) {
      const kskm::Instance inst = kskm::load_instance(instance_path);
      const auto report = kskm::check_extension_properties(inst.oracle(), trials, flags.seed);
      std::cout << "points: " << report.points << "\n"
                << "monotone checks: " << report.monotone_checks << "\n"
                << "pairwise checks: " << report.pairwise_checks << "\n"
                << "hessian checks: " << report.hessian_checks << " (skipped "
                << report.hessian_skipped << ")\n"
                << "antitone checks: " << report.antitone_checks << "\n";
      for (const auto& v : report.violations) {
        std::cout << "violation " << v.property << ": " << v.detail << "\n";
      }
      std::cout << (report.ok() ? "ok" : "FAILED") << "\n";
      return report.ok() ? 0 : 1;
    }

    if (*verify_bounds) {
      const auto config = load_config(config_path, flags, verify_bounds);
      const auto report = kskm::run_bound_suite(config);
      std::cout << "rows: " << report.rows.size() << ", failures: " << report.failures << "\n";
      print_ratios(report.min_ratio);
      if (!flags.out.empty()) {
        write_file(fs::path(flags.out) / "bounds.csv", kskm::bound_csv(report));
      }
      return report.passed() ? 0 : 1;
    }

    if (*verify_lemmas) {
      const auto config = load_config(config_path, flags, verify_lemmas);
      const auto report = kskm::run_lemma_suite(config);
      std::cout << "rejection events: " << report.events << "\n"
                << "beta violations: " << report.beta_violations << "\n"
                << "paths verified: " << report.paths_verified << " on "
                << report.path_instances << " instances\n"
                << "path violations: " << report.path_violations << "\n"
                << "telescoping failures: " << report.telescoping_failures << "\n"
                << "key lemma violations: " << report.key_lemma_violations << "\n"
                << "infeasible schedules: " << report.infeasible_schedules << "\n";
      if (!flags.out.empty()) {
        write_file(fs::path(flags.out) / "lemmas.csv", kskm::lemma_csv(report));
      }
      return report.passed() ? 0 : 1;
    }

    if (*bench) {
      kskm::QueryBenchmarkConfig config;
      config.threads = flags.threads;
      config.epsilon = kskm::parse_rational(flags.epsilon);
      if (bench->count("--seed") > 0) config.seed = flags.seed;
      if (!config_path.empty()) {
        const auto j = read_json(config_path);
        try {
          if (j.contains("sizes")) config.sizes = j.at("sizes").get<std::vector<std::size_t>>();
          if (j.contains("k")) config.k = j.at("k").get<int>();
          if (j.contains("seed") && bench->count("--seed") == 0) {
            config.seed = j.at("seed").get<std::uint64_t>();
          }
        } catch (const nlohmann::json::exception& e) {
          throw kskm::Error(kskm::ErrorCode::kSchemaError, e.what());
        }
      }
      const auto report = kskm::run_query_benchmark(config);
      std::cout << kskm::query_csv(report);
      if (!flags.out.empty()) {
        write_file(fs::path(flags.out) / "bench.csv", kskm::query_csv(report));
      }
      return report.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
