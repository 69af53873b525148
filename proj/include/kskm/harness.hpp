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

//
// Experiment suites: seeded corpora, approximation-bound checks against the
// brute-force optimum, first-rejection lemma checks with transformation-path
// verification, query-count benchmarks and CSV reports.
//

#ifndef KSKM_HARNESS_HPP_
#define KSKM_HARNESS_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kskm/core.hpp"
#include "kskm/io.hpp"
#include "kskm/multilinear.hpp"
#include "kskm/oracles.hpp"
#include "kskm/parallel.hpp"
#include "kskm/solvers.hpp"

namespace kskm {

// Parses "0.1", "1/10" or "3" exactly.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::kSchemaError, "empty number");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational r(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    r.canonicalize();
    return r;
  }
  const auto dot = text.find('.');
  try {
    if (dot == std::string::npos) return Rational(mpz_class(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole[0] == '-';
    mpz_class num(whole.empty() || whole == "-" ? "0" : whole);
    mpz_class tail(frac.empty() ? "0" : frac);
    num = num * scale + (negative ? -tail : tail);
    Rational r(num, scale);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kSchemaError, "not a number: '" + text + "'");
  }
}

inline std::string format_decimal(const Rational& r, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << r.get_d();
  return os.str();
}

// ---------------------------------------------------------------------------
// Algorithms by name.

enum class Algorithm {
  kGreedy,
  kOneGuessGreedy,
  kQGuessGreedy,
  kGreedyPlusSingleton,
  kGreedyPlus,
  kThresholdGreedy,
  kBruteForce,
};

inline std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kOneGuessGreedy: return "one-guess-greedy";
    case Algorithm::kQGuessGreedy: return "q-guess-greedy";
    case Algorithm::kGreedyPlusSingleton: return "greedy-plus-singleton";
    case Algorithm::kGreedyPlus: return "greedy-plus";
    case Algorithm::kThresholdGreedy: return "threshold-greedy";
    case Algorithm::kBruteForce: return "brute-force";
  }
  return "unknown";
}

inline Algorithm parse_algorithm(const std::string& name) {
  for (Algorithm a : {Algorithm::kGreedy, Algorithm::kOneGuessGreedy,
                      Algorithm::kQGuessGreedy, Algorithm::kGreedyPlusSingleton,
                      Algorithm::kGreedyPlus, Algorithm::kThresholdGreedy,
                      Algorithm::kBruteForce}) {
    if (algorithm_name(a) == name) return a;
  }
  throw Error(ErrorCode::kSchemaError, "unknown algorithm '" + name + "'");
}

struct SolveOptions {
  std::size_t q = 1;
  Rational epsilon{1, 10};
  bool with_guess = true;
  unsigned threads = 1;
};

inline SolverResult run_algorithm(const Instance& inst, Algorithm a,
                                  const SolveOptions& options = {}) {
  switch (a) {
    case Algorithm::kGreedy: return greedy(inst);
    case Algorithm::kOneGuessGreedy: return q_guess_greedy(inst, 1, options.threads);
    case Algorithm::kQGuessGreedy: return q_guess_greedy(inst, options.q, options.threads);
    case Algorithm::kGreedyPlusSingleton: return greedy_plus_singleton(inst);
    case Algorithm::kGreedyPlus: return greedy_plus(inst);
    case Algorithm::kThresholdGreedy:
      return threshold_greedy(inst, options.epsilon, options.with_guess, options.threads);
    case Algorithm::kBruteForce: return brute_force_opt(inst);
  }
  throw Error(ErrorCode::kSchemaError, "unknown algorithm");
}

inline bool unit_costs(const Instance& inst) {
  for (Value c : inst.costs()) {
    if (c != 1) return false;
  }
  return true;
}

// The guaranteed fraction of OPT asserted for each algorithm; 0 where no
// worst-case guarantee applies (values are still reported).
inline Rational asserted_bound(Algorithm a, const Instance& inst,
                               const SolveOptions& options) {
  const bool mono = inst.monotone();
  switch (a) {
    case Algorithm::kOneGuessGreedy:
      return mono ? Rational(1, 2) : Rational(1, 3);
    case Algorithm::kQGuessGreedy:
      if (options.q == 1) return mono ? Rational(1, 2) : Rational(1, 3);
      if (options.q == 0 && mono && unit_costs(inst)) return Rational(1, 2);
      return 0;
    case Algorithm::kGreedy:
      return mono && unit_costs(inst) ? Rational(1, 2) : Rational(0);
    case Algorithm::kGreedyPlusSingleton:
    case Algorithm::kGreedyPlus:
      return mono ? Rational(1, 3) : Rational(1, 4);
    case Algorithm::kThresholdGreedy:
      if (mono && options.with_guess) {
        Rational b = Rational(1, 2) - options.epsilon;
        return b > 0 ? b : Rational(0);
      }
      return 0;
    case Algorithm::kBruteForce:
      return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Corpora.

struct ExperimentConfig {
  Family family = Family::kCoverage;
  std::size_t n_min = 4;
  std::size_t n_max = 8;
  std::vector<int> k_values{2, 3};
  Value cost_min = 1;
  Value cost_max = 5;
  // First half of the corpus uses budget_percents[0], the second half the
  // last entry.
  std::vector<int> budget_percents{30, 50};
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms{Algorithm::kOneGuessGreedy,
                                    Algorithm::kGreedyPlusSingleton,
                                    Algorithm::kGreedyPlus};
  SolveOptions solve;
  unsigned threads = 1;
  // Lemma suite.
  std::size_t random_references = 3;
  std::size_t path_instances = 50;
  std::size_t path_max_elements = 8;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct CorpusEntry {
  std::string id;
  std::uint64_t seed;
  GeneratedInstance generated;
};

inline GeneratorParams corpus_params(const ExperimentConfig& config, std::size_t index,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  GeneratorParams params;
  params.family = config.family;
  const std::size_t span = config.n_max - config.n_min + 1;
  params.n = config.n_min + static_cast<std::size_t>(rng() % span);
  params.k = config.k_values[rng() % config.k_values.size()];
  if (params.family == Family::kTabularRejection) {
    params.n = std::min<std::size_t>(params.n, 5);
  }
  params.cost_min = config.cost_min;
  params.cost_max = config.cost_max;
  params.budget_percent = index < config.count / 2 ? config.budget_percents.front()
                                                   : config.budget_percents.back();
  params.universe = params.n + 4;
  params.inclusion_probability = 0.3;
  params.edge_density = 0.5;
  params.edge_weight_max = 3;
  return params;
}

inline CorpusEntry corpus_entry(const ExperimentConfig& config, std::size_t index) {
  const std::uint64_t seed = splitmix64(config.seed * 1000003ULL + index);
  auto generated = generate_instance(corpus_params(config, index, seed), seed);
  return {family_name(config.family) + "-" + std::to_string(index), seed,
          std::move(generated)};
}

inline std::vector<CorpusEntry> build_corpus(const ExperimentConfig& config) {
  if (config.n_max < config.n_min || config.k_values.empty() ||
      config.budget_percents.empty()) {
    throw Error(ErrorCode::kSchemaError, "bad experiment configuration");
  }
  std::vector<std::optional<CorpusEntry>> slots(config.count);
  parallel_for(config.count, config.threads,
               [&](std::size_t i) { slots[i] = corpus_entry(config, i); });
  std::vector<CorpusEntry> corpus;
  corpus.reserve(config.count);
  for (auto& slot : slots) corpus.push_back(std::move(*slot));
  return corpus;
}

// ---------------------------------------------------------------------------
// Bound suite.

struct BoundReportRow {
  std::string instance_id;
  std::string family;
  std::size_t n = 0;
  int k = 0;
  Value budget = 0;
  std::string algorithm;
  Value value = 0;
  Value opt = 0;
  Rational ratio = 1;
  std::uint64_t queries = 0;
  Rational bound = 0;
  bool pass = true;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
};

struct BoundReport {
  std::vector<BoundReportRow> rows;
  std::map<std::string, Rational> min_ratio;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

inline Rational ratio_of(Value value, Value opt) {
  return opt == 0 ? Rational(1) : make_rational(value, opt);
}

inline std::vector<BoundReportRow> bound_rows_for(const CorpusEntry& entry,
                                                  const ExperimentConfig& config) {
  const Instance& inst = entry.generated.instance;
  const SolverResult opt = brute_force_opt(inst);
  std::vector<BoundReportRow> rows;
  for (Algorithm a : config.algorithms) {
    const auto start = std::chrono::steady_clock::now();
    const SolverResult r = run_algorithm(inst, a, config.solve);
    const auto stop = std::chrono::steady_clock::now();
    BoundReportRow row;
    row.instance_id = entry.id;
    row.family = inst.family();
    row.n = inst.n();
    row.k = inst.k();
    row.budget = inst.budget();
    row.algorithm = algorithm_name(a);
    if (a == Algorithm::kQGuessGreedy) row.algorithm += "-" + std::to_string(config.solve.q);
    row.value = r.value;
    row.opt = opt.value;
    row.ratio = ratio_of(r.value, opt.value);
    row.queries = r.queries;
    row.bound = asserted_bound(a, inst, config.solve);
    row.pass = row.ratio >= row.bound && cost(r.solution, inst) <= inst.budget() &&
               inst.oracle().value(r.solution) == r.value;
    row.seed = entry.seed;
    row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline BoundReport run_bound_suite(const ExperimentConfig& config) {
  const auto corpus = build_corpus(config);
  std::vector<std::vector<BoundReportRow>> per_instance(corpus.size());
  parallel_for(corpus.size(), config.threads, [&](std::size_t i) {
    per_instance[i] = bound_rows_for(corpus[i], config);
  });
  BoundReport report;
  for (auto& rows : per_instance) {
    for (auto& row : rows) {
      auto it = report.min_ratio.find(row.algorithm);
      if (it == report.min_ratio.end()) {
        report.min_ratio.emplace(row.algorithm, row.ratio);
      } else if (row.ratio < it->second) {
        it->second = row.ratio;
      }
      if (!row.pass) ++report.failures;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline std::string bound_csv(const BoundReport& report, bool include_runtime = true) {
  std::ostringstream os;
  os << "instance_id,family,n,k,budget,algorithm,value,opt,ratio_exact,"
        "ratio_decimal,bound,pass,queries,seed,runtime_ms\n";
  for (const auto& r : report.rows) {
    os << r.instance_id << ',' << r.family << ',' << r.n << ',' << r.k << ','
       << r.budget << ',' << r.algorithm << ',' << r.value << ',' << r.opt << ','
       << r.ratio.get_str() << ',' << format_decimal(r.ratio) << ','
       << r.bound.get_str() << ',' << (r.pass ? "true" : "false") << ','
       << r.queries << ',' << r.seed << ',';
    if (include_runtime) os << std::fixed << std::setprecision(3) << r.runtime_ms;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Lemma suite.

struct LemmaRow {
  std::string instance_id;
  std::string family;
  std::size_t n = 0;
  int k = 0;
  Value budget = 0;
  std::string reference;  // "optimum" or "random-<i>"
  bool occurred = false;
  Rational beta = 0;
  Value prefix_value = 0;
  Value reference_value = 0;
  Rational bound = 0;
  bool pass = true;
  // Transformation path: "", "verified", "infeasible", "skipped".
  std::string path_status;
  std::size_t path_segments = 0;
  std::size_t path_violations = 0;
  bool telescopes = true;
  bool key_lemma = true;
};

struct LemmaReport {
  std::vector<LemmaRow> rows;
  std::size_t events = 0;
  std::size_t beta_violations = 0;
  std::size_t paths_verified = 0;
  std::size_t path_instances = 0;
  std::size_t path_violations = 0;
  std::size_t telescoping_failures = 0;
  std::size_t key_lemma_violations = 0;
  std::size_t infeasible_schedules = 0;

  bool passed() const {
    return beta_violations == 0 && path_violations == 0 &&
           telescoping_failures == 0 && key_lemma_violations == 0;
  }
};

// min{β/2, 1/2} for monotone oracles, min{β/3, 1/3} otherwise.
inline Rational beta_bound(const Rational& beta, bool monotone) {
  const Rational cap = monotone ? Rational(1, 2) : Rational(1, 3);
  const Rational scaled = beta * cap;
  return scaled < cap ? scaled : cap;
}

namespace internal {

inline Solution random_feasible(const Instance& inst, std::mt19937_64& rng) {
  std::vector<std::size_t> order(inst.n());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  std::vector<int> x(inst.n(), 0);
  Value spent = 0;
  for (std::size_t e : order) {
    if (rng() % 5 < 3 && spent + inst.cost(e) <= inst.budget()) {
      x[e] = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(inst.k()));
      spent += inst.cost(e);
    }
  }
  return Solution(std::move(x));
}

}  // namespace internal

struct PathCheck {
  std::string status;  // "verified" or "infeasible"
  PathReport report;
  bool key_lemma = true;
};

// Pads the reference with one null element so c(o') = c(s) (when c(s) > c(o))
// and checks the transformation from o' to the rejection prefix.
inline PathCheck check_rejection_path(const Instance& inst, const Solution& reference,
                                      const RejectionRecord& record) {
  const Value gap = cost(record.prefix, inst) - cost(reference, inst);
  Instance padded = inst;
  Solution o = reference;
  if (gap > 0) {
    padded = inst.with_null_elements({gap});
    std::vector<int> x = reference.assignment();
    x.push_back(1);
    o = Solution(std::move(x));
  }
  PathCheck check;
  try {
    const TransformationPath path = build_path(padded, o, record.accepted);
    check.report = verify_path(padded, path);
    check.status = "verified";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasibleSchedule) throw;
    check.status = "infeasible";
    return check;
  }
  const Value fs = padded.oracle().value(record.prefix.size() == padded.n()
                                             ? record.prefix
                                             : Solution([&] {
                                                 auto x = record.prefix.assignment();
                                                 x.resize(padded.n(), 0);
                                                 return x;
                                               }()));
  const Value fo = padded.oracle().value(o);
  check.key_lemma = (inst.monotone() ? 2 : 3) * fs >= fo;
  return check;
}

inline std::vector<LemmaRow> lemma_rows_for(const CorpusEntry& entry,
                                            const ExperimentConfig& config,
                                            bool want_path) {
  const Instance& inst = entry.generated.instance;
  std::vector<std::pair<std::string, Solution>> references;
  references.emplace_back("optimum", brute_force_opt(inst).solution);
  std::mt19937_64 rng(entry.seed ^ 0xa5a5a5a5ULL);
  for (std::size_t r = 0; r < config.random_references; ++r) {
    references.emplace_back("random-" + std::to_string(r),
                            internal::random_feasible(inst, rng));
  }
  std::vector<LemmaRow> rows;
  bool path_done = !want_path;
  for (const auto& [name, o] : references) {
    const RejectionRecord record = first_rejection_prefix(inst, o, Solution(inst.n()));
    LemmaRow row;
    row.instance_id = entry.id;
    row.family = inst.family();
    row.n = inst.n();
    row.k = inst.k();
    row.budget = inst.budget();
    row.reference = name;
    row.occurred = record.occurred;
    row.beta = record.beta;
    row.prefix_value = inst.oracle().value(record.prefix);
    row.reference_value = inst.oracle().value(o);
    if (record.occurred) {
      row.bound = beta_bound(record.beta, inst.monotone());
      row.pass = Rational(static_cast<long>(row.prefix_value)) >=
                 row.bound * static_cast<long>(row.reference_value);
      if (!path_done && record.beta >= 1 &&
          inst.n() + (record.beta > 1 ? 1 : 0) <= config.path_max_elements) {
        const PathCheck check = check_rejection_path(inst, o, record);
        row.path_status = check.status;
        if (check.status == "verified") {
          row.path_segments = check.report.segments;
          row.path_violations = check.report.violations();
          row.telescopes = check.report.telescopes();
          row.key_lemma = check.key_lemma;
          path_done = true;
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline LemmaReport run_lemma_suite(const ExperimentConfig& config) {
  const auto corpus = build_corpus(config);
  std::vector<std::vector<LemmaRow>> per_instance(corpus.size());
  // Path verification goes to the first path_instances instances.
  parallel_for(corpus.size(), config.threads, [&](std::size_t i) {
    per_instance[i] = lemma_rows_for(corpus[i], config, true);
  });
  LemmaReport report;
  for (auto& rows : per_instance) {
    bool counted = false;
    for (auto& row : rows) {
      if (row.occurred) ++report.events;
      if (!row.pass) ++report.beta_violations;
      if (row.path_status == "infeasible") ++report.infeasible_schedules;
      if (row.path_status == "verified") {
        if (report.path_instances >= config.path_instances) {
          row.path_status = "skipped";
        } else {
          ++report.paths_verified;
          if (!counted) {
            ++report.path_instances;
            counted = true;
          }
          report.path_violations += row.path_violations;
          if (!row.telescopes) ++report.telescoping_failures;
          if (!row.key_lemma) ++report.key_lemma_violations;
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline std::string lemma_csv(const LemmaReport& report) {
  std::ostringstream os;
  os << "instance_id,family,n,k,budget,reference,occurred,beta,prefix_value,"
        "reference_value,bound,pass,path_status,path_segments,path_violations,"
        "telescopes,key_lemma\n";
  for (const auto& r : report.rows) {
    os << r.instance_id << ',' << r.family << ',' << r.n << ',' << r.k << ','
       << r.budget << ',' << r.reference << ',' << (r.occurred ? "true" : "false")
       << ',' << r.beta.get_str() << ',' << r.prefix_value << ','
       << r.reference_value << ',' << r.bound.get_str() << ','
       << (r.pass ? "true" : "false") << ',' << r.path_status << ','
       << r.path_segments << ',' << r.path_violations << ','
       << (r.telescopes ? "true" : "false") << ','
       << (r.key_lemma ? "true" : "false") << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Query benchmark.

struct QueryBenchmarkConfig {
  std::vector<std::size_t> sizes{20, 40, 80};
  int k = 2;
  std::uint64_t seed = 1;
  Rational epsilon{1, 10};
  int budget_percent = 30;
  unsigned threads = 1;
  // queries(1GG) <= envelope · n^3 k^2.
  Value envelope = 4;
  double one_guess_growth_min = 6, one_guess_growth_max = 10;
  double threshold_growth_min = 3, threshold_growth_max = 6;
};

struct QueryRow {
  std::size_t n = 0;
  int k = 0;
  std::string algorithm;
  std::uint64_t queries = 0;
  std::uint64_t envelope = 0;  // 0 when no envelope is asserted
  double growth = 0.0;         // queries(n) / queries(n/2); 0 for the first size
  bool pass = true;
  Value value = 0;
  double runtime_ms = 0.0;
};

struct QueryReport {
  std::vector<QueryRow> rows;
  bool passed() const {
    for (const auto& r : rows) {
      if (!r.pass) return false;
    }
    return true;
  }
};

inline QueryReport run_query_benchmark(const QueryBenchmarkConfig& config) {
  QueryReport report;
  std::map<std::string, std::uint64_t> previous;
  for (std::size_t n : config.sizes) {
    GeneratorParams params;
    params.family = Family::kCoverage;
    params.n = n;
    params.k = config.k;
    params.universe = n + 4;
    params.inclusion_probability = 0.1;
    params.budget_percent = config.budget_percent;
    const std::uint64_t seed = splitmix64(config.seed * 7919ULL + n);
    const Instance inst = generate_instance(params, seed).instance;
    for (Algorithm a : {Algorithm::kOneGuessGreedy, Algorithm::kThresholdGreedy}) {
      SolveOptions options;
      options.epsilon = config.epsilon;
      options.threads = config.threads;
      const auto start = std::chrono::steady_clock::now();
      const SolverResult r = run_algorithm(inst, a, options);
      const auto stop = std::chrono::steady_clock::now();
      QueryRow row;
      row.n = n;
      row.k = config.k;
      row.algorithm = algorithm_name(a);
      row.queries = r.queries;
      row.value = r.value;
      row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      const bool one_guess = a == Algorithm::kOneGuessGreedy;
      if (one_guess) {
        row.envelope = static_cast<std::uint64_t>(config.envelope) * n * n * n *
                       static_cast<std::uint64_t>(config.k * config.k);
        row.pass = row.queries <= row.envelope;
      }
      auto it = previous.find(row.algorithm);
      if (it != previous.end()) {
        row.growth = static_cast<double>(row.queries) / static_cast<double>(it->second);
        const double lo = one_guess ? config.one_guess_growth_min : config.threshold_growth_min;
        const double hi = one_guess ? config.one_guess_growth_max : config.threshold_growth_max;
        row.pass = row.pass && row.growth >= lo && row.growth <= hi;
      }
      previous[row.algorithm] = row.queries;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

inline std::string query_csv(const QueryReport& report) {
  std::ostringstream os;
  os << "n,k,algorithm,queries,envelope,growth,value,pass,runtime_ms\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.k << ',' << r.algorithm << ',' << r.queries << ','
       << r.envelope << ',' << std::fixed << std::setprecision(3) << r.growth
       << ',' << r.value << ',' << (r.pass ? "true" : "false") << ','
       << r.runtime_ms << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Config files.

inline ExperimentConfig experiment_config_from_json(const Json& j,
                                                    ExperimentConfig config = {}) {
  try {
    if (j.contains("family")) config.family = parse_family(j.at("family").get<std::string>());
    if (j.contains("n_min")) config.n_min = j.at("n_min").get<std::size_t>();
    if (j.contains("n_max")) config.n_max = j.at("n_max").get<std::size_t>();
    if (j.contains("k")) config.k_values = j.at("k").get<std::vector<int>>();
    if (j.contains("cost_min")) config.cost_min = j.at("cost_min").get<Value>();
    if (j.contains("cost_max")) config.cost_max = j.at("cost_max").get<Value>();
    if (j.contains("budget_percents")) {
      config.budget_percents = j.at("budget_percents").get<std::vector<int>>();
    }
    if (j.contains("count")) config.count = j.at("count").get<std::size_t>();
    if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("algorithms")) {
      config.algorithms.clear();
      for (const auto& a : j.at("algorithms")) {
        config.algorithms.push_back(parse_algorithm(a.get<std::string>()));
      }
    }
    if (j.contains("epsilon")) config.solve.epsilon = parse_rational(j.at("epsilon").dump());
    if (j.contains("q")) config.solve.q = j.at("q").get<std::size_t>();
    if (j.contains("random_references")) {
      config.random_references = j.at("random_references").get<std::size_t>();
    }
    if (j.contains("path_instances")) {
      config.path_instances = j.at("path_instances").get<std::size_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaError, e.what());
  }
  return config;
}

}  // namespace kskm

#endif  // KSKM_HARNESS_HPP_
