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

#include "kskm/harness.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

#ifndef KSKM_TEST_DATA_DIR
#define KSKM_TEST_DATA_DIR "tests/data"
#endif

namespace kskm {
namespace {

using testing::coverage_t1;
using testing::cut_t2;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kSchemaError;
}

std::string data_path(const std::string& name) {
  return std::string(KSKM_TEST_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kskm_" + name)).string();
}

void expect_same_instance(const Instance& a, const Instance& b) {
  EXPECT_EQ(a.n(), b.n());
  EXPECT_EQ(a.k(), b.k());
  EXPECT_EQ(a.costs(), b.costs());
  EXPECT_EQ(a.budget(), b.budget());
  EXPECT_EQ(a.family(), b.family());
  EXPECT_EQ(a.monotone(), b.monotone());
  EXPECT_EQ(tabulate(a.oracle()), tabulate(b.oracle()));
}

TEST(IoTest, DataFilesMatchFixtures) {
  expect_same_instance(load_instance(data_path("t1.json")), coverage_t1());
  expect_same_instance(load_instance(data_path("t2.json")), cut_t2());
}

TEST(IoTest, RoundTripEveryFamily) {
  std::vector<Instance> instances{coverage_t1(), cut_t2()};
  GeneratorParams params;
  params.family = Family::kTabularRejection;
  params.n = 3;
  instances.push_back(generate_instance(params, 3).instance);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const std::string path = temp_path("roundtrip" + std::to_string(i) + ".json");
    save_instance(instances[i], path);
    const Instance back = load_instance(path);
    expect_same_instance(back, instances[i]);
    EXPECT_EQ(instance_to_string(back), instance_to_string(instances[i]));
    std::filesystem::remove(path);
  }
}

TEST(IoTest, SchemaErrors) {
  Json j = instance_to_json(coverage_t1());
  Json bad = j;
  bad["costs"] = {1, 0, 2};
  EXPECT_EQ(code_of([&] { instance_from_json(bad); }), ErrorCode::kSchemaError);
  bad = j;
  bad.erase("budget");
  EXPECT_EQ(code_of([&] { instance_from_json(bad); }), ErrorCode::kSchemaError);
  bad = j;
  bad["monotone"] = false;
  EXPECT_EQ(code_of([&] { instance_from_json(bad); }), ErrorCode::kSchemaError);
  bad = j;
  bad["oracle"]["family"] = "influence";
  EXPECT_EQ(code_of([&] { instance_from_json(bad); }), ErrorCode::kSchemaError);

  Json tab = instance_to_json(cut_t2());
  tab["oracle"] = {{"family", "tabular"}, {"tabular", {{"values", std::vector<Value>(26, 0)}}}};
  EXPECT_EQ(code_of([&] { instance_from_json(tab); }), ErrorCode::kSchemaError);

  Json cut = instance_to_json(cut_t2());
  cut["oracle"]["disjoint_cut"]["edges"] = {{0, 1}};
  EXPECT_EQ(code_of([&] { instance_from_json(cut); }), ErrorCode::kSchemaError);
}

TEST(IoTest, FileErrors) {
  EXPECT_EQ(code_of([] { load_instance("/nonexistent/kskm.json"); }), ErrorCode::kIoError);
  const std::string path = temp_path("garbage.json");
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_EQ(code_of([&] { load_instance(path); }), ErrorCode::kSchemaError);
  std::filesystem::remove(path);
  EXPECT_EQ(code_of([] { save_instance(coverage_t1(), "/nonexistent/dir/x.json"); }),
            ErrorCode::kIoError);
  const auto contracted = contract(coverage_t1().oracle_ptr(), Solution{1, 0, 0});
  const Instance inst = validate_instance({3, 2, {1, 2, 2}, 3, contracted});
  EXPECT_EQ(code_of([&] { instance_to_json(inst); }), ErrorCode::kSchemaError);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("1/10"), Rational(1, 10));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(code_of([] { parse_rational("abc"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(code_of([] { parse_rational(""); }), ErrorCode::kSchemaError);
  EXPECT_EQ(format_decimal(Rational(1, 3), 3), "0.333");
}

TEST(AlgorithmTest, NamesRoundTrip) {
  for (Algorithm a : {Algorithm::kGreedy, Algorithm::kOneGuessGreedy, Algorithm::kQGuessGreedy,
                      Algorithm::kGreedyPlusSingleton, Algorithm::kGreedyPlus,
                      Algorithm::kThresholdGreedy, Algorithm::kBruteForce}) {
    EXPECT_EQ(parse_algorithm(algorithm_name(a)), a);
  }
  EXPECT_EQ(code_of([] { parse_algorithm("simulated-annealing"); }), ErrorCode::kSchemaError);
}

TEST(AlgorithmTest, AssertedBounds) {
  SolveOptions options;
  const Instance mono = coverage_t1();
  const Instance non = cut_t2();
  EXPECT_EQ(asserted_bound(Algorithm::kOneGuessGreedy, mono, options), Rational(1, 2));
  EXPECT_EQ(asserted_bound(Algorithm::kOneGuessGreedy, non, options), Rational(1, 3));
  EXPECT_EQ(asserted_bound(Algorithm::kGreedyPlusSingleton, mono, options), Rational(1, 3));
  EXPECT_EQ(asserted_bound(Algorithm::kGreedyPlusSingleton, non, options), Rational(1, 4));
  EXPECT_EQ(asserted_bound(Algorithm::kThresholdGreedy, mono, options), Rational(2, 5));
  EXPECT_EQ(asserted_bound(Algorithm::kGreedy, mono, options), 0);
}

TEST(BoundSuiteTest, SingletonSuites) {
  ExperimentConfig config;
  config.algorithms = {Algorithm::kOneGuessGreedy};
  for (const auto& [inst, bound] :
       {std::pair{coverage_t1(), Rational(1, 2)}, std::pair{cut_t2(), Rational(1, 3)}}) {
    const CorpusEntry entry{"t", 0, {inst, Family::kCoverage, 0, 1}};
    const auto rows = bound_rows_for(entry, config);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].ratio, 1);
    EXPECT_EQ(rows[0].bound, bound);
    EXPECT_TRUE(rows[0].pass);
  }
}

TEST(BoundSuiteTest, SmallCorpusPassesAndIsDeterministic) {
  ExperimentConfig config;
  config.count = 12;
  config.n_max = 6;
  config.seed = 5;
  config.algorithms = {Algorithm::kOneGuessGreedy, Algorithm::kGreedyPlusSingleton,
                       Algorithm::kGreedyPlus, Algorithm::kThresholdGreedy};
  config.threads = 1;
  const BoundReport one = run_bound_suite(config);
  config.threads = 3;
  const BoundReport three = run_bound_suite(config);
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.rows.size(), 48u);
  EXPECT_EQ(bound_csv(one, false), bound_csv(three, false));
  EXPECT_EQ(one.min_ratio.size(), 4u);
  const std::string csv = bound_csv(one);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "instance_id,family,n,k,budget,algorithm,value,opt,ratio_exact,"
            "ratio_decimal,bound,pass,queries,seed,runtime_ms");
}

TEST(BoundSuiteTest, CorpusSplitsBudgetRule) {
  ExperimentConfig config;
  config.count = 4;
  const auto corpus = build_corpus(config);
  ASSERT_EQ(corpus.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    const Instance& inst = corpus[i].generated.instance;
    Value total = 0;
    for (Value c : inst.costs()) total += c;
    const int pct = i < 2 ? 30 : 50;
    const Value min_cost = *std::min_element(inst.costs().begin(), inst.costs().end());
    EXPECT_EQ(inst.budget(), std::max((pct * total + 99) / 100, min_cost));
  }
  config.n_min = 9;
  config.n_max = 8;
  EXPECT_EQ(code_of([&] { build_corpus(config); }), ErrorCode::kSchemaError);
}

TEST(LemmaSuiteTest, BetaBound) {
  EXPECT_EQ(beta_bound(Rational(3, 4), true), Rational(3, 8));
  EXPECT_EQ(beta_bound(Rational(3), true), Rational(1, 2));
  EXPECT_EQ(beta_bound(Rational(3, 4), false), Rational(1, 4));
  EXPECT_EQ(beta_bound(Rational(2), false), Rational(1, 3));
}

TEST(LemmaSuiteTest, FixtureRejectionCase) {
  const Instance inst = coverage_t1(4);
  const RejectionRecord r = first_rejection_prefix(inst, Solution{0, 2, 2}, Solution(3));
  ASSERT_TRUE(r.occurred);
  EXPECT_GE(Rational(r.prefix_value), beta_bound(r.beta, true) * 3);
}

TEST(LemmaSuiteTest, MixedCorpus) {
  for (Family family : {Family::kCoverage, Family::kDisjointCut}) {
    ExperimentConfig config;
    config.family = family;
    config.count = 20;
    config.n_max = 6;
    config.seed = 3;
    config.path_instances = 10;
    const LemmaReport report = run_lemma_suite(config);
    EXPECT_TRUE(report.passed()) << family_name(family);
    EXPECT_EQ(report.rows.size(), 80u);
    EXPECT_GT(report.events, 0u);
    EXPECT_GT(report.paths_verified, 0u);
    const std::string csv = lemma_csv(report);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 81);
  }
}

TEST(QueryBenchmarkTest, SmallSizes) {
  QueryBenchmarkConfig config;
  config.sizes = {6, 12};
  const QueryReport report = run_query_benchmark(config);
  ASSERT_EQ(report.rows.size(), 4u);
  EXPECT_EQ(report.rows[0].algorithm, "one-guess-greedy");
  EXPECT_LE(report.rows[0].queries, report.rows[0].envelope);
  EXPECT_GT(report.rows[2].growth, 0.0);
}

TEST(ConfigTest, FromJson) {
  const Json j = Json::parse(R"({"family": "disjoint_cut", "n_min": 5, "n_max": 6,
      "k": [2], "count": 7, "seed": 9, "algorithms": ["greedy-plus"], "epsilon": 0.2,
      "q": 2})");
  const ExperimentConfig config = experiment_config_from_json(j);
  EXPECT_EQ(config.family, Family::kDisjointCut);
  EXPECT_EQ(config.n_min, 5u);
  EXPECT_EQ(config.k_values, std::vector<int>{2});
  EXPECT_EQ(config.count, 7u);
  EXPECT_EQ(config.seed, 9u);
  EXPECT_EQ(config.algorithms, std::vector<Algorithm>{Algorithm::kGreedyPlus});
  EXPECT_EQ(config.solve.epsilon, Rational(1, 5));
  EXPECT_EQ(config.solve.q, 2u);
  EXPECT_EQ(code_of([] { experiment_config_from_json(Json::parse(R"({"count": "x"})")); }),
            ErrorCode::kSchemaError);
}

}  // namespace
}  // namespace kskm
