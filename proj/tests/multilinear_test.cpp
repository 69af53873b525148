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

#include "kskm/multilinear.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "kskm/solvers.hpp"

namespace kskm {
namespace {

using testing::coverage_t1;
using testing::cut_t2;
using testing::for_each_assignment;

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

// Σ_s f(s) Pr[s], enumerating outcomes directly with per-row probabilities.
Rational reference_expectation(const ValueOracle& f, const FractionalPoint& p) {
  Rational total = 0;
  for_each_assignment(f.n(), f.k(), [&](const std::vector<int>& x) {
    Rational prob = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      prob *= x[i] == 0 ? Rational(1 - p.row_sum(i)) : p.at(i, x[i]);
    }
    if (prob != 0) total += prob * static_cast<long>(f.value(Solution(x)));
  });
  total.canonicalize();
  return total;
}

FractionalPoint random_point(std::mt19937_64& rng, std::size_t n, int k) {
  FractionalPoint p(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    int left = 12;
    for (int j = 1; j <= k; ++j) {
      const int take = static_cast<int>(rng() % static_cast<std::uint64_t>(left + 1));
      p.set(i, j, Rational(take, 12));
      left -= take;
    }
  }
  return p;
}

TEST(FractionalPointTest, DomainAndHelpers) {
  FractionalPoint p(2, 2);
  p.set(0, 1, Rational(1, 2));
  p.set(0, 2, Rational(1, 2));
  EXPECT_TRUE(p.in_domain());
  EXPECT_EQ(p.row_sum(0), 1);
  p.add(1, 1, Rational(3, 4));
  p.add(1, 2, Rational(1, 2));
  EXPECT_FALSE(p.in_domain());
  EXPECT_EQ(code_of([&] { p.validate(); }), ErrorCode::kShapeMismatch);
  p.clear_row(1);
  EXPECT_TRUE(p.in_domain());
  const auto q = FractionalPoint::from_solution(Solution{2, 0}, 2);
  EXPECT_EQ(q.at(0, 2), 1);
  EXPECT_EQ(q.at(0, 1), 0);
  EXPECT_TRUE(FractionalPoint(2, 2).dominated_by(q));
}

TEST(EvalExactTest, FixtureValues) {
  const Instance t1 = coverage_t1();
  FractionalPoint p(3, 2);
  p.set(0, 1, Rational(1, 2));
  EXPECT_EQ(eval_exact(t1.oracle(), p), 1);
  p.set(1, 2, Rational(1, 2));
  EXPECT_EQ(eval_exact(t1.oracle(), p), 2);
}

TEST(EvalExactTest, IntegralPointsMatchOracle) {
  for (const Instance& inst : {coverage_t1(), cut_t2()}) {
    for_each_assignment(3, 2, [&](const std::vector<int>& x) {
      const Solution s(x);
      EXPECT_EQ(eval_exact(inst.oracle(), FractionalPoint::from_solution(s, 2)),
                inst.oracle().value(s));
    });
  }
  GeneratorParams params;
  params.n = 6;
  params.k = 2;
  const Instance g = generate_instance(params, 4).instance;
  const ExtensionEvaluator F(g.oracle());
  for_each_assignment(6, 2, [&](const std::vector<int>& x) {
    const Solution s(x);
    ASSERT_EQ(F.eval(FractionalPoint::from_solution(s, 2)), g.oracle().value(s));
  });
}

TEST(EvalExactTest, MatchesDirectEnumeration) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GeneratorParams params;
    params.family = seed % 2 ? Family::kCoverage : Family::kDisjointCut;
    params.n = 4;
    params.k = 3;
    const Instance inst = generate_instance(params, seed).instance;
    for (int trial = 0; trial < 10; ++trial) {
      const FractionalPoint p = random_point(rng, 4, 3);
      EXPECT_EQ(eval_exact(inst.oracle(), p), reference_expectation(inst.oracle(), p));
    }
  }
}

TEST(EvalExactTest, Errors) {
  const DisjointCutOracle big(13, 2, {});
  EXPECT_EQ(code_of([&] { eval_exact(big, FractionalPoint(13, 2)); }), ErrorCode::kTooLarge);
  const Instance t1 = coverage_t1();
  EXPECT_EQ(code_of([&] { eval_exact(t1.oracle(), FractionalPoint(2, 2)); }),
            ErrorCode::kShapeMismatch);
}

TEST(PartialTest, FixtureValues) {
  const Instance t1 = coverage_t1();
  const FractionalPoint zero(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (int j = 1; j <= 2; ++j) {
      EXPECT_EQ(partial_exact(t1.oracle(), zero, i, j),
                t1.oracle().value(Solution(3).with(i, j)));
    }
  }
  FractionalPoint p(3, 2);
  p.set(0, 1, 1);
  EXPECT_EQ(partial_exact(t1.oracle(), p, 1, 2), 2);
}

TEST(PartialTest, RowInvarianceAndReconstruction) {
  std::mt19937_64 rng(9);
  const Instance inst = cut_t2();
  const ExtensionEvaluator F(inst.oracle());
  for (int trial = 0; trial < 30; ++trial) {
    FractionalPoint p = random_point(rng, 3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      FractionalPoint q = p;
      q.clear_row(i);
      q.set(i, 1, Rational(1, 3));
      Rational rebuilt = 0;
      FractionalPoint zeroed = p;
      zeroed.clear_row(i);
      rebuilt = F.eval(zeroed);
      for (int j = 1; j <= 2; ++j) {
        EXPECT_EQ(F.partial(p, i, j), F.partial(q, i, j));
        rebuilt += p.at(i, j) * F.partial(p, i, j);
      }
      EXPECT_EQ(rebuilt, F.eval(p));
    }
  }
}

TEST(MonteCarloTest, IntegralPointIsExact) {
  const Instance t1 = coverage_t1();
  const auto est = eval_mc(t1.oracle(), FractionalPoint::from_solution(Solution{1, 2, 0}, 2),
                           100, 5);
  EXPECT_EQ(est.estimate, 4);
  EXPECT_EQ(est.standard_error, 0.0);
}

TEST(MonteCarloTest, WithinFourStandardErrors) {
  const Instance t1 = coverage_t1();
  FractionalPoint p(3, 2);
  p.set(0, 1, Rational(1, 2));
  p.set(1, 2, Rational(1, 2));
  const auto est = eval_mc(t1.oracle(), p, 100000, 17);
  EXPECT_GT(est.standard_error, 0.0);
  EXPECT_LE(std::abs(est.estimate.get_d() - 2.0), 4 * est.standard_error);
  const auto again = eval_mc(t1.oracle(), p, 100000, 17);
  EXPECT_EQ(est.estimate, again.estimate);
}

TEST(MonteCarloTest, SingleSampleIsAnOutcome) {
  const Instance t1 = coverage_t1();
  FractionalPoint p(3, 2);
  p.set(0, 1, Rational(1, 2));
  p.set(1, 2, Rational(1, 2));
  const auto est = eval_mc(t1.oracle(), p, 1, 3);
  const Rational v = est.estimate;
  EXPECT_TRUE(v == 0 || v == 2 || v == 4) << v;
}

TEST(ExtensionPropertiesTest, FixtureInstancesAreClean) {
  const auto r1 = check_extension_properties(coverage_t1().oracle(), 50, 1);
  EXPECT_TRUE(r1.ok());
  EXPECT_TRUE(r1.monotone_checked);
  EXPECT_GT(r1.monotone_checks, 0u);
  EXPECT_GT(r1.hessian_checks, 0u);
  EXPECT_GT(r1.antitone_checks, 0u);
  const auto r2 = check_extension_properties(cut_t2().oracle(), 50, 1);
  EXPECT_TRUE(r2.ok());
  EXPECT_FALSE(r2.monotone_checked);
  EXPECT_EQ(r2.monotone_checks, 0u);
  EXPECT_GT(r2.pairwise_checks, 0u);
}

TEST(ExtensionPropertiesTest, PlantedFaultIsReported) {
  // Raise f([1,1,0]) on T1's table so the lattice inequality fails.
  const Instance t1 = coverage_t1();
  auto values = tabulate(t1.oracle());
  values[mixed_radix_index(Solution{1, 1, 0}, 2)] += 3;
  const TabularOracle corrupted(3, 2, values, true);
  ASSERT_TRUE(find_lattice_violation(corrupted).has_value());
  const auto report = check_extension_properties(corrupted, 50, 1);
  EXPECT_FALSE(report.ok());
}

TEST(ExtensionPropertiesTest, TooLarge) {
  const DisjointCutOracle big(11, 2, {});
  EXPECT_EQ(code_of([&] { check_extension_properties(big, 1, 1); }), ErrorCode::kTooLarge);
}

// Invariants of any path: domain, endpoints, y ⪯ x and the ordering rule.
void expect_path_invariants(const TransformationPath& path) {
  const auto& bp = path.breakpoints();
  EXPECT_EQ(bp.front(), 0);
  EXPECT_EQ(bp.back(), path.total_time());
  const auto o = FractionalPoint::from_solution(path.reference(), path.k());
  const auto s = FractionalPoint::from_solution(path.target(), path.k());
  EXPECT_EQ(path.x_at(0), o);
  EXPECT_EQ(path.y_at(0), o);
  EXPECT_EQ(path.x_at(path.total_time()), s);
  EXPECT_EQ(path.y_at(path.total_time()), s);
  for (std::size_t b = 0; b + 1 < bp.size(); ++b) {
    for (const Rational& t : {bp[b], Rational((bp[b] + bp[b + 1]) / 2)}) {
      const auto x = path.x_at(t);
      const auto y = path.y_at(t);
      EXPECT_TRUE(x.in_domain()) << t;
      EXPECT_TRUE(y.dominated_by(x));
      int differing = 0;
      for (std::size_t i = 0; i < path.n(); ++i) {
        for (int j = 1; j <= path.k(); ++j) differing += x.at(i, j) != y.at(i, j);
      }
      EXPECT_LE(differing, 1);
    }
  }
  for (const auto& op : path.o_schedule()) {
    for (const auto& sp : path.s_schedule()) {
      if (op.element == sp.element) {
        EXPECT_LE(op.start, sp.start);
      }
    }
  }
}

TEST(PathTest, IdentityPathIsConstant) {
  const Instance t1 = coverage_t1();
  const Solution s{1, 2, 0};
  const auto path = build_path(t1, s, {{0, 1}, {1, 2}});
  expect_path_invariants(path);
  const ExtensionEvaluator F(t1.oracle());
  for (const auto& seg : path.segments()) {
    EXPECT_EQ(F.eval(path.x_at((seg.start + seg.end) / 2)), 4);
  }
  const auto report = verify_path(t1, path);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.x_integral, 0);
}

TEST(PathTest, PaddedFixturePath) {
  const Instance padded = coverage_t1(4).with_null_elements({1});
  const auto path = build_path(padded, Solution{0, 2, 2, 0}, {{0, 1}, {1, 2}, {3, 1}});
  EXPECT_EQ(path.total_time(), 4);
  EXPECT_EQ(path.breakpoints(),
            (std::vector<Rational>{0, 1, 2, 3, 4}));
  expect_path_invariants(path);
  const auto report = verify_path(padded, path);
  EXPECT_EQ(report.violations(), 0u) << (report.details.empty() ? "" : report.details[0]);
  EXPECT_TRUE(report.telescopes());
  EXPECT_EQ(report.x_expected, 4 - 3);
}

TEST(PathTest, CutPathSatisfiesNonMonotoneInequality) {
  const Instance t2 = cut_t2();
  const SolverResult g = greedy(t2);
  ASSERT_TRUE(g.trace.has_value());
  const auto path = build_path(t2, Solution{0, 1, 2}, g.trace->accepted());
  expect_path_invariants(path);
  const auto report = verify_path(t2, path);
  EXPECT_EQ(report.x_below_minus_2s, 0u);
  EXPECT_TRUE(report.ok());
}

TEST(PathTest, Errors) {
  const Instance t1 = coverage_t1();
  EXPECT_EQ(code_of([&] { build_path(t1, Solution{0, 2, 2}, {{0, 1}, {1, 2}}); }),
            ErrorCode::kCostMismatch);
  EXPECT_EQ(code_of([&] { build_path(t1, Solution{1, 0, 0}, {{0, 1}, {0, 2}}); }),
            ErrorCode::kShapeMismatch);
}

// Greedy traces on random monotone instances give clean paths whenever the
// prefix and the reference have equal cost.
TEST(PathTest, RandomGreedyTraces) {
  int verified = 0;
  for (std::uint64_t seed = 1; seed <= 60 && verified < 10; ++seed) {
    GeneratorParams params;
    params.n = 5;
    params.k = 2;
    params.cost_min = 1;
    params.cost_max = 3;
    const Instance inst = generate_instance(params, seed).instance;
    const SolverResult opt = brute_force_opt(inst);
    const SolverResult g = greedy(inst);
    const Value gap = cost(g.solution, inst) - cost(opt.solution, inst);
    if (gap < 0) continue;
    Instance padded = inst;
    std::vector<int> o = opt.solution.assignment();
    if (gap > 0) {
      padded = inst.with_null_elements({gap});
      o.push_back(1);
    }
    const auto path = build_path(padded, Solution(o), g.trace->accepted());
    expect_path_invariants(path);
    const auto report = verify_path(padded, path);
    EXPECT_TRUE(report.telescopes()) << seed;
    ++verified;
  }
  EXPECT_GT(verified, 0);
}

}  // namespace
}  // namespace kskm
