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

// Shared instances and independent reference computations for the tests.

#ifndef KSKM_TESTS_FIXTURES_HPP_
#define KSKM_TESTS_FIXTURES_HPP_

#include <functional>
#include <memory>
#include <set>
#include <vector>

#include "kskm/core.hpp"
#include "kskm/oracles.hpp"

namespace kskm::testing {

// Three elements, two dimensions, four unit-weight points, costs (1, 2, 2),
// budget 3.
inline Instance coverage_t1(Value budget = 3) {
  std::vector<std::vector<std::vector<std::size_t>>> gamma = {
      {{0, 1}, {0}},
      {{1, 2}, {2, 3}},
      {{3}, {1, 2, 3}},
  };
  RawInstance raw{3, 2, {1, 2, 2}, budget,
                  std::make_shared<CoverageOracle>(std::vector<Value>{1, 1, 1, 1},
                                                   gamma, 2)};
  return validate_instance(raw);
}

// Path e1 - e2 - e3 with unit weights, two dimensions, unit costs, budget 2.
inline Instance cut_t2(Value budget = 2) {
  RawInstance raw{3, 2, {1, 1, 1}, budget,
                  std::make_shared<DisjointCutOracle>(
                      3, 2, std::vector<Edge>{{0, 1, 1}, {1, 2, 1}})};
  return validate_instance(raw);
}

// Coverage value computed directly from point sets.
inline Value reference_coverage(const std::vector<Value>& weights,
                                const std::vector<std::vector<std::vector<std::size_t>>>& gamma,
                                const std::vector<int>& x) {
  std::set<std::size_t> covered;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t u : gamma[i][static_cast<std::size_t>(x[i] - 1)]) covered.insert(u);
  }
  Value total = 0;
  for (std::size_t u : covered) total += weights[u];
  return total;
}

// Σ_j cut(X_j) computed edge by edge, one dimension at a time.
inline Value reference_cut(std::size_t n, int k, const std::vector<Edge>& edges,
                           const std::vector<int>& x) {
  (void)n;
  Value total = 0;
  for (int j = 1; j <= k; ++j) {
    for (const Edge& e : edges) {
      const bool in_u = x[e.u] == j;
      const bool in_v = x[e.v] == j;
      if (in_u != in_v) total += e.weight;
    }
  }
  return total;
}

// Every assignment in (k+1)^n, in odometer order with element 1 fastest.
inline void for_each_assignment(std::size_t n, int k,
                                const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> x(n, 0);
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < n && x[i] == k) x[i++] = 0;
    if (i == n) return;
    ++x[i];
  }
}

// Maximum of f over feasible assignments, by plain enumeration.
inline Value reference_opt(const Instance& inst) {
  Value best = 0;
  for_each_assignment(inst.n(), inst.k(), [&](const std::vector<int>& x) {
    Value c = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) c += inst.cost(i);
    }
    if (c <= inst.budget()) best = std::max(best, inst.oracle().value(Solution(x)));
  });
  return best;
}

}  // namespace kskm::testing

#endif  // KSKM_TESTS_FIXTURES_HPP_
