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
// Greedy-family solvers for k-submodular knapsack maximization:
//
//   greedy                 density greedy from a start solution
//   q_guess_greedy         enumerate size-q guesses, complete each greedily
//   greedy_plus_singleton  max(greedy, best feasible singleton)
//   greedy_plus            best single augmentation of any greedy prefix
//   threshold_greedy       decreasing-threshold variant, optional 1-guess
//   brute_force_opt        exhaustive optimum for small instances
//
// All argmax ties go to the smallest element index, then the smallest
// dimension. Every solver charges its oracle evaluations to a private
// QueryCounter reported in SolverResult::queries.
//

#ifndef KSKM_SOLVERS_HPP_
#define KSKM_SOLVERS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kskm/core.hpp"
#include "kskm/oracles.hpp"
#include "kskm/parallel.hpp"

namespace kskm {

struct GreedyPick {
  std::size_t element;
  int dimension;
  Value gain;
  Rational density;
  bool accepted;
};

struct GreedyTrace {
  Solution start;
  std::vector<GreedyPick> picks;
  Solution final;

  // (element, dimension) of accepted picks, in order.
  std::vector<std::pair<std::size_t, int>> accepted() const {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& pick : picks) {
      if (pick.accepted) out.emplace_back(pick.element, pick.dimension);
    }
    return out;
  }
};

struct SolverResult {
  Solution solution;
  Value value = 0;
  std::uint64_t queries = 0;
  std::optional<GreedyTrace> trace;
  std::optional<Solution> guess_used;
};

struct RejectionRecord {
  Solution prefix;
  std::size_t rejected_element = 0;
  int rejected_dimension = 0;
  Rational beta = 0;
  bool occurred = false;
  Value prefix_value = 0;
  std::vector<std::pair<std::size_t, int>> accepted;
};

namespace internal {

inline void require_affordable_start(const Instance& inst, const Solution& start) {
  inst.oracle().check_shape(start);
  if (cost(start, inst) > inst.budget()) {
    throw Error(ErrorCode::kStartTooExpensive,
                "start costs " + std::to_string(cost(start, inst)) +
                    " > budget " + std::to_string(inst.budget()));
  }
}

// Returns true to halt the run at a rejected argmax pair, before the element
// leaves the candidate pool.
using RejectionHook =
    std::function<bool(const Solution& current, std::size_t element, int dimension)>;

struct GreedyRun {
  GreedyTrace trace;
  Value value = 0;
  bool halted = false;
};

// Lines 3-10 of q-Guess Greedy. Each iteration takes the max-density pair
// over all remaining elements, adds it if it fits, and drops the element
// from the pool either way.
inline GreedyRun run_greedy(const Instance& inst, const Solution& start,
                            const CountingOracle& f,
                            const RejectionHook& hook = nullptr) {
  GreedyRun run;
  run.trace.start = start;
  Solution current = start;
  Value current_value = f(current);
  Value current_cost = cost(current, inst);
  std::vector<std::size_t> pool;
  for (std::size_t e = 0; e < inst.n(); ++e) {
    if (!current.assigned(e)) pool.push_back(e);
  }
  while (!pool.empty()) {
    std::size_t best_slot = 0;
    int best_dim = 0;
    Value best_gain = 0;
    for (std::size_t slot = 0; slot < pool.size(); ++slot) {
      const std::size_t e = pool[slot];
      for (int j = 1; j <= inst.k(); ++j) {
        const Value gain = f(current.with(e, j)) - current_value;
        if (best_dim == 0 || compare_density(gain, inst.cost(e), best_gain,
                                             inst.cost(pool[best_slot])) > 0) {
          best_slot = slot;
          best_dim = j;
          best_gain = gain;
        }
      }
    }
    const std::size_t e = pool[best_slot];
    const bool fits = current_cost + inst.cost(e) <= inst.budget();
    if (!fits && hook && hook(current, e, best_dim)) {
      run.halted = true;
      break;
    }
    run.trace.picks.push_back(
        {e, best_dim, best_gain, make_rational(best_gain, inst.cost(e)), fits});
    if (fits) {
      current = current.with(e, best_dim);
      current_value += best_gain;
      current_cost += inst.cost(e);
    }
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_slot));
  }
  run.trace.final = current;
  run.value = current_value;
  return run;
}

// Supports of size m in lexicographic order, each with all k^m dimension
// assignments in lexicographic order; `visit` returns false to stop.
template <typename Visit>
void for_each_partial(std::size_t n, int k, std::size_t m, Visit&& visit) {
  if (m > n) return;
  std::vector<std::size_t> elements(m);
  for (std::size_t i = 0; i < m; ++i) elements[i] = i;
  for (;;) {
    std::vector<int> dims(m, 1);
    for (;;) {
      std::vector<int> assignment(n, 0);
      for (std::size_t i = 0; i < m; ++i) assignment[elements[i]] = dims[i];
      if (!visit(Solution(std::move(assignment)))) return;
      std::size_t d = m;
      while (d > 0 && dims[d - 1] == k) dims[--d] = 1;
      if (d == 0) break;
      ++dims[d - 1];
    }
    std::size_t i = m;
    while (i > 0 && elements[i - 1] == n - m + i - 1) --i;
    if (i == 0) return;
    ++elements[i - 1];
    for (std::size_t r = i; r < m; ++r) elements[r] = elements[r - 1] + 1;
  }
}

}  // namespace internal

inline SolverResult greedy(const Instance& inst, const Solution& start) {
  internal::require_affordable_start(inst, start);
  QueryCounter counter;
  auto run = internal::run_greedy(inst, start, CountingOracle(inst.oracle(), counter));
  SolverResult result;
  result.solution = run.trace.final;
  result.value = run.value;
  result.queries = counter.count();
  result.trace = std::move(run.trace);
  if (!start.empty()) result.guess_used = start;
  return result;
}

inline SolverResult greedy(const Instance& inst) {
  return greedy(inst, Solution(inst.n()));
}

// Best over all feasible solutions with fewer than q elements and the greedy
// completions of every feasible size-q guess. Guesses run independently on
// `threads` workers; the reduction keeps the first strictly better result in
// enumeration order.
inline SolverResult q_guess_greedy(const Instance& inst, std::size_t q,
                                   unsigned threads = 1) {
  QueryCounter line1;
  const CountingOracle f(inst.oracle(), line1);
  std::optional<SolverResult> best;
  for (std::size_t m = 0; m < q && m <= inst.n(); ++m) {
    internal::for_each_partial(inst.n(), inst.k(), m, [&](const Solution& x) {
      if (cost(x, inst) > inst.budget()) return true;
      const Value v = f(x);
      if (!best || v > best->value) {
        best = SolverResult{x, v, 0, std::nullopt, std::nullopt};
      }
      return true;
    });
  }

  std::vector<Solution> guesses;
  internal::for_each_partial(inst.n(), inst.k(), q, [&](const Solution& y) {
    if (cost(y, inst) <= inst.budget()) guesses.push_back(y);
    return true;
  });

  std::vector<SolverResult> completions(guesses.size());
  parallel_for(guesses.size(), threads,
               [&](std::size_t g) { completions[g] = greedy(inst, guesses[g]); });

  std::uint64_t queries = line1.count();
  for (auto& completion : completions) {
    queries += completion.queries;
    if (!best || completion.value > best->value) best = std::move(completion);
  }
  if (!best) best = SolverResult{Solution(inst.n()), 0, 0, std::nullopt, std::nullopt};
  best->queries = queries;
  return *best;
}

inline SolverResult best_singleton(const Instance& inst) {
  QueryCounter counter;
  const CountingOracle f(inst.oracle(), counter);
  SolverResult best{Solution(inst.n()), 0, 0, std::nullopt, std::nullopt};
  bool found = false;
  for (std::size_t e = 0; e < inst.n(); ++e) {
    if (inst.cost(e) > inst.budget()) continue;
    for (int j = 1; j <= inst.k(); ++j) {
      const Solution x = Solution(inst.n()).with(e, j);
      const Value v = f(x);
      if (!found || v > best.value) {
        best.solution = x;
        best.value = v;
        found = true;
      }
    }
  }
  best.queries = counter.count();
  return best;
}

inline SolverResult greedy_plus_singleton(const Instance& inst) {
  SolverResult g = greedy(inst);
  SolverResult s = best_singleton(inst);
  const std::uint64_t queries = g.queries + s.queries;
  SolverResult out = s.value > g.value ? std::move(s) : std::move(g);
  out.queries = queries;
  return out;
}

// Greedy from the empty solution, then the best feasible one-element
// augmentation of every accepted prefix (the prefixes themselves included).
inline SolverResult greedy_plus(const Instance& inst) {
  SolverResult g = greedy(inst);
  QueryCounter counter;
  const CountingOracle f(inst.oracle(), counter);

  SolverResult best{Solution(inst.n()), 0, 0, std::nullopt, std::nullopt};
  bool found = false;
  auto consider = [&](const Solution& x, Value v) {
    if (!found || v > best.value) {
      best.solution = x;
      best.value = v;
      found = true;
    }
  };

  Solution prefix(inst.n());
  Value prefix_value = 0;
  Value prefix_cost = 0;
  auto scan = [&] {
    consider(prefix, prefix_value);
    for (std::size_t e = 0; e < inst.n(); ++e) {
      if (prefix.assigned(e) || prefix_cost + inst.cost(e) > inst.budget()) continue;
      for (int j = 1; j <= inst.k(); ++j) {
        const Solution x = prefix.with(e, j);
        consider(x, f(x));
      }
    }
  };
  scan();  // f(∅) = 0 for every oracle
  for (const auto& pick : g.trace->picks) {
    if (!pick.accepted) continue;
    prefix = prefix.with(pick.element, pick.dimension);
    prefix_value += pick.gain;
    prefix_cost += inst.cost(pick.element);
    scan();
  }
  best.queries = g.queries + counter.count();
  best.trace = std::move(g.trace);
  return best;
}

// Decreasing-threshold greedy. For each start (the empty solution and, with
// `with_guess`, every feasible singleton) the threshold runs from the best
// feasible density d down to ε·d/n by factors of 1−ε; each sweep queries
// every unassigned element in index order and adds the first dimension whose
// density reaches the threshold, provided the element fits.
inline SolverResult threshold_greedy(const Instance& inst, const Rational& epsilon,
                                     bool with_guess, unsigned threads = 1) {
  if (epsilon <= 0 || epsilon >= 1) {
    throw Error(ErrorCode::kBadEpsilon, "epsilon must lie in (0, 1)");
  }
  std::vector<Solution> starts{Solution(inst.n())};
  if (with_guess) {
    internal::for_each_partial(inst.n(), inst.k(), 1, [&](const Solution& y) {
      if (cost(y, inst) <= inst.budget()) starts.push_back(y);
      return true;
    });
  }

  auto complete = [&](const Solution& start) {
    QueryCounter counter;
    const CountingOracle f(inst.oracle(), counter);
    Solution current = start;
    Value value = f(current);
    Value spent = cost(current, inst);

    Rational top = 0;
    bool any = false;
    for (std::size_t e = 0; e < inst.n(); ++e) {
      if (current.assigned(e) || spent + inst.cost(e) > inst.budget()) continue;
      for (int j = 1; j <= inst.k(); ++j) {
        const Rational d = make_rational(f(current.with(e, j)) - value, inst.cost(e));
        if (!any || d > top) top = d;
        any = true;
      }
    }
    if (any && top > 0) {
      const Rational floor = epsilon * top / static_cast<long>(inst.n());
      const Rational shrink = 1 - epsilon;
      for (Rational tau = top; tau >= floor; tau *= shrink) {
        for (std::size_t e = 0; e < inst.n(); ++e) {
          if (current.assigned(e)) continue;
          const bool fits = spent + inst.cost(e) <= inst.budget();
          for (int j = 1; j <= inst.k(); ++j) {
            const Value gain = f(current.with(e, j)) - value;
            if (fits && make_rational(gain, inst.cost(e)) >= tau) {
              current = current.with(e, j);
              value += gain;
              spent += inst.cost(e);
              break;
            }
          }
        }
      }
    }
    SolverResult result{current, value, counter.count(), std::nullopt, std::nullopt};
    if (!start.empty()) result.guess_used = start;
    return result;
  };

  std::vector<SolverResult> results(starts.size());
  parallel_for(starts.size(), threads,
               [&](std::size_t s) { results[s] = complete(starts[s]); });
  std::uint64_t queries = 0;
  std::size_t best = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    queries += results[s].queries;
    if (results[s].value > results[best].value) best = s;
  }
  SolverResult out = std::move(results[best]);
  out.queries = queries;
  return out;
}

inline constexpr std::uint64_t kBruteForceMaxSolutions = 65536;

// Exact optimum; among maximizers the lexicographically smallest assignment
// (element 1 most significant) wins.
inline SolverResult brute_force_opt(const Instance& inst) {
  if (solution_count(inst.n(), inst.k(), kBruteForceMaxSolutions) >
      kBruteForceMaxSolutions) {
    throw Error(ErrorCode::kTooLarge, "(k+1)^n exceeds the brute-force cap of 65536");
  }
  QueryCounter counter;
  const CountingOracle f(inst.oracle(), counter);
  std::vector<int> digits(inst.n(), 0);
  SolverResult best{Solution(inst.n()), 0, 0, std::nullopt, std::nullopt};
  bool found = false;
  Value spent = 0;
  for (;;) {
    if (spent <= inst.budget()) {
      const Solution x(digits);
      const Value v = f(x);
      if (!found || v > best.value) {
        best.solution = x;
        best.value = v;
        found = true;
      }
    }
    std::size_t i = inst.n();
    while (i > 0 && digits[i - 1] == inst.k()) {
      digits[--i] = 0;
      spent -= inst.cost(i);
    }
    if (i == 0) break;
    if (digits[i - 1] == 0) spent += inst.cost(i - 1);
    ++digits[i - 1];
  }
  best.queries = counter.count();
  return best;
}

// Replays greedy from `start` and stops the first time the argmax pair is
// rejected for budget while its element belongs to supp(reference).
inline RejectionRecord first_rejection_prefix(const Instance& inst,
                                              const Solution& reference,
                                              const Solution& start) {
  internal::require_affordable_start(inst, start);
  inst.oracle().check_shape(reference);
  QueryCounter counter;
  RejectionRecord record;
  auto hook = [&](const Solution& current, std::size_t e, int j) {
    if (!reference.assigned(e)) return false;
    record.occurred = true;
    record.prefix = current;
    record.rejected_element = e;
    record.rejected_dimension = j;
    return true;
  };
  auto run = internal::run_greedy(inst, start, CountingOracle(inst.oracle(), counter),
                                  hook);
  if (!record.occurred) record.prefix = run.trace.final;
  record.prefix_value = run.value;
  record.accepted = run.trace.accepted();
  const Value reference_cost = cost(reference, inst);
  if (reference_cost > 0) {
    record.beta = make_rational(cost(record.prefix, inst), reference_cost);
  }
  return record;
}

}  // namespace kskm

#endif  // KSKM_SOLVERS_HPP_
