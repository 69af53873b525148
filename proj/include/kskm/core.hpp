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
// Core domain types for k-submodular knapsack maximization: solutions over
// (k+1)^V stored as flat assignment vectors, lattice operations, validated
// instances, and value-oracle query accounting.
//

#ifndef KSKM_CORE_HPP_
#define KSKM_CORE_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kskm {

using Value = std::int64_t;
using Rational = mpq_class;

enum class ErrorCode {
  kZeroCost,
  kEmptyFeasibleSet,
  kBadDimension,
  kLengthMismatch,
  kNotComparable,
  kAlreadyAssigned,
  kShapeMismatch,
  kTooLarge,
  kRejectionBudgetExceeded,
  kCostMismatch,
  kInfeasibleSchedule,
  kStartTooExpensive,
  kBadEpsilon,
  kIoError,
  kSchemaError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroCost: return "ZeroCost";
    case ErrorCode::kEmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kAlreadyAssigned: return "AlreadyAssigned";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kRejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::kCostMismatch: return "CostMismatch";
    case ErrorCode::kInfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorCode::kStartTooExpensive: return "StartTooExpensive";
    case ErrorCode::kBadEpsilon: return "BadEpsilon";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// An element of (k+1)^V. Entry i holds the dimension of element e_{i+1},
// 0 meaning unassigned. Immutable; updates produce a new Solution.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t n) : assignment_(n, 0) {}
  explicit Solution(std::vector<int> assignment)
      : assignment_(std::move(assignment)) {
    for (int v : assignment_) {
      if (v < 0) throw Error(ErrorCode::kShapeMismatch, "negative dimension");
    }
  }
  Solution(std::initializer_list<int> assignment)
      : Solution(std::vector<int>(assignment)) {}

  std::size_t size() const { return assignment_.size(); }
  int operator[](std::size_t i) const { return assignment_[i]; }
  bool assigned(std::size_t i) const { return assignment_[i] != 0; }
  const std::vector<int>& assignment() const { return assignment_; }

  Solution with(std::size_t element, int dimension) const {
    Solution out = *this;
    out.assignment_[element] = dimension;
    return out;
  }

  bool empty() const {
    return std::all_of(assignment_.begin(), assignment_.end(),
                       [](int v) { return v == 0; });
  }

  // Number of assigned elements, |supp(x)|.
  std::size_t support_size() const {
    return static_cast<std::size_t>(std::count_if(
        assignment_.begin(), assignment_.end(), [](int v) { return v != 0; }));
  }

  // Largest dimension used; 0 for the empty solution.
  int max_dimension() const {
    return assignment_.empty()
               ? 0
               : *std::max_element(assignment_.begin(), assignment_.end());
  }

  // Disjoint-subset view (X_1, ..., X_k).
  std::vector<std::vector<std::size_t>> subsets(int k) const {
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
      if (assignment_[i] != 0) {
        out[static_cast<std::size_t>(assignment_[i] - 1)].push_back(i);
      }
    }
    return out;
  }

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution&, const Solution&) = default;

 private:
  std::vector<int> assignment_;
};

inline std::ostream& operator<<(std::ostream& os, const Solution& x) {
  os << '[';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  return os << ']';
}

namespace internal {

inline void require_same_length(const Solution& x, const Solution& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "solutions of length " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  }
}

}  // namespace internal

inline std::vector<std::size_t> support(const Solution& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.assigned(i)) out.push_back(i);
  }
  return out;
}

// x ⊔ y: agreeing or one-sided assignments survive, conflicts cancel.
inline Solution join(const Solution& x, const Solution& y) {
  internal::require_same_length(x, y);
  std::vector<int> out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int a = x[i], b = y[i];
    if (a == 0) {
      out[i] = b;
    } else if (b == 0 || a == b) {
      out[i] = a;
    }
  }
  return Solution(std::move(out));
}

// x ⊓ y: coordinate-wise intersection of the subsets.
inline Solution meet(const Solution& x, const Solution& y) {
  internal::require_same_length(x, y);
  std::vector<int> out(x.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) out[i] = x[i];
  }
  return Solution(std::move(out));
}

// x ⪯ y.
inline bool precedes(const Solution& x, const Solution& y) {
  internal::require_same_length(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0 && x[i] != y[i]) return false;
  }
  return true;
}

// y ∖ x for x ⪯ y.
inline Solution subtract(const Solution& y, const Solution& x) {
  if (!precedes(x, y)) {
    throw Error(ErrorCode::kNotComparable, "subtrahend does not precede");
  }
  std::vector<int> out = y.assignment();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) out[i] = 0;
  }
  return Solution(std::move(out));
}

// Thread-safe tally of full-solution oracle evaluations.
class QueryCounter {
 public:
  QueryCounter() = default;
  QueryCounter(const QueryCounter& other) : count_(other.count()) {}
  QueryCounter& operator=(const QueryCounter& other) {
    count_.store(other.count(), std::memory_order_relaxed);
    return *this;
  }

  void add(std::uint64_t n = 1) { count_.fetch_add(n, std::memory_order_relaxed); }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

// A k-submodular value function f: (k+1)^V -> Z>=0. Implementations are
// immutable and pure; value() does not count queries (see CountingOracle).
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual std::size_t n() const = 0;
  virtual int k() const = 0;
  virtual bool monotone() const = 0;
  virtual std::string family() const = 0;

  // Caller guarantees x has been shape-checked.
  virtual Value value_unchecked(const Solution& x) const = 0;

  // Same function on a ground set extended by `extra` elements that never
  // change the value.
  virtual std::shared_ptr<const ValueOracle> with_null_elements(
      std::size_t extra) const = 0;

  Value value(const Solution& x) const {
    check_shape(x);
    return value_unchecked(x);
  }

  void check_shape(const Solution& x) const {
    if (x.size() != n()) {
      throw Error(ErrorCode::kShapeMismatch,
                  "solution length " + std::to_string(x.size()) +
                      " for oracle over " + std::to_string(n()) + " elements");
    }
    if (x.max_dimension() > k()) {
      throw Error(ErrorCode::kShapeMismatch,
                  "dimension " + std::to_string(x.max_dimension()) +
                      " exceeds k=" + std::to_string(k()));
    }
  }
};

using OraclePtr = std::shared_ptr<const ValueOracle>;

// Oracle view that charges every evaluation to a counter.
class CountingOracle {
 public:
  CountingOracle(const ValueOracle& oracle, QueryCounter& counter)
      : oracle_(&oracle), counter_(&counter) {}

  Value operator()(const Solution& x) const {
    counter_->add();
    return oracle_->value(x);
  }

  const ValueOracle& oracle() const { return *oracle_; }
  QueryCounter& counter() const { return *counter_; }

 private:
  const ValueOracle* oracle_;
  QueryCounter* counter_;
};

inline Value evaluate(const ValueOracle& oracle, const Solution& x,
                      QueryCounter& counter) {
  return CountingOracle(oracle, counter)(x);
}

// Unvalidated instance description, as read from a file or generator.
struct RawInstance {
  std::size_t n = 0;
  int k = 0;
  std::vector<Value> costs;
  Value budget = 0;
  OraclePtr oracle;
};

class Instance {
 public:
  std::size_t n() const { return costs_.size(); }
  int k() const { return k_; }
  const std::vector<Value>& costs() const { return costs_; }
  Value cost(std::size_t element) const { return costs_[element]; }
  Value budget() const { return budget_; }
  const ValueOracle& oracle() const { return *oracle_; }
  const OraclePtr& oracle_ptr() const { return oracle_; }
  bool monotone() const { return oracle_->monotone(); }
  std::string family() const { return oracle_->family(); }

  // Copy with a different budget, revalidated.
  Instance with_budget(Value budget) const;

  // Copy whose ground set is extended by null elements with the given costs.
  Instance with_null_elements(const std::vector<Value>& extra_costs) const;

 private:
  friend Instance validate_instance(const RawInstance& raw);

  int k_ = 0;
  std::vector<Value> costs_;
  Value budget_ = 0;
  OraclePtr oracle_;
};

inline Instance validate_instance(const RawInstance& raw) {
  if (raw.k < 1) {
    throw Error(ErrorCode::kBadDimension, "k must be at least 1");
  }
  if (raw.costs.size() != raw.n) {
    throw Error(ErrorCode::kLengthMismatch,
                "costs has " + std::to_string(raw.costs.size()) +
                    " entries for n=" + std::to_string(raw.n));
  }
  if (raw.n == 0) {
    throw Error(ErrorCode::kEmptyFeasibleSet, "empty ground set");
  }
  for (std::size_t i = 0; i < raw.n; ++i) {
    if (raw.costs[i] <= 0) {
      throw Error(ErrorCode::kZeroCost,
                  "element " + std::to_string(i + 1) + " has cost " +
                      std::to_string(raw.costs[i]));
    }
  }
  const Value min_cost = *std::min_element(raw.costs.begin(), raw.costs.end());
  if (raw.budget < min_cost) {
    throw Error(ErrorCode::kEmptyFeasibleSet,
                "budget " + std::to_string(raw.budget) +
                    " below minimum cost " + std::to_string(min_cost));
  }
  if (raw.oracle) {
    if (raw.oracle->n() != raw.n || raw.oracle->k() != raw.k) {
      throw Error(ErrorCode::kShapeMismatch, "oracle shape differs from instance");
    }
    // Pairwise monotonicity only yields a nonnegative best marginal when
    // there are two dimensions to pair.
    if (!raw.oracle->monotone() && raw.k < 2) {
      throw Error(ErrorCode::kBadDimension,
                  "non-monotone oracles require k >= 2");
    }
  }
  Instance inst;
  inst.k_ = raw.k;
  inst.costs_ = raw.costs;
  inst.budget_ = raw.budget;
  inst.oracle_ = raw.oracle;
  return inst;
}

inline Instance Instance::with_budget(Value budget) const {
  return validate_instance({n(), k_, costs_, budget, oracle_});
}

inline Instance Instance::with_null_elements(
    const std::vector<Value>& extra_costs) const {
  RawInstance raw{n() + extra_costs.size(), k_, costs_, budget_,
                  oracle_->with_null_elements(extra_costs.size())};
  raw.costs.insert(raw.costs.end(), extra_costs.begin(), extra_costs.end());
  return validate_instance(raw);
}

inline Value cost(const Solution& x, const Instance& inst) {
  if (x.size() != inst.n()) {
    throw Error(ErrorCode::kLengthMismatch, "solution length differs from n");
  }
  Value total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.assigned(i)) total += inst.cost(i);
  }
  return total;
}

inline bool feasible(const Solution& x, const Instance& inst) {
  return cost(x, inst) <= inst.budget();
}

// Δ_{e,j}(x). Pass f(x) as `base` to save one query.
inline Value marginal_gain(const Instance& inst, const Solution& x,
                           std::size_t element, int dimension,
                           QueryCounter& counter,
                           std::optional<Value> base = std::nullopt) {
  if (element >= x.size() || dimension < 1 || dimension > inst.k()) {
    throw Error(ErrorCode::kShapeMismatch, "element or dimension out of range");
  }
  if (x.assigned(element)) {
    throw Error(ErrorCode::kAlreadyAssigned,
                "element " + std::to_string(element + 1) + " is in supp(x)");
  }
  CountingOracle f(inst.oracle(), counter);
  const Value fx = base ? *base : f(x);
  return f(x.with(element, dimension)) - fx;
}

inline Rational marginal_density(const Instance& inst, const Solution& x,
                                 std::size_t element, int dimension,
                                 QueryCounter& counter,
                                 std::optional<Value> base = std::nullopt) {
  const Value gain = marginal_gain(inst, x, element, dimension, counter, base);
  Rational density(static_cast<long>(gain), static_cast<long>(inst.cost(element)));
  density.canonicalize();
  return density;
}

// Exact comparison of gain_a/cost_a against gain_b/cost_b with positive costs.
inline int compare_density(Value gain_a, Value cost_a, Value gain_b,
                           Value cost_b) {
  const __int128 lhs = static_cast<__int128>(gain_a) * cost_b;
  const __int128 rhs = static_cast<__int128>(gain_b) * cost_a;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline Rational make_rational(Value num, Value den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

}  // namespace kskm

#endif  // KSKM_CORE_HPP_
