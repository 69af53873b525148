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
// Value-oracle families, exhaustive k-submodularity checking and seeded
// instance generation.
//
// Families:
//   coverage      f(x) = w(∪_j ∪_{e∈X_j} Γ_j(e))                (monotone)
//   disjoint_cut  f(x) = Σ_j cut_G(X_j)                         (non-monotone)
//   tabular       explicit table over (k+1)^n, mixed-radix indexed
//   contracted    f_a(x) = f(x ⊔ a) − f(a), elements of supp(a) inert
//
// The disjoint-cut family is k-submodular: each cut_G is submodular, so the
// per-coordinate sum is orthant submodular, and for e ∉ supp(x) with j ≠ j'
// the two marginals sum to 2·deg(e) − 2·w(e, X_j) − 2·w(e, X_j') ≥ 0 since
// X_j and X_j' are disjoint. Generated instances are checker-certified anyway.
//

#ifndef KSKM_ORACLES_HPP_
#define KSKM_ORACLES_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kskm/core.hpp"

namespace kskm {

// ---------------------------------------------------------------------------
// Mixed-radix indexing: element i is digit i in base k+1, element 1 least
// significant.

inline std::uint64_t solution_count(std::size_t n, int k, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(k + 1);
    if (total > cap) return cap + 1;
  }
  return total;
}

inline std::uint64_t mixed_radix_index(const Solution& x, int k) {
  std::uint64_t index = 0;
  for (std::size_t i = x.size(); i-- > 0;) {
    index = index * static_cast<std::uint64_t>(k + 1) +
            static_cast<std::uint64_t>(x[i]);
  }
  return index;
}

inline Solution solution_at(std::uint64_t index, std::size_t n, int k) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<int>(index % static_cast<std::uint64_t>(k + 1));
    index /= static_cast<std::uint64_t>(k + 1);
  }
  return Solution(std::move(out));
}

// ---------------------------------------------------------------------------

class CoverageOracle final : public ValueOracle {
 public:
  // gamma[i][j-1] lists the universe points covered by element i in
  // dimension j.
  CoverageOracle(std::vector<Value> universe_weights,
                 std::vector<std::vector<std::vector<std::size_t>>> gamma, int k)
      : weights_(std::move(universe_weights)), gamma_(std::move(gamma)), k_(k) {
    for (Value w : weights_) {
      if (w <= 0) throw Error(ErrorCode::kSchemaError, "universe weight must be positive");
    }
    for (const auto& per_dim : gamma_) {
      if (per_dim.size() != static_cast<std::size_t>(k_)) {
        throw Error(ErrorCode::kShapeMismatch, "gamma needs k sets per element");
      }
      for (const auto& points : per_dim) {
        for (std::size_t u : points) {
          if (u >= weights_.size()) {
            throw Error(ErrorCode::kShapeMismatch, "gamma point outside universe");
          }
        }
      }
    }
  }

  std::size_t n() const override { return gamma_.size(); }
  int k() const override { return k_; }
  bool monotone() const override { return true; }
  std::string family() const override { return "coverage"; }

  Value value_unchecked(const Solution& x) const override {
    std::vector<char> seen(weights_.size(), 0);
    Value total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x.assigned(i)) continue;
      for (std::size_t u : gamma_[i][static_cast<std::size_t>(x[i] - 1)]) {
        if (!seen[u]) {
          seen[u] = 1;
          total += weights_[u];
        }
      }
    }
    return total;
  }

  OraclePtr with_null_elements(std::size_t extra) const override {
    auto gamma = gamma_;
    gamma.resize(gamma_.size() + extra,
                 std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(k_)));
    return std::make_shared<CoverageOracle>(weights_, std::move(gamma), k_);
  }

  const std::vector<Value>& universe_weights() const { return weights_; }
  const std::vector<std::vector<std::vector<std::size_t>>>& gamma() const {
    return gamma_;
  }

 private:
  std::vector<Value> weights_;
  std::vector<std::vector<std::vector<std::size_t>>> gamma_;
  int k_;
};

struct Edge {
  std::size_t u;
  std::size_t v;
  Value weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class DisjointCutOracle final : public ValueOracle {
 public:
  DisjointCutOracle(std::size_t n, int k, std::vector<Edge> edges)
      : n_(n), k_(k), edges_(std::move(edges)) {
    for (const Edge& edge : edges_) {
      if (edge.u >= n_ || edge.v >= n_ || edge.u == edge.v) {
        throw Error(ErrorCode::kShapeMismatch, "bad edge endpoint");
      }
      if (edge.weight <= 0) {
        throw Error(ErrorCode::kSchemaError, "edge weight must be positive");
      }
    }
  }

  std::size_t n() const override { return n_; }
  int k() const override { return k_; }
  bool monotone() const override { return false; }
  std::string family() const override { return "disjoint_cut"; }

  // An edge whose endpoints carry different labels is cut once by the part
  // of each assigned endpoint; equal labels are never cut.
  Value value_unchecked(const Solution& x) const override {
    Value total = 0;
    for (const Edge& edge : edges_) {
      const int a = x[edge.u], b = x[edge.v];
      if (a == b) continue;
      total += edge.weight * ((a != 0 ? 1 : 0) + (b != 0 ? 1 : 0));
    }
    return total;
  }

  OraclePtr with_null_elements(std::size_t extra) const override {
    return std::make_shared<DisjointCutOracle>(n_ + extra, k_, edges_);
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t n_;
  int k_;
  std::vector<Edge> edges_;
};

class TabularOracle final : public ValueOracle {
 public:
  static constexpr std::size_t kMaxElements = 6;

  TabularOracle(std::size_t n, int k, std::vector<Value> values,
                bool monotone = false)
      : n_(n), k_(k), values_(std::move(values)), monotone_(monotone) {
    if (n_ > kMaxElements) {
      throw Error(ErrorCode::kTooLarge, "tabular oracles hold at most 6 elements");
    }
    if (values_.size() != solution_count(n_, k_, UINT64_MAX / 8)) {
      throw Error(ErrorCode::kSchemaError,
                  "tabular values need (k+1)^n = " +
                      std::to_string(solution_count(n_, k_, UINT64_MAX / 8)) +
                      " entries, got " + std::to_string(values_.size()));
    }
    if (values_[0] != 0) {
      throw Error(ErrorCode::kSchemaError, "tabular value of the empty solution must be 0");
    }
  }

  std::size_t n() const override { return n_; }
  int k() const override { return k_; }
  bool monotone() const override { return monotone_; }
  std::string family() const override { return "tabular"; }

  Value value_unchecked(const Solution& x) const override {
    return values_[mixed_radix_index(x, k_)];
  }

  // New elements are the most significant digits, so the table is repeated
  // (k+1)^extra times.
  OraclePtr with_null_elements(std::size_t extra) const override {
    std::vector<Value> values;
    const std::uint64_t copies = solution_count(extra, k_, UINT64_MAX / 8);
    values.reserve(values_.size() * copies);
    for (std::uint64_t c = 0; c < copies; ++c) {
      values.insert(values.end(), values_.begin(), values_.end());
    }
    return std::make_shared<TabularOracle>(n_ + extra, k_, std::move(values),
                                           monotone_);
  }

  const std::vector<Value>& values() const { return values_; }

 private:
  std::size_t n_;
  int k_;
  std::vector<Value> values_;
  bool monotone_;
};

// f_a(x) = f(x' ⊔ a) − f(a) where x' is x with the elements of supp(a)
// cleared; the ground set is effectively V ∖ supp(a) and anchored elements
// have no effect.
class ContractedOracle final : public ValueOracle {
 public:
  ContractedOracle(OraclePtr base, Solution anchor)
      : base_(std::move(base)), anchor_(std::move(anchor)) {
    base_->check_shape(anchor_);
    anchor_value_ = base_->value_unchecked(anchor_);
  }

  std::size_t n() const override { return base_->n(); }
  int k() const override { return base_->k(); }
  bool monotone() const override { return base_->monotone(); }
  std::string family() const override { return "contracted"; }

  Value value_unchecked(const Solution& x) const override {
    std::vector<int> merged = anchor_.assignment();
    for (std::size_t i = 0; i < merged.size(); ++i) {
      if (merged[i] == 0) merged[i] = x[i];
    }
    return base_->value_unchecked(Solution(std::move(merged))) - anchor_value_;
  }

  OraclePtr with_null_elements(std::size_t extra) const override {
    std::vector<int> anchor = anchor_.assignment();
    anchor.resize(anchor.size() + extra, 0);
    return std::make_shared<ContractedOracle>(base_->with_null_elements(extra),
                                              Solution(std::move(anchor)));
  }

  const Solution& anchor() const { return anchor_; }
  const ValueOracle& base() const { return *base_; }

 private:
  OraclePtr base_;
  Solution anchor_;
  Value anchor_value_ = 0;
};

inline OraclePtr contract(const OraclePtr& oracle, const Solution& anchor) {
  return std::make_shared<ContractedOracle>(oracle, anchor);
}

// ---------------------------------------------------------------------------
// Exhaustive checks.

inline constexpr std::size_t kCheckerMaxElements = 6;
inline constexpr int kCheckerMaxDimensions = 3;

// Full value table in mixed-radix order; uncounted.
inline std::vector<Value> tabulate(const ValueOracle& oracle,
                                   std::uint64_t cap = 1u << 22) {
  const std::uint64_t total = solution_count(oracle.n(), oracle.k(), cap);
  if (total > cap) {
    throw Error(ErrorCode::kTooLarge, "(k+1)^n exceeds enumeration cap");
  }
  std::vector<Value> table(total);
  std::vector<int> digits(oracle.n(), 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    table[index] = oracle.value_unchecked(Solution(digits));
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] <= oracle.k()) break;
      digits[i] = 0;
    }
  }
  return table;
}

struct KSubmodularityReport {
  enum class Violation { kNone, kOrthantSubmodularity, kPairwiseMonotonicity };

  Violation violation = Violation::kNone;
  // Orthant: Δ_{e,j}(x) < Δ_{e,j}(y) with x ⪯ y.
  // Pairwise: Δ_{e,j}(x) + Δ_{e,j2}(x) < 0.
  Solution x;
  Solution y;
  std::size_t element = 0;
  int dimension = 0;
  int other_dimension = 0;
  Value lhs = 0;
  Value rhs = 0;

  bool ok() const { return violation == Violation::kNone; }

  std::string describe() const {
    std::ostringstream os;
    switch (violation) {
      case Violation::kNone:
        os << "ok";
        break;
      case Violation::kOrthantSubmodularity:
        os << "orthant submodularity violated: x=" << x << " y=" << y
           << " e=" << element + 1 << " j=" << dimension << " Δ(x)=" << lhs
           << " < Δ(y)=" << rhs;
        break;
      case Violation::kPairwiseMonotonicity:
        os << "pairwise monotonicity violated: x=" << x << " e=" << element + 1
           << " j=" << dimension << " j'=" << other_dimension
           << " Δ_j+Δ_j'=" << lhs << " < 0";
        break;
    }
    return os.str();
  }
};

namespace internal {

inline std::vector<std::uint64_t> radix_powers(std::size_t n, int k) {
  std::vector<std::uint64_t> powers(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) {
    powers[i] = powers[i - 1] * static_cast<std::uint64_t>(k + 1);
  }
  return powers;
}

inline void require_checkable(std::size_t n, int k) {
  if (n > kCheckerMaxElements || k > kCheckerMaxDimensions) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive checks are capped at n <= 6, k <= 3");
  }
}

// Checks orthant submodularity along covering pairs x ⋖ y = x + (e'→j');
// transitivity extends it to every x ⪯ y.
inline KSubmodularityReport check_table(const std::vector<Value>& table,
                                        std::size_t n, int k) {
  const auto powers = radix_powers(n, k);
  KSubmodularityReport report;
  std::vector<int> digits(n, 0);
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    for (std::size_t i = 0; i < n; ++i) digits[i] = static_cast<int>((x / powers[i]) % (k + 1));
    for (std::size_t e = 0; e < n; ++e) {
      if (digits[e] != 0) continue;
      for (int j = 1; j <= k; ++j) {
        const Value gain = table[x + j * powers[e]] - table[x];
        for (int j2 = j + 1; j2 <= k; ++j2) {
          const Value other = table[x + j2 * powers[e]] - table[x];
          if (gain + other < 0) {
            report.violation = KSubmodularityReport::Violation::kPairwiseMonotonicity;
            report.x = solution_at(x, n, k);
            report.element = e;
            report.dimension = j;
            report.other_dimension = j2;
            report.lhs = gain + other;
            return report;
          }
        }
        for (std::size_t e2 = 0; e2 < n; ++e2) {
          if (e2 == e || digits[e2] != 0) continue;
          for (int j2 = 1; j2 <= k; ++j2) {
            const std::uint64_t y = x + j2 * powers[e2];
            const Value gain_y = table[y + j * powers[e]] - table[y];
            if (gain < gain_y) {
              report.violation = KSubmodularityReport::Violation::kOrthantSubmodularity;
              report.x = solution_at(x, n, k);
              report.y = solution_at(y, n, k);
              report.element = e;
              report.dimension = j;
              report.lhs = gain;
              report.rhs = gain_y;
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

inline bool table_monotone(const std::vector<Value>& table, std::size_t n, int k) {
  const auto powers = radix_powers(n, k);
  for (std::uint64_t x = 0; x < table.size(); ++x) {
    for (std::size_t e = 0; e < n; ++e) {
      if ((x / powers[e]) % (k + 1) != 0) continue;
      for (int j = 1; j <= k; ++j) {
        if (table[x + j * powers[e]] < table[x]) return false;
      }
    }
  }
  return true;
}

}  // namespace internal

// Orthant submodularity and pairwise monotonicity at every (x, e, j, j').
inline KSubmodularityReport check_k_submodularity(const ValueOracle& oracle,
                                                  std::size_t n, int k) {
  internal::require_checkable(n, k);
  if (oracle.n() != n || oracle.k() != k) {
    throw Error(ErrorCode::kShapeMismatch, "checker shape differs from oracle");
  }
  return internal::check_table(tabulate(oracle), n, k);
}

inline KSubmodularityReport check_k_submodularity(const ValueOracle& oracle) {
  return check_k_submodularity(oracle, oracle.n(), oracle.k());
}

// f(x) ≤ f(y) whenever x ⪯ y, exhaustively.
inline bool is_monotone(const ValueOracle& oracle) {
  internal::require_checkable(oracle.n(), oracle.k());
  return internal::table_monotone(tabulate(oracle), oracle.n(), oracle.k());
}

// The lattice inequality f(x) + f(y) ≥ f(x ⊔ y) + f(x ⊓ y) over all pairs.
// Returns the first violating pair, if any.
inline std::optional<std::pair<Solution, Solution>> find_lattice_violation(
    const ValueOracle& oracle) {
  if (oracle.n() > 5 || oracle.k() > kCheckerMaxDimensions) {
    throw Error(ErrorCode::kTooLarge, "pairwise enumeration is capped at n <= 5, k <= 3");
  }
  const auto table = tabulate(oracle);
  const std::size_t n = oracle.n();
  const int k = oracle.k();
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    const Solution x = solution_at(a, n, k);
    for (std::uint64_t b = a + 1; b < table.size(); ++b) {
      const Solution y = solution_at(b, n, k);
      if (table[a] + table[b] < table[mixed_radix_index(join(x, y), k)] +
                                    table[mixed_radix_index(meet(x, y), k)]) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Seeded generation.

enum class Family { kCoverage, kDisjointCut, kTabularRejection };

inline std::string family_name(Family family) {
  switch (family) {
    case Family::kCoverage: return "coverage";
    case Family::kDisjointCut: return "disjoint_cut";
    case Family::kTabularRejection: return "tabular";
  }
  return "unknown";
}

inline Family parse_family(const std::string& name) {
  if (name == "coverage") return Family::kCoverage;
  if (name == "disjoint_cut" || name == "cut") return Family::kDisjointCut;
  if (name == "tabular" || name == "tabular_rejection") return Family::kTabularRejection;
  throw Error(ErrorCode::kSchemaError, "unknown family '" + name + "'");
}

struct GeneratorParams {
  Family family = Family::kCoverage;
  std::size_t n = 6;
  int k = 2;
  Value cost_min = 1;
  Value cost_max = 5;
  // B = max(ceil(budget_percent/100 · Σc), min c).
  int budget_percent = 50;
  // Coverage.
  std::size_t universe = 10;
  double inclusion_probability = 0.3;
  Value universe_weight_max = 1;
  // Disjoint cut.
  double edge_density = 0.5;
  Value edge_weight_max = 1;
  // Tabular rejection sampling.
  int rejection_cap = 10000;
};

namespace internal {

inline Value draw(std::mt19937_64& rng, Value lo, Value hi) {
  return lo + static_cast<Value>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline std::vector<Value> draw_costs(std::mt19937_64& rng,
                                     const GeneratorParams& params) {
  std::vector<Value> costs(params.n);
  for (auto& c : costs) c = draw(rng, params.cost_min, params.cost_max);
  return costs;
}

inline Value budget_for(const std::vector<Value>& costs, int percent) {
  Value total = 0;
  for (Value c : costs) total += c;
  const Value budget = (total * percent + 99) / 100;
  return std::max(budget, *std::min_element(costs.begin(), costs.end()));
}

inline std::vector<std::vector<std::vector<std::size_t>>> draw_gamma(
    std::mt19937_64& rng, std::size_t n, int k, std::size_t universe, double p) {
  std::vector<std::vector<std::vector<std::size_t>>> gamma(
      n, std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(k)));
  for (auto& per_dim : gamma) {
    for (auto& points : per_dim) {
      for (std::size_t u = 0; u < universe; ++u) {
        if (coin(rng, p)) points.push_back(u);
      }
    }
  }
  return gamma;
}

inline std::vector<Edge> draw_edges(std::mt19937_64& rng, std::size_t n,
                                    double density, Value weight_max) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng, density)) edges.push_back({u, v, draw(rng, 1, weight_max)});
    }
  }
  return edges;
}

// Candidate table for rejection sampling: a random nonnegative mix of
// coverage, disjoint-cut and unary pieces (unary pieces may carry one
// negative entry, which is what makes tables non-monotone), then a few
// random ±1 entry perturbations. Only the checker decides acceptance.
inline std::vector<Value> draw_candidate_table(std::mt19937_64& rng,
                                               std::size_t n, int k) {
  const auto powers = radix_powers(n, k);
  std::vector<Value> table(powers[n], 0);

  const CoverageOracle coverage(
      std::vector<Value>(4, 1), draw_gamma(rng, n, k, 4, 0.35), k);
  const DisjointCutOracle cut(n, k, draw_edges(rng, n, 0.5, 2));
  const Value coverage_scale = draw(rng, 0, 2);
  const Value cut_scale = draw(rng, 0, 2);

  std::vector<std::vector<Value>> unary(n, std::vector<Value>(k + 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!coin(rng, 0.6)) continue;
    Value low = 0;
    int low_dim = 0;
    for (int j = 1; j <= k; ++j) {
      unary[i][j] = draw(rng, -2, 3);
      if (unary[i][j] < low) {
        low = unary[i][j];
        low_dim = j;
      }
    }
    // Pairwise monotonicity of a unary piece: a_j + a_j' >= 0.
    for (int j = 1; j <= k; ++j) {
      if (j != low_dim && unary[i][j] < -low) unary[i][j] = -low;
    }
  }

  for (std::uint64_t index = 0; index < table.size(); ++index) {
    const Solution x = solution_at(index, n, k);
    Value v = coverage_scale * coverage.value_unchecked(x) +
              cut_scale * cut.value_unchecked(x);
    for (std::size_t i = 0; i < n; ++i) v += unary[i][x[i]];
    table[index] = v;
  }

  const int perturbations = static_cast<int>(draw(rng, 0, 6));
  for (int p = 0; p < perturbations; ++p) {
    const std::uint64_t index = 1 + rng() % (table.size() - 1);
    const Value delta = coin(rng, 0.5) ? 1 : -1;
    table[index] += delta;
    if (!check_table(table, n, k).ok()) table[index] -= delta;
  }
  return table;
}

}  // namespace internal

struct GeneratedInstance {
  Instance instance;
  Family family;
  std::uint64_t seed;
  // Rejection-sampling attempts (tabular only).
  int attempts = 1;
};

// Deterministic in (params, seed). Instances with n <= 6 and k <= 3 are
// checker-certified before they are returned.
inline GeneratedInstance generate_instance(const GeneratorParams& params,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (params.n == 0) throw Error(ErrorCode::kEmptyFeasibleSet, "n must be positive");
  if (params.cost_min < 1 || params.cost_max < params.cost_min) {
    throw Error(ErrorCode::kZeroCost, "cost range must satisfy 1 <= min <= max");
  }
  const auto costs = internal::draw_costs(rng, params);
  const Value budget = internal::budget_for(costs, params.budget_percent);

  OraclePtr oracle;
  int attempts = 1;
  switch (params.family) {
    case Family::kCoverage:
      oracle = std::make_shared<CoverageOracle>(
          std::vector<Value>(params.universe, 1),
          internal::draw_gamma(rng, params.n, params.k, params.universe,
                               params.inclusion_probability),
          params.k);
      if (params.universe_weight_max > 1) {
        std::vector<Value> weights(params.universe);
        for (auto& w : weights) w = internal::draw(rng, 1, params.universe_weight_max);
        const auto& base = static_cast<const CoverageOracle&>(*oracle);
        oracle = std::make_shared<CoverageOracle>(std::move(weights), base.gamma(),
                                                  params.k);
      }
      break;
    case Family::kDisjointCut:
      if (params.k < 2) throw Error(ErrorCode::kBadDimension, "disjoint_cut needs k >= 2");
      oracle = std::make_shared<DisjointCutOracle>(
          params.n, params.k,
          internal::draw_edges(rng, params.n, params.edge_density,
                               params.edge_weight_max));
      break;
    case Family::kTabularRejection: {
      if (params.n > 5 || params.k > 3) {
        throw Error(ErrorCode::kTooLarge, "tabular generation is capped at n <= 5, k <= 3");
      }
      if (params.k < 2) throw Error(ErrorCode::kBadDimension, "tabular family needs k >= 2");
      for (attempts = 1;; ++attempts) {
        if (attempts > params.rejection_cap) {
          throw Error(ErrorCode::kRejectionBudgetExceeded,
                      "no k-submodular non-monotone table after " +
                          std::to_string(params.rejection_cap) + " draws");
        }
        auto table = internal::draw_candidate_table(rng, params.n, params.k);
        if (*std::min_element(table.begin(), table.end()) < 0) continue;
        if (!internal::check_table(table, params.n, params.k).ok()) continue;
        if (internal::table_monotone(table, params.n, params.k)) continue;
        oracle = std::make_shared<TabularOracle>(params.n, params.k,
                                                 std::move(table), false);
        break;
      }
      break;
    }
  }

  Instance instance = validate_instance({params.n, params.k, costs, budget, oracle});
  if (params.n <= kCheckerMaxElements && params.k <= kCheckerMaxDimensions) {
    const auto report = check_k_submodularity(*oracle);
    if (!report.ok()) {
      throw Error(ErrorCode::kSchemaError,
                  "generated oracle failed certification: " + report.describe());
    }
  }
  return {std::move(instance), params.family, seed, attempts};
}

}  // namespace kskm

#endif  // KSKM_ORACLES_HPP_
